"""Kernel backend selection: compiled extension if importable, else pure Python.

Set NGBOUNDS_BACKEND=python (or =compiled) to force a choice; forcing
"compiled" raises if the extension is missing rather than silently falling
back.
"""

from __future__ import annotations

import os

from . import _pykernels

_forced = os.environ.get("NGBOUNDS_BACKEND", "").strip().lower()

_kernels = None
if _forced != "python":
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        _kernels = None
        if _forced == "compiled":
            raise ImportError(
                "NGBOUNDS_BACKEND=compiled but the ngbounds._kernels extension "
                "is not built; run `pip install -e .` with a C compiler")

ACTIVE = "compiled" if _kernels is not None else "python"

# subset-DP coloring is 3^n: it beats branch-and-bound only for small n
CHI_KERNEL_CAP = 10


def tri_bytes(n: int, bits: int) -> bytes:
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return bits.to_bytes(max(nbytes, 1), "little")


def adj_eigenvalues(n: int, bits: int) -> list[float]:
    """Adjacency eigenvalues from packed triangle bits, sorted descending."""
    buf = tri_bytes(n, bits)
    if _kernels is not None:
        return _kernels.adj_eigenvalues(n, buf)
    return _pykernels.adj_eigenvalues(n, buf)


def exact_inertia(n: int, bits: int) -> tuple[int, int, int]:
    """Exact (positive, negative, zero) eigenvalue counts."""
    buf = tri_bytes(n, bits)
    if _kernels is not None:
        try:
            return _kernels.exact_inertia(n, buf)
        except _kernels.KernelOverflow:
            pass
    return _pykernels.exact_inertia(n, buf)


def chromatic_number_fast(n: int, adj_masks: list[int]) -> int | None:
    """Kernel-accelerated exact chromatic number, or None when unavailable."""
    if _kernels is not None and n <= CHI_KERNEL_CAP:
        return _kernels.chromatic_number_small(n, adj_masks)
    return None


class ConvergenceFailure(RuntimeError):
    """Raised by the spectral layer when the eigensolver does not converge."""


def kernel_convergence_error():
    """Exception type the compiled eigensolver raises on non-convergence."""
    if _kernels is not None:
        return _kernels.KernelConvergenceError
    return ()
