"""Shared fixtures: common graphs and the generated corpus location."""

from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

from ngbounds.graphs import Graph, family, pair_index

DATA_DIR = Path(__file__).parent / "data"
REPO_ROOT = Path(__file__).parent.parent


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint."""
    from itertools import combinations
    pairs = list(combinations(range(5), 2))
    bits = 0
    for a in range(10):
        for b in range(a + 1, 10):
            if not set(pairs[a]) & set(pairs[b]):
                bits |= 1 << pair_index(a, b)
    return Graph(10, bits)


@pytest.fixture(scope="session")
def graphs9_path() -> Path:
    """Isomorph-free 9-vertex corpus; generated once and cached on disk."""
    path = DATA_DIR / "graphs9.g6"
    if not path.exists():
        subprocess.run(
            [sys.executable, str(REPO_ROOT / "tools" / "gen_isoclasses.py"),
             "--max-n", "9", "--out-dir", str(DATA_DIR), "--write-from", "8"],
            check=True, timeout=3600)
    return path


@pytest.fixture(scope="session")
def graphs8_path(graphs9_path) -> Path:
    return DATA_DIR / "graphs8.g6"


def c5() -> Graph:
    return family("cycle", 5)


def k4() -> Graph:
    return family("complete", 4)
