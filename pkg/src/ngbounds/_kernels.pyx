# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for the hot per-graph primitives.

Eigenvalues: Householder reduction to tridiagonal form followed by
implicit-shift QL, values only, for dense symmetric matrices up to 64x64.

Exact inertia: symmetric congruence diagonalization over rationals held as
reduced int64 fractions, with the hyperbolic 2x2 pivot when every remaining
diagonal entry is zero.  Magnitudes are capped; a KernelOverflow tells the
caller to redo the computation with arbitrary-precision fractions.

Coloring: exact chromatic number by dynamic programming over vertex subsets
(minimum number of independent sets covering the graph), for n <= 16.
"""

from libc.math cimport fabs, sqrt, hypot
from libc.string cimport memset

cdef enum:
    NMAX = 64
    CHI_NMAX = 16
    QL_MAX_ITER = 50

cdef double EPS = 2.220446049250313e-16
cdef long long FRAC_CAP = 1073741824LL      # 2^30 keeps every intermediate in int64


class KernelOverflow(ArithmeticError):
    """Rational magnitudes outgrew the int64 kernel; retry with Fractions."""


class KernelConvergenceError(RuntimeError):
    """QL iteration failed to converge."""


# ---------------------------------------------------------------------------
# eigenvalues
# ---------------------------------------------------------------------------

cdef void _unpack_adjacency(int n, const unsigned char* tri, double* a) nogil:
    # bit t of tri = pair (i,j) with t = j(j-1)/2 + i, little-endian bytes
    cdef int i, j, t
    memset(a, 0, n * n * sizeof(double))
    t = 0
    for j in range(1, n):
        for i in range(j):
            if tri[t >> 3] >> (t & 7) & 1:
                a[i * n + j] = 1.0
                a[j * n + i] = 1.0
            t += 1


cdef void _tridiagonalize(int n, double* a, double* d, double* e) nogil:
    # Householder reduction, values only; a is destroyed.
    cdef int i, j, k, l
    cdef double scale, h, hh, f, g
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        scale = 0.0
        if l > 0:
            for k in range(l + 1):
                scale += fabs(a[i * n + k])
            if scale == 0.0:
                e[i] = a[i * n + l]
            else:
                for k in range(l + 1):
                    a[i * n + k] /= scale
                    h += a[i * n + k] * a[i * n + k]
                f = a[i * n + l]
                g = -sqrt(h) if f >= 0.0 else sqrt(h)
                e[i] = scale * g
                h -= f * g
                a[i * n + l] = f - g
                f = 0.0
                for j in range(l + 1):
                    g = 0.0
                    for k in range(j + 1):
                        g += a[j * n + k] * a[i * n + k]
                    for k in range(j + 1, l + 1):
                        g += a[k * n + j] * a[i * n + k]
                    e[j] = g / h
                    f += e[j] * a[i * n + j]
                hh = f / (h + h)
                for j in range(l + 1):
                    f = a[i * n + j]
                    g = e[j] - hh * f
                    e[j] = g
                    for k in range(j + 1):
                        a[j * n + k] -= f * e[k] + g * a[i * n + k]
        else:
            e[i] = a[i * n + l]
        d[i] = h
    e[0] = 0.0
    for i in range(n):
        d[i] = a[i * n + i]


cdef int _ql_implicit(int n, double* d, double* e) nogil:
    # Implicit-shift QL on tridiagonal (d, e); nonzero return = no convergence.
    cdef int i, l, m, it
    cdef double b, c, dd, f, g, p, r, s
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > QL_MAX_ITER:
                return 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = 1.0
            c = 1.0
            p = 0.0
            r = 1.0
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if r == 0.0 and i >= l:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return 0


cdef int _eig_core(int n, const unsigned char* tri, double* evals) nogil:
    cdef double a[NMAX * NMAX]
    cdef double d[NMAX]
    cdef double e[NMAX]
    cdef int i, j
    cdef double t
    _unpack_adjacency(n, tri, a)
    _tridiagonalize(n, a, d, e)
    if _ql_implicit(n, d, e):
        return 1
    # insertion sort, descending
    for i in range(1, n):
        t = d[i]
        j = i - 1
        while j >= 0 and d[j] < t:
            d[j + 1] = d[j]
            j -= 1
        d[j + 1] = t
    for i in range(n):
        evals[i] = d[i]
    return 0


def adj_eigenvalues(int n, bytes tri):
    """Eigenvalues of the packed adjacency matrix, sorted descending."""
    cdef double evals[NMAX]
    cdef const unsigned char* buf = tri
    if n < 1 or n > NMAX:
        raise ValueError(f"n={n} outside 1..{NMAX}")
    if len(tri) < (n * (n - 1) // 2 + 7) // 8:
        raise ValueError("triangle byte buffer too short")
    if _eig_core(n, buf, evals):
        raise KernelConvergenceError("QL iteration did not converge")
    return [evals[i] for i in range(n)]


# ---------------------------------------------------------------------------
# exact inertia
# ---------------------------------------------------------------------------

cdef long long _gcd64(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef int _frac_reduce(long long* num, long long* den) nogil:
    cdef long long g
    if num[0] == 0:
        den[0] = 1
        return 0
    if den[0] < 0:
        num[0] = -num[0]
        den[0] = -den[0]
    g = _gcd64(num[0], den[0])
    num[0] //= g
    den[0] //= g
    if num[0] >= FRAC_CAP or num[0] <= -FRAC_CAP or den[0] >= FRAC_CAP:
        return 1
    return 0


cdef int _frac_mul(long long an, long long ad, long long bn, long long bd,
                   long long* rn, long long* rd) nogil:
    rn[0] = an * bn
    rd[0] = ad * bd
    return _frac_reduce(rn, rd)


cdef int _frac_add(long long an, long long ad, long long bn, long long bd,
                   long long* rn, long long* rd) nogil:
    cdef long long g = _gcd64(ad, bd)
    rn[0] = an * (bd // g) + bn * (ad // g)
    rd[0] = ad * (bd // g)
    return _frac_reduce(rn, rd)


def exact_inertia(int n, bytes tri):
    """Inertia (positive, negative, zero counts) of the adjacency matrix."""
    cdef long long num[NMAX][NMAX]
    cdef long long den[NMAX][NMAX]
    cdef int active[NMAX]
    cdef int nact, i, j, k, v, ii, jj, a, b
    cdef int pi = 0, nu = 0, gamma = 0
    cdef long long pn, pd, qn, qd, rn, rd, sn, sd
    cdef const unsigned char* buf
    cdef int t

    if n < 1 or n > NMAX:
        raise ValueError(f"n={n} outside 1..{NMAX}")
    if len(tri) < (n * (n - 1) // 2 + 7) // 8:
        raise ValueError("triangle byte buffer too short")
    buf = tri

    for i in range(n):
        for j in range(n):
            num[i][j] = 0
            den[i][j] = 1
    t = 0
    for j in range(1, n):
        for i in range(j):
            if buf[t >> 3] >> (t & 7) & 1:
                num[i][j] = 1
                num[j][i] = 1
            t += 1
    for i in range(n):
        active[i] = i
    nact = n

    while nact > 0:
        # 1x1 pivot: first active index with nonzero diagonal
        a = -1
        for ii in range(nact):
            i = active[ii]
            if num[i][i] != 0:
                a = ii
                break
        if a >= 0:
            i = active[a]
            pn = num[i][i]
            pd = den[i][i]
            if pn > 0:
                pi += 1
            else:
                nu += 1
            for ii in range(nact):
                if ii == a:
                    continue
                j = active[ii]
                if num[j][i] == 0:
                    continue
                if _frac_mul(num[j][i], den[j][i], pd, pn, &qn, &qd):
                    raise KernelOverflow()
                for jj in range(ii, nact):
                    if jj == a:
                        continue
                    k = active[jj]
                    if num[i][k] == 0:
                        continue
                    if _frac_mul(qn, qd, num[i][k], den[i][k], &rn, &rd):
                        raise KernelOverflow()
                    if _frac_add(num[j][k], den[j][k], -rn, rd, &sn, &sd):
                        raise KernelOverflow()
                    num[j][k] = sn
                    den[j][k] = sd
                    num[k][j] = sn
                    den[k][j] = sd
            _drop_one(active, &nact, a)
            continue

        # every active diagonal is zero: find a nonzero off-diagonal pair
        a = -1
        b = -1
        for ii in range(nact):
            i = active[ii]
            for jj in range(ii + 1, nact):
                j = active[jj]
                if num[i][j] != 0:
                    a = ii
                    b = jj
                    break
            if a >= 0:
                break
        if a < 0:
            gamma += nact
            break

        # hyperbolic 2x2 block [[0, c], [c, 0]]: one positive, one negative
        i = active[a]
        j = active[b]
        pi += 1
        nu += 1
        pn = num[i][j]
        pd = den[i][j]
        for ii in range(nact):
            if ii == a or ii == b:
                continue
            k = active[ii]
            for jj in range(ii, nact):
                if jj == a or jj == b:
                    continue
                v = active[jj]
                # A[k][v] -= (A[k][i]*A[j][v] + A[k][j]*A[i][v]) / c
                if _frac_mul(num[k][i], den[k][i], num[j][v], den[j][v], &qn, &qd):
                    raise KernelOverflow()
                if _frac_mul(num[k][j], den[k][j], num[i][v], den[i][v], &rn, &rd):
                    raise KernelOverflow()
                if _frac_add(qn, qd, rn, rd, &sn, &sd):
                    raise KernelOverflow()
                if _frac_mul(sn, sd, pd, pn, &rn, &rd):
                    raise KernelOverflow()
                if _frac_add(num[k][v], den[k][v], -rn, rd, &sn, &sd):
                    raise KernelOverflow()
                num[k][v] = sn
                den[k][v] = sd
                num[v][k] = sn
                den[v][k] = sd
        _drop_one(active, &nact, b)
        _drop_one(active, &nact, a)

    return pi, nu, gamma


cdef void _drop_one(int* active, int* nact, int pos) nogil:
    cdef int i
    for i in range(pos, nact[0] - 1):
        active[i] = active[i + 1]
    nact[0] -= 1


# ---------------------------------------------------------------------------
# exact chromatic number, subset dynamic programming
# ---------------------------------------------------------------------------

cdef unsigned char _ind_tab[1 << CHI_NMAX]
cdef unsigned char _chi_tab[1 << CHI_NMAX]


def chromatic_number_small(int n, adj_masks):
    """Exact chromatic number for n <= 16 via independent-set cover DP."""
    cdef unsigned int adj[CHI_NMAX]
    cdef unsigned int mask, full, rest, sub, iset, low
    cdef int v, best, c
    if n < 1 or n > CHI_NMAX:
        raise ValueError(f"n={n} outside 1..{CHI_NMAX}")
    for v in range(n):
        adj[v] = adj_masks[v]
    full = (<unsigned int>1 << n) - 1

    _ind_tab[0] = 1
    mask = 1
    while mask <= full:
        low = mask & (<unsigned int>0 - mask)
        v = _ctz(low)
        rest = mask ^ low
        _ind_tab[mask] = 1 if (_ind_tab[rest] and (adj[v] & rest) == 0) else 0
        mask += 1

    _chi_tab[0] = 0
    mask = 1
    while mask <= full:
        low = mask & (<unsigned int>0 - mask)
        rest = mask ^ low
        best = CHI_NMAX + 1
        # independent subsets of mask containing the lowest set vertex
        sub = rest
        while True:
            iset = sub | low
            if _ind_tab[iset]:
                c = _chi_tab[mask ^ iset] + 1
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        _chi_tab[mask] = <unsigned char>best
        mask += 1
    return int(_chi_tab[full])


cdef int _ctz(unsigned int x) nogil:
    cdef int c = 0
    while not x & 1:
        x >>= 1
        c += 1
    return c


def backend_name():
    return "compiled"
