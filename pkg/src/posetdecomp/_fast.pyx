# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled scan kernels; contracts and pruning logic match _reference.py."""

cdef enum:
    MAXN = 16


def min_descents(const unsigned char[::1] pattern, const unsigned char[::1] lt, Py_ssize_t n):
    """Minimum descent count over all pattern-avoiding permutations."""
    if n == 0:
        return 0
    if n > MAXN:
        raise ValueError(f"compiled kernel capped at n <= {MAXN}")
    if pattern.shape[0] != n * n or lt.shape[0] != n * n:
        raise ValueError("matrix size mismatch")
    cdef int best = <int> n + 1
    cdef int perm[MAXN]
    _scan_min(&pattern[0], &lt[0], <int> n, perm, 0, 0, 0, &best)
    return best


cdef void _scan_min(const unsigned char* pattern, const unsigned char* lt, int n,
                    int* perm, int depth, unsigned int used, int partial,
                    int* best) noexcept:
    cdef int v, j, pj, nd
    cdef bint seen_small, bad
    if depth == n:
        best[0] = partial + 1
        return
    for v in range(n):
        if used & (1u << v):
            continue
        seen_small = False
        bad = False
        for j in range(depth):
            pj = perm[j]
            if seen_small and pattern[v * n + pj]:
                bad = True
                break
            if pattern[pj * n + v]:
                seen_small = True
        if bad:
            continue
        nd = partial
        if depth > 0 and not lt[perm[depth - 1] * n + v]:
            nd += 1
        if nd + 1 >= best[0]:
            continue
        perm[depth] = v
        _scan_min(pattern, lt, n, perm, depth + 1, used | (1u << v), nd, best)


def permutations_avoiding(const unsigned char[::1] pattern, Py_ssize_t n):
    """All pattern-avoiding permutations of 0..n-1, in lexicographic order."""
    if n == 0:
        return [()]
    if n > MAXN:
        raise ValueError(f"compiled kernel capped at n <= {MAXN}")
    if pattern.shape[0] != n * n:
        raise ValueError("matrix size mismatch")
    out: list = []
    cdef int perm[MAXN]
    _scan_all(&pattern[0], <int> n, perm, 0, 0, out)
    return out


cdef _scan_all(const unsigned char* pattern, int n, int* perm, int depth,
               unsigned int used, list out):
    cdef int v, j, pj
    cdef bint seen_small, bad
    if depth == n:
        out.append(tuple([perm[j] for j in range(n)]))
        return
    for v in range(n):
        if used & (1u << v):
            continue
        seen_small = False
        bad = False
        for j in range(depth):
            pj = perm[j]
            if seen_small and pattern[v * n + pj]:
                bad = True
                break
            if pattern[pj * n + v]:
                seen_small = True
        if bad:
            continue
        perm[depth] = v
        _scan_all(pattern, n, perm, depth + 1, used | (1u << v), out)
