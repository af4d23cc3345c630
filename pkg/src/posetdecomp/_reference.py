"""Pure-Python scan kernels (reference semantics for the compiled twins).

Both kernels walk the permutation tree of 0..n-1 and prune any prefix that
already realizes the forbidden pattern: appending v at position i3 completes a
pattern exactly when some earlier pair i1 < i2 has perm[i1] below v and v
below perm[i2] under the supplied comparison matrix, so checking only the
freshly appended element is complete.

`pattern` and `lt` are row-major n*n 0/1 bytes; pattern[x*n+y] means x is
pattern-below y (the strict order itself for plain pattern avoidance, or
"earlier in a reference extension" for the extension-relative variant), and lt
is always the strict order, used for descent counting.  An adjacency that is
not a strict ascent counts as a descent, and one extra descent is charged at
the final position, so a nonempty permutation has between 1 and n descents.
"""

from __future__ import annotations


def min_descents(pattern: bytes, lt: bytes, n: int) -> int:
    """Minimum descent count over all pattern-avoiding permutations."""
    if n == 0:
        return 0
    if len(pattern) != n * n or len(lt) != n * n:
        raise ValueError("matrix size mismatch")
    best = n + 1
    perm = [0] * n
    used = [False] * n

    def scan(depth: int, partial: int) -> None:
        nonlocal best
        if depth == n:
            best = partial + 1
            return
        for v in range(n):
            if used[v]:
                continue
            seen_small = False
            bad = False
            vrow = v * n
            for j in range(depth):
                pj = perm[j]
                if seen_small and pattern[vrow + pj]:
                    bad = True
                    break
                if pattern[pj * n + v]:
                    seen_small = True
            if bad:
                continue
            nd = partial
            if depth > 0 and not lt[perm[depth - 1] * n + v]:
                nd += 1
            if nd + 1 >= best:
                continue
            perm[depth] = v
            used[v] = True
            scan(depth + 1, nd)
            used[v] = False

    scan(0, 0)
    return best


def permutations_avoiding(pattern: bytes, n: int) -> list[tuple[int, ...]]:
    """All pattern-avoiding permutations of 0..n-1, in lexicographic order."""
    if n == 0:
        return [()]
    if len(pattern) != n * n:
        raise ValueError("matrix size mismatch")
    out: list[tuple[int, ...]] = []
    perm = [0] * n
    used = [False] * n

    def scan(depth: int) -> None:
        if depth == n:
            out.append(tuple(perm))
            return
        for v in range(n):
            if used[v]:
                continue
            seen_small = False
            bad = False
            vrow = v * n
            for j in range(depth):
                pj = perm[j]
                if seen_small and pattern[vrow + pj]:
                    bad = True
                    break
                if pattern[pj * n + v]:
                    seen_small = True
            if bad:
                continue
            perm[depth] = v
            used[v] = True
            scan(depth + 1)
            used[v] = False

    scan(0)
    return out
