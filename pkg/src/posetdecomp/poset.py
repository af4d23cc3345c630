"""Finite posets stored as dense boolean strict-order matrices.

Element labels are opaque (hashable) values kept in input order; every
operation works on dense indices 0..n-1 internally.  The matrix `lt` holds the
full strict order (transitively closed), which makes comparability and
interval queries O(1) at the price of O(n^2) memory; the posets this package
targets are small enough that exhaustive verification dominates everything.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CycleError,
    ScopeExceededError,
    UnknownElementError,
)

LINEAR_EXTENSION_CAP = 10
AUTOMORPHISM_CAP = 9
POSET_ENUMERATION_CAP = 5


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Boolean transitive closure by repeated squaring."""
    closed = rel.astype(np.int64)
    while True:
        grown = (((closed @ closed) > 0) | (closed > 0)).astype(np.int64)
        if np.array_equal(grown, closed):
            return closed.astype(bool)
        closed = grown


class Poset:
    """A finite strict partial order over an ordered tuple of labels."""

    def __init__(self, labels: Sequence, lt: np.ndarray):
        labels = tuple(labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValueError("duplicate element labels")
        lt = np.asarray(lt, dtype=bool)
        if lt.shape != (n, n):
            raise ValueError(f"matrix shape {lt.shape} does not match {n} elements")
        if lt.diagonal().any():
            raise ValueError("strict order cannot be reflexive")
        if (lt & lt.T).any():
            raise ValueError("strict order cannot be symmetric on any pair")
        lt_int = lt.astype(np.int64)
        if (~lt & ((lt_int @ lt_int) > 0)).any():
            raise ValueError("relation is not transitively closed")
        lt = lt.copy()
        lt.setflags(write=False)
        self.labels = labels
        self.lt = lt
        self._index = {x: i for i, x in enumerate(labels)}
        self._lt_bytes: bytes | None = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_cover_relations(cls, labels: Sequence, covers: Iterable[tuple]) -> "Poset":
        """Build from Hasse-style cover pairs (x, y) meaning x < y.

        Any set of acyclic relations works (redundant, transitively implied
        pairs are fine); a directed cycle raises CycleError with a witness.
        """
        labels = tuple(labels)
        index = {x: i for i, x in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("duplicate element labels")
        n = len(labels)
        rel = np.zeros((n, n), dtype=bool)
        for x, y in covers:
            if x not in index:
                raise UnknownElementError(x)
            if y not in index:
                raise UnknownElementError(y)
            rel[index[x], index[y]] = True
        cycle = _find_cycle(rel)
        if cycle is not None:
            raise CycleError([labels[i] for i in cycle])
        return cls(labels, transitive_closure(rel))

    @property
    def n(self) -> int:
        return len(self.labels)

    def idx(self, x) -> int:
        """Dense index of a label."""
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElementError(x) from None

    def label(self, i: int):
        return self.labels[i]

    @property
    def lt_bytes(self) -> bytes:
        """Row-major 0/1 bytes of the strict order, for the scan kernels."""
        if self._lt_bytes is None:
            self._lt_bytes = self.lt.astype(np.uint8).tobytes()
        return self._lt_bytes

    # -- queries -----------------------------------------------------------

    def less(self, x, y) -> bool:
        return bool(self.lt[self.idx(x), self.idx(y)])

    def leq(self, x, y) -> bool:
        i, j = self.idx(x), self.idx(y)
        return i == j or bool(self.lt[i, j])

    def comparable(self, x, y) -> bool:
        i, j = self.idx(x), self.idx(y)
        return i == j or bool(self.lt[i, j]) or bool(self.lt[j, i])

    def covers(self) -> list[tuple]:
        """Hasse diagram pairs (x, y), in element input order."""
        lt_int = self.lt.astype(np.int64)
        composite = (lt_int @ lt_int) > 0
        hasse = self.lt & ~composite
        return [
            (self.labels[i], self.labels[j])
            for i in range(self.n)
            for j in range(self.n)
            if hasse[i, j]
        ]

    def induced(self, keep: Iterable) -> "Poset":
        """Sub-poset on a subset of labels, in the order given."""
        idxs = [self.idx(x) for x in keep]
        if len(set(idxs)) != len(idxs):
            raise ValueError("duplicate element in subset")
        sub = self.lt[np.ix_(idxs, idxs)]
        return Poset([self.labels[i] for i in idxs], sub)

    def without(self, x) -> "Poset":
        """Sub-poset after deleting one element."""
        i = self.idx(x)
        return self.induced([lab for j, lab in enumerate(self.labels) if j != i])

    def minimal_elements(self) -> list:
        return [self.labels[i] for i in range(self.n) if not self.lt[:, i].any()]

    def maximal_elements(self) -> list:
        return [self.labels[i] for i in range(self.n) if not self.lt[i, :].any()]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poset)
            and self.labels == other.labels
            and np.array_equal(self.lt, other.lt)
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.lt.tobytes()))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={len(self.covers())})"


def _find_cycle(rel: np.ndarray) -> list[int] | None:
    """Witness cycle (as an index list) in a directed relation, else None."""
    n = rel.shape[0]
    color = [0] * n  # 0 unvisited, 1 on stack, 2 done
    stack: list[int] = []

    def visit(v: int) -> list[int] | None:
        color[v] = 1
        stack.append(v)
        for w in np.flatnonzero(rel[v]):
            w = int(w)
            if color[w] == 1:
                return stack[stack.index(w):]
            if color[w] == 0:
                found = visit(w)
                if found is not None:
                    return found
        stack.pop()
        color[v] = 2
        return None

    for v in range(n):
        if color[v] == 0:
            found = visit(v)
            if found is not None:
                return found
    return None


# -- signed chain counts and the Mobius function ---------------------------


def signed_chain_count_matrix(p: Poset) -> list[list[int]]:
    """Matrix of signed counts of strictly increasing chains x to y.

    Entry (x, y) sums (-1)^s over all chains x = z_0 < z_1 < ... < z_s = y;
    the single length-0 chain contributes +1 on the diagonal.  Computed as the
    alternating sum of powers of the strict adjacency matrix (the power A^s
    counts s-step chains), with exact Python integers.
    """
    n = p.n
    adj = [[1 if p.lt[i, j] else 0 for j in range(n)] for i in range(n)]
    total = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    power = [row[:] for row in total]
    sign = 1
    for _ in range(n - 1):
        power = _int_matmul(power, adj)
        if not any(any(row) for row in power):
            break
        sign = -sign
        for i in range(n):
            ti, pi = total[i], power[i]
            for j in range(n):
                ti[j] += sign * pi[j]
    return total


def signed_chain_count(p: Poset, x, y) -> int:
    """Signed count of increasing chains from x to y (0 unless x <= y)."""
    return signed_chain_count_matrix(p)[p.idx(x)][p.idx(y)]


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai, oi = a[i], out[i]
        for k in range(n):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(n):
                    if bk[j]:
                        oi[j] += aik * bk[j]
    return out


def mobius_matrix(p: Poset) -> list[list[int]]:
    """Mobius function of the poset as a dense integer matrix."""
    n = p.n
    mu = [[0] * n for _ in range(n)]
    # process targets in linear-extension order so mu(x, z) is ready for z < y
    order = _topological_order(p)
    for x in range(n):
        mu[x][x] = 1
        for y in order:
            if p.lt[x, y]:
                acc = 0
                for z in range(n):
                    if (z == x or p.lt[x, z]) and p.lt[z, y]:
                        acc += mu[x][z]
                mu[x][y] = -acc
    return mu


def mobius(p: Poset, x, y) -> int:
    """Mobius function mu(x, y); 0 when x and y are not ordered x <= y."""
    i, j = p.idx(x), p.idx(y)
    if i == j:
        return 1
    if not p.lt[i, j]:
        return 0
    return mobius_matrix(p)[i][j]


def _topological_order(p: Poset) -> list[int]:
    order = sorted(range(p.n), key=lambda i: int(p.lt[:, i].sum()))
    return order


# -- linear extensions ------------------------------------------------------


def linear_extensions(p: Poset, cap: int | None = LINEAR_EXTENSION_CAP) -> Iterator[tuple]:
    """Yield every linear extension (as a label tuple) exactly once.

    Refuses n > cap up front; pass cap=None to lift the guard.
    """
    if cap is not None and p.n > cap:
        raise ScopeExceededError(
            f"linear extension enumeration capped at n <= {cap} (got n = {p.n})"
        )
    return _linear_extensions_iter(p)


def _linear_extensions_iter(p: Poset) -> Iterator[tuple]:
    n = p.n
    preds = [int(p.lt[:, i].sum()) for i in range(n)]
    out: list[int] = []

    def extend() -> Iterator[tuple]:
        if len(out) == n:
            yield tuple(p.labels[i] for i in out)
            return
        for i in range(n):
            if preds[i] == 0:
                preds[i] = -1
                succs = [int(j) for j in np.flatnonzero(p.lt[i])]
                for j in succs:
                    preds[j] -= 1
                out.append(i)
                yield from extend()
                out.pop()
                for j in succs:
                    preds[j] += 1
                preds[i] = 0

    return extend()


def is_linear_extension(p: Poset, seq: Sequence) -> bool:
    """True iff seq lists every element once and never places y before x < y."""
    idxs = [p.idx(x) for x in seq]
    if len(idxs) != p.n or len(set(idxs)) != p.n:
        return False
    for a, i in enumerate(idxs):
        for j in idxs[a + 1:]:
            if p.lt[j, i]:
                return False
    return True


def count_linear_extensions(p: Poset, cap: int | None = LINEAR_EXTENSION_CAP) -> int:
    return sum(1 for _ in linear_extensions(p, cap=cap))


# -- automorphisms and isomorphism ------------------------------------------


def _refined_signatures(lt: np.ndarray) -> list:
    """Invariant per element, stable under automorphism, used for pruning."""
    n = lt.shape[0]
    sig: list = [(int(lt[:, i].sum()), int(lt[i, :].sum())) for i in range(n)]
    for _ in range(2):
        codes = {s: r for r, s in enumerate(sorted(set(sig)))}
        enc = [codes[s] for s in sig]
        sig = [
            (
                enc[i],
                tuple(sorted(enc[j] for j in range(n) if lt[j, i])),
                tuple(sorted(enc[j] for j in range(n) if lt[i, j])),
            )
            for i in range(n)
        ]
    return sig


def _order_search(
    lt_a: np.ndarray, lt_b: np.ndarray, find_all: bool
) -> list[tuple[int, ...]]:
    """Backtracking search for order isomorphisms lt_a -> lt_b."""
    n = lt_a.shape[0]
    if lt_b.shape[0] != n:
        return []
    sig_a = _refined_signatures(lt_a)
    sig_b = _refined_signatures(lt_b)
    if sorted(sig_a) != sorted(sig_b):
        return []
    candidates = [
        [j for j in range(n) if sig_b[j] == sig_a[i]] for i in range(n)
    ]
    image = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def place(i: int) -> bool:
        if i == n:
            found.append(tuple(image))
            return not find_all
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for k in range(i):
                if lt_a[i, k] != lt_b[j, image[k]] or lt_a[k, i] != lt_b[image[k], j]:
                    ok = False
                    break
            if ok:
                image[i] = j
                used[j] = True
                if place(i + 1):
                    return True
                used[j] = False
                image[i] = -1
        return False

    place(0)
    return found


def automorphisms(p: Poset, cap: int | None = AUTOMORPHISM_CAP) -> list[tuple[int, ...]]:
    """All order automorphisms as index tuples sigma (element i maps to sigma[i]).

    Plain backtracking with signature pruning; refuses n > cap.
    """
    if cap is not None and p.n > cap:
        raise ScopeExceededError(
            f"automorphism search capped at n <= {cap} (got n = {p.n})"
        )
    return _order_search(p.lt, p.lt, find_all=True)


def isomorphic(p: Poset, q: Poset, cap: int | None = AUTOMORPHISM_CAP) -> bool:
    """True iff some bijection of labels carries one strict order to the other."""
    if p.n != q.n:
        return False
    if cap is not None and p.n > cap:
        raise ScopeExceededError(
            f"isomorphism search capped at n <= {cap} (got n = {p.n})"
        )
    return bool(_order_search(p.lt, q.lt, find_all=False))


# -- exhaustive enumeration of labeled posets --------------------------------


def enumerate_posets(n: int, cap: int | None = POSET_ENUMERATION_CAP) -> Iterator[Poset]:
    """Every labeled poset on elements "0".."n-1", exactly once.

    Each unordered pair independently gets one of {incomparable, i<j, j<i};
    orientation assignments failing transitivity are filtered out.  The counts
    1, 1, 3, 19, 219, 4231 for n = 0..5 pin the enumeration down in the tests.
    """
    if cap is not None and n > cap:
        raise ScopeExceededError(
            f"labeled poset enumeration capped at n <= {cap} (got n = {n})"
        )
    labels = tuple(str(i) for i in range(n))
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        rows = [0] * n
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                rows[i] |= 1 << j
            elif c == 2:
                rows[j] |= 1 << i
        if _bitrows_transitive(rows):
            lt = np.zeros((n, n), dtype=bool)
            for i in range(n):
                row = rows[i]
                while row:
                    low = row & -row
                    lt[i, low.bit_length() - 1] = True
                    row ^= low
            yield Poset(labels, lt)


def _bitrows_transitive(rows: list[int]) -> bool:
    for i, row in enumerate(rows):
        acc = 0
        rest = row
        while rest:
            low = rest & -rest
            acc |= rows[low.bit_length() - 1]
            rest ^= low
        if acc & ~row:
            return False
    return True
