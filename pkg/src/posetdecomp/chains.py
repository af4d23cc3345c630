"""Chain decompositions, minimum chain covers and maximum antichains.

The Dilworth bound is computed by maximum matching in the split bipartite
graph (left copy x, right copy y, edge iff x < y): chains follow matched
edges, the minimum count is n - |matching|, and the complement of the Koenig
vertex cover recovers a maximum antichain of the same size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    InternalInconsistencyError,
    InvalidDecompositionError,
    ScopeExceededError,
    UnknownElementError,
)
from .poset import Poset

DECOMPOSITION_ENUMERATION_CAP = 10


def is_chain(p: Poset, elems: Iterable) -> bool:
    """True iff the given elements are pairwise comparable."""
    idxs = [p.idx(x) for x in elems]
    return all(
        p.lt[a, b] or p.lt[b, a]
        for i, a in enumerate(idxs)
        for b in idxs[i + 1:]
    )


def is_antichain(p: Poset, elems: Iterable) -> bool:
    """True iff the given elements are pairwise incomparable."""
    idxs = [p.idx(x) for x in elems]
    return not any(
        p.lt[a, b] or p.lt[b, a]
        for i, a in enumerate(idxs)
        for b in idxs[i + 1:]
    )


@dataclass(frozen=True)
class ChainDecomposition:
    """A partition of the ground set into chains.

    Chains are stored as index tuples sorted increasingly in the poset order,
    and the family is ordered by each chain's minimum element index, so equal
    partitions compare equal as values.
    """

    poset: Poset
    chains: tuple[tuple[int, ...], ...]

    @classmethod
    def from_parts(cls, p: Poset, parts: Iterable[Iterable]) -> "ChainDecomposition":
        """Validate and canonicalize a family of label sets; raises on bad input."""
        index_parts = []
        for part in parts:
            part = list(part)
            try:
                index_parts.append([p.idx(x) for x in part])
            except UnknownElementError as exc:
                raise InvalidDecompositionError(f"unknown element {exc.args[0]!r}") from None
        return cls._from_index_parts(p, index_parts)

    @classmethod
    def _from_index_parts(
        cls, p: Poset, parts: Sequence[Sequence[int]]
    ) -> "ChainDecomposition":
        seen: set[int] = set()
        total = 0
        for part in parts:
            if not part:
                raise InvalidDecompositionError("empty chain")
            total += len(part)
            seen.update(part)
            for a_pos, a in enumerate(part):
                for b in part[a_pos + 1:]:
                    if not (p.lt[a, b] or p.lt[b, a]):
                        raise InvalidDecompositionError(
                            f"elements {p.labels[a]!r} and {p.labels[b]!r} share a part "
                            "but are incomparable"
                        )
        if total != p.n or len(seen) != p.n:
            raise InvalidDecompositionError("parts do not partition the ground set")
        sorted_chains = []
        for part in parts:
            ordered = sorted(part, key=lambda a: sum(bool(p.lt[b, a]) for b in part))
            sorted_chains.append(tuple(ordered))
        sorted_chains.sort(key=lambda c: c[0])
        return cls(p, tuple(sorted_chains))

    @property
    def k(self) -> int:
        return len(self.chains)

    @cached_property
    def chain_of(self) -> tuple[int, ...]:
        """Back-map: element index -> index of its chain."""
        owner = [-1] * self.poset.n
        for ci, chain in enumerate(self.chains):
            for x in chain:
                owner[x] = ci
        return tuple(owner)

    def chains_as_labels(self) -> tuple[tuple, ...]:
        return tuple(tuple(self.poset.labels[x] for x in chain) for chain in self.chains)

    def to_lines(self) -> list[str]:
        """One `chain: x1 < x2 < ...` line per chain."""
        return [
            "chain: " + " < ".join(str(self.poset.labels[x]) for x in chain)
            for chain in self.chains
        ]

    def __repr__(self) -> str:
        inner = "; ".join(
            " < ".join(str(self.poset.labels[x]) for x in chain) for chain in self.chains
        )
        return f"ChainDecomposition({inner})"


def decomposition_from_lines(p: Poset, lines: Iterable[str]) -> ChainDecomposition:
    """Parse the `chain: x1 < x2 < ...` serialization back into a decomposition."""
    parts = []
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if not line.startswith("chain:"):
            raise InvalidDecompositionError(f"expected 'chain: ...', got {line!r}")
        body = line[len("chain:"):].strip()
        parts.append([x.strip() for x in body.split("<")])
    return ChainDecomposition.from_parts(p, parts)


def is_chain_decomposition(p: Poset, parts) -> bool:
    """True iff the family partitions the ground set into chains."""
    if isinstance(parts, ChainDecomposition):
        parts = parts.chains_as_labels()
    try:
        ChainDecomposition.from_parts(p, parts)
    except InvalidDecompositionError:
        return False
    return True


# -- Dilworth bound ----------------------------------------------------------


def _hopcroft_karp(succ: list[list[int]], n: int) -> tuple[list[int], list[int]]:
    """Maximum matching of the split graph; left/right partner arrays (-1 free)."""
    match_l = [-1] * n
    match_r = [-1] * n
    inf = n + 1
    while True:
        dist = [0 if match_l[x] == -1 else inf for x in range(n)]
        queue = deque(x for x in range(n) if match_l[x] == -1)
        reachable_free = False
        while queue:
            x = queue.popleft()
            for y in succ[x]:
                owner = match_r[y]
                if owner == -1:
                    reachable_free = True
                elif dist[owner] == inf:
                    dist[owner] = dist[x] + 1
                    queue.append(owner)
        if not reachable_free:
            return match_l, match_r

        def augment(x: int) -> bool:
            for y in succ[x]:
                owner = match_r[y]
                if owner == -1 or (dist[owner] == dist[x] + 1 and augment(owner)):
                    match_l[x] = y
                    match_r[y] = x
                    return True
            dist[x] = inf
            return False

        for x in range(n):
            if match_l[x] == -1:
                augment(x)


def minimum_chain_decomposition(p: Poset) -> ChainDecomposition:
    """A minimum-size chain decomposition (Dilworth bound) via matching."""
    n = p.n
    succ = [[int(j) for j in np.flatnonzero(p.lt[i])] for i in range(n)]
    match_l, match_r = _hopcroft_karp(succ, n)
    chains = []
    for start in range(n):
        if match_r[start] != -1:
            continue
        chain = [start]
        while match_l[chain[-1]] != -1:
            chain.append(match_l[chain[-1]])
        chains.append(chain)
    return ChainDecomposition._from_index_parts(p, chains)


def maximum_antichain(p: Poset) -> tuple:
    """A maximum antichain, as labels, from the Koenig cover complement."""
    n = p.n
    succ = [[int(j) for j in np.flatnonzero(p.lt[i])] for i in range(n)]
    match_l, match_r = _hopcroft_karp(succ, n)
    in_zl = [match_l[x] == -1 for x in range(n)]
    in_zr = [False] * n
    queue = deque(x for x in range(n) if in_zl[x])
    while queue:
        x = queue.popleft()
        for y in succ[x]:
            if match_l[x] == y or in_zr[y]:
                continue
            in_zr[y] = True
            owner = match_r[y]
            if owner != -1 and not in_zl[owner]:
                in_zl[owner] = True
                queue.append(owner)
    antichain = [p.labels[x] for x in range(n) if in_zl[x] and not in_zr[x]]
    matched = sum(1 for x in range(n) if match_l[x] != -1)
    if len(antichain) != n - matched or not is_antichain(p, antichain):
        raise InternalInconsistencyError("cover complement is not a maximum antichain")
    return tuple(antichain)


def width(p: Poset) -> int:
    """Size of a maximum antichain (= minimum number of chains)."""
    return len(maximum_antichain(p))


# -- exhaustive enumeration ---------------------------------------------------


def enumerate_chain_decompositions(
    p: Poset,
    cap: int | None = DECOMPOSITION_ENUMERATION_CAP,
    prune: Callable[[Poset, tuple[tuple[int, ...], ...]], bool] | None = None,
) -> Iterator[ChainDecomposition]:
    """Every partition of the poset into chains, exactly once.

    Elements are placed in linear-extension order, so a chain only ever grows
    past its current maximum; `prune`, when given, sees the partial family
    after each placement and must be monotone (never true again once false) to
    keep the enumeration exact under pruning.
    """
    if cap is not None and p.n > cap:
        raise ScopeExceededError(
            f"decomposition enumeration capped at n <= {cap} (got n = {p.n})"
        )
    order = sorted(range(p.n), key=lambda i: int(p.lt[:, i].sum()))
    chains: list[list[int]] = []

    def place(pos: int) -> Iterator[ChainDecomposition]:
        if pos == len(order):
            yield ChainDecomposition._from_index_parts(p, [c[:] for c in chains])
            return
        v = order[pos]
        for chain in chains:
            if p.lt[chain[-1], v]:
                chain.append(v)
                if prune is None or prune(p, tuple(tuple(c) for c in chains)):
                    yield from place(pos + 1)
                chain.pop()
        chains.append([v])
        if prune is None or prune(p, tuple(tuple(c) for c in chains)):
            yield from place(pos + 1)
        chains.pop()

    return place(0)
