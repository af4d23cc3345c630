"""Homogeneous chain decompositions and the automorphism embedding.

A decomposition is homogeneous when every pair of its chains is all-or-nothing
comparable: either all cross pairs of elements are comparable or none are.
Merging two comparable chains whose comparability profile towards every other
chain agrees preserves homogeneity, and the decomposition where no merge
applies is unique, so the fixpoint of greedy merging from singletons computes
it regardless of merge order (the tests shuffle the order to confirm).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .chains import ChainDecomposition
from .errors import (
    InternalInconsistencyError,
    NotHomogeneousError,
    ScatteringError,
    ScopeExceededError,
)
from .poset import Poset, _order_search, automorphisms

GRAPH_AUTOMORPHISM_CAP = 10
HOM_PAIR_CAP = 250_000


def _as_decomposition(p: Poset, parts) -> ChainDecomposition:
    if isinstance(parts, ChainDecomposition):
        return parts
    return ChainDecomposition.from_parts(p, parts)


def chain_comparability(p: Poset, d: ChainDecomposition) -> np.ndarray:
    """k x k matrix: chains are comparable iff every cross pair is comparable.

    Raises NotHomogeneousError on a pair with both comparable and incomparable
    cross pairs, so a returned matrix certifies homogeneity.
    """
    k = d.k
    comp = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            pairs = [
                bool(p.lt[x, y] or p.lt[y, x])
                for x in d.chains[i]
                for y in d.chains[j]
            ]
            if all(pairs):
                comp[i, j] = comp[j, i] = True
            elif any(pairs):
                raise NotHomogeneousError(
                    f"chains {d.chains_as_labels()[i]} and {d.chains_as_labels()[j]} "
                    "mix comparable and incomparable pairs"
                )
    return comp


def is_homogeneous(p: Poset, parts) -> bool:
    """True iff the (valid) decomposition is homogeneous; invalid input raises."""
    d = _as_decomposition(p, parts)
    try:
        chain_comparability(p, d)
    except NotHomogeneousError:
        return False
    return True


def mhcd(p: Poset, shuffle_seed: int | None = None) -> ChainDecomposition:
    """The minimal homogeneous chain decomposition.

    Starts from singletons and merges comparable chain pairs with identical
    comparability profiles until none remains.  `shuffle_seed` randomizes
    which applicable merge fires first; the fixpoint is the same either way.
    """
    n = p.n
    chains: list[list[int]] = [[i] for i in range(n)]
    comp = [[bool(p.lt[i, j] or p.lt[j, i]) for j in range(n)] for i in range(n)]
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    while True:
        candidates = []
        k = len(chains)
        for i in range(k):
            for j in range(i + 1, k):
                if not comp[i][j]:
                    continue
                if all(comp[i][t] == comp[j][t] for t in range(k) if t != i and t != j):
                    candidates.append((i, j))
                    if rng is None:
                        break
            if candidates and rng is None:
                break
        if not candidates:
            break
        i, j = candidates[0] if rng is None else rng.choice(candidates)
        chains[i] = chains[i] + chains[j]
        del chains[j]
        row = [comp[i][t] for t in range(k) if t != j]
        comp = [
            [comp[a][b] for b in range(k) if b != j]
            for a in range(k)
            if a != j
        ]
        pos = i if i < j else i - 1
        comp[pos] = row[:pos] + [False] + row[pos + 1:]
        for t in range(len(comp)):
            comp[t][pos] = comp[pos][t]
    return ChainDecomposition._from_index_parts(p, chains)


def min_homogeneous(p: Poset) -> int:
    """Number of chains of the minimal homogeneous decomposition."""
    return mhcd(p).k


# -- the chain graph and its orientation -------------------------------------


@dataclass(frozen=True)
class ChainGraph:
    """Graph on the chains of a homogeneous decomposition.

    `adjacency` joins comparable chain pairs; `oriented`, when present, points
    each edge from the chain with the smaller minimum to the other one, which
    is acyclic because edges ascend in the poset order of chain minima.
    """

    decomposition: ChainDecomposition
    adjacency: np.ndarray
    oriented: np.ndarray | None = None

    @property
    def k(self) -> int:
        return self.decomposition.k

    def edges(self) -> list[tuple[int, int]]:
        mat = self.adjacency if self.oriented is None else self.oriented
        if self.oriented is None:
            return [(i, j) for i in range(self.k) for j in range(i + 1, self.k) if mat[i, j]]
        return [(i, j) for i in range(self.k) for j in range(self.k) if mat[i, j]]

    def to_dot(self, name: str = "chains") -> str:
        labels = self.decomposition.chains_as_labels()

        def node(i: int) -> str:
            text = "<" + ",".join(str(x) for x in labels[i]) + ">"
            return f'  c{i} [label="{text}"];'

        directed = self.oriented is not None
        head = ("digraph" if directed else "graph") + f" {name} {{"
        arrow = "->" if directed else "--"
        lines = [head] + [node(i) for i in range(self.k)]
        lines += [f"  c{i} {arrow} c{j};" for i, j in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def chain_graph(p: Poset, d: ChainDecomposition | None = None) -> ChainGraph:
    """Undirected comparability graph of a homogeneous decomposition."""
    d = mhcd(p) if d is None else _as_decomposition(p, d)
    return ChainGraph(d, chain_comparability(p, d))


def acyclic_orientation(p: Poset, d: ChainDecomposition | None = None) -> ChainGraph:
    """Orient every edge from the chain with the smaller minimum element."""
    d = mhcd(p) if d is None else _as_decomposition(p, d)
    comp = chain_comparability(p, d)
    k = d.k
    oriented = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            if not comp[i, j]:
                continue
            mi, mj = d.chains[i][0], d.chains[j][0]
            if p.lt[mi, mj]:
                oriented[i, j] = True
            elif p.lt[mj, mi]:
                oriented[j, i] = True
            else:
                raise InternalInconsistencyError(
                    "comparable chains with incomparable minima cannot occur in a "
                    "homogeneous decomposition"
                )
    if _has_directed_cycle(oriented):
        raise InternalInconsistencyError("minimum-based orientation produced a cycle")
    return ChainGraph(d, comp, oriented)


def _has_directed_cycle(mat: np.ndarray) -> bool:
    k = mat.shape[0]
    indeg = [int(mat[:, j].sum()) for j in range(k)]
    stack = [j for j in range(k) if indeg[j] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in np.flatnonzero(mat[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(int(w))
    return seen != k


# -- length classes and induced permutations ----------------------------------


def preserves_length_classes(d: ChainDecomposition, sigma: Sequence[int]) -> bool:
    """True iff the chain permutation maps every chain to one of equal length."""
    if sorted(sigma) != list(range(d.k)):
        return False
    return all(len(d.chains[sigma[i]]) == len(d.chains[i]) for i in range(d.k))


def induced_chain_permutation(
    p: Poset, d: ChainDecomposition, g: Sequence[int]
) -> tuple[int, ...]:
    """Chain permutation induced by an element permutation g (index form).

    Raises ScatteringError if g sends one chain into several chains.
    """
    if sorted(g) != list(range(p.n)):
        raise ValueError("g is not a permutation of the element indices")
    owner = d.chain_of
    sigma = []
    for ci, chain in enumerate(d.chains):
        targets = {owner[g[x]] for x in chain}
        if len(targets) != 1:
            raise ScatteringError(
                f"chain {d.chains_as_labels()[ci]} is scattered over chains "
                f"{sorted(targets)}"
            )
        sigma.append(targets.pop())
    if sorted(sigma) != list(range(d.k)):
        raise ScatteringError("induced chain map is not a bijection")
    return tuple(sigma)


def graph_automorphisms(
    mat: np.ndarray, cap: int | None = GRAPH_AUTOMORPHISM_CAP
) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex permutations of a boolean matrix.

    Works for directed and undirected matrices alike; brute force with
    signature pruning, capped at `cap` vertices.
    """
    k = mat.shape[0]
    if cap is not None and k > cap:
        raise ScopeExceededError(
            f"graph automorphism search capped at {cap} vertices (got {k})"
        )
    return _order_search(np.asarray(mat, dtype=bool), np.asarray(mat, dtype=bool), find_all=True)


# -- the embedding report ------------------------------------------------------


@dataclass
class EmbeddingReport:
    """Outcome of checking Aut(P) against the oriented chain graph's symmetries."""

    n: int
    k: int
    aut_poset_order: int
    aut_oriented_order: int
    aut_unoriented_order: int
    well_defined: bool
    injective: bool
    homomorphism: bool
    onto_oriented: bool
    hom_pairs_checked: int
    witness: dict | None = None
    findings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.well_defined and self.injective and self.homomorphism

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "aut_poset_order": self.aut_poset_order,
            "aut_oriented_order": self.aut_oriented_order,
            "aut_unoriented_order": self.aut_unoriented_order,
            "well_defined": self.well_defined,
            "injective": self.injective,
            "homomorphism": self.homomorphism,
            "onto_oriented": self.onto_oriented,
            "hom_pairs_checked": self.hom_pairs_checked,
            "ok": self.ok,
            "witness": self.witness,
            "findings": list(self.findings),
        }


def verify_embedding(
    p: Poset,
    auto_cap: int | None = None,
    hom_pair_cap: int = HOM_PAIR_CAP,
    seed: int = 0,
) -> EmbeddingReport:
    """Check that g -> induced chain permutation embeds Aut(P).

    Verifies (a) every automorphism induces a well-defined length-preserving
    permutation that fixes the oriented chain graph, (b) distinct
    automorphisms induce distinct permutations, (c) the map is a group
    homomorphism.  Being onto the oriented graph's symmetries is recorded as a
    finding, never asserted.
    """
    autos = automorphisms(p, cap=auto_cap)
    d = mhcd(p)
    gr = acyclic_orientation(p, d)
    report = EmbeddingReport(
        n=p.n,
        k=d.k,
        aut_poset_order=len(autos),
        aut_oriented_order=0,
        aut_unoriented_order=0,
        well_defined=True,
        injective=True,
        homomorphism=True,
        onto_oriented=False,
        hom_pairs_checked=0,
    )

    oriented_autos = {
        sigma
        for sigma in graph_automorphisms(gr.oriented, cap=None)
        if preserves_length_classes(d, sigma)
    }
    unoriented_autos = {
        sigma
        for sigma in graph_automorphisms(gr.adjacency, cap=None)
        if preserves_length_classes(d, sigma)
    }
    report.aut_oriented_order = len(oriented_autos)
    report.aut_unoriented_order = len(unoriented_autos)

    induced: list[tuple[int, ...]] = []
    for g in autos:
        try:
            sigma = induced_chain_permutation(p, d, g)
        except ScatteringError as exc:
            report.well_defined = False
            report.witness = {"automorphism": g, "error": str(exc)}
            return report
        if not preserves_length_classes(d, sigma):
            report.well_defined = False
            report.witness = {"automorphism": g, "induced": sigma, "error": "length class broken"}
            return report
        if sigma not in oriented_autos:
            report.well_defined = False
            report.witness = {
                "automorphism": g,
                "induced": sigma,
                "error": "induced permutation does not fix the oriented chain graph",
            }
            return report
        induced.append(sigma)

    if len(set(induced)) != len(induced):
        report.injective = False
        dupes = {}
        for g, sigma in zip(autos, induced):
            if sigma in dupes:
                report.witness = {"automorphisms": [dupes[sigma], g], "induced": sigma}
                break
            dupes[sigma] = g

    pairs = [(a, b) for a in range(len(autos)) for b in range(len(autos))]
    if len(pairs) > hom_pair_cap:
        rng = random.Random(seed)
        pairs = [
            (rng.randrange(len(autos)), rng.randrange(len(autos)))
            for _ in range(hom_pair_cap)
        ]
        report.findings.append(
            {"kind": "hom-pairs-sampled", "checked": len(pairs), "total": len(autos) ** 2}
        )
    for a, b in pairs:
        composite = tuple(autos[a][autos[b][x]] for x in range(p.n))
        expected = tuple(induced[a][induced[b][i]] for i in range(d.k))
        if induced_chain_permutation(p, d, composite) != expected:
            report.homomorphism = False
            report.witness = {"pair": (autos[a], autos[b])}
            break
    report.hom_pairs_checked = len(pairs)

    report.onto_oriented = len(set(induced)) == len(oriented_autos)
    report.findings.append({"kind": "embedding-onto", "onto": report.onto_oriented})
    return report


# -- deletion bounds -----------------------------------------------------------


@dataclass
class DeletionBoundReport:
    """Per-element check of k_without <= k <= 2 * k_without + 1."""

    n: int
    k: int
    entries: list[dict]

    @property
    def ok(self) -> bool:
        return all(e["lower_ok"] and e["upper_ok"] for e in self.entries)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "ok": self.ok, "entries": self.entries}


def deletion_bounds(p: Poset, element=None) -> DeletionBoundReport:
    """Check the one-point-deletion bounds on the homogeneous chain count.

    Deleting z can at most halve (minus the round) the chain count and can
    never increase it: k(P minus z) <= k(P) <= 2 k(P minus z) + 1.
    """
    k = min_homogeneous(p)
    targets = [element] if element is not None else list(p.labels)
    entries = []
    for z in targets:
        kz = min_homogeneous(p.without(z))
        entries.append(
            {
                "element": str(z),
                "k_without": kz,
                "lower_ok": kz <= k,
                "upper_ok": k <= 2 * kz + 1,
            }
        )
    return DeletionBoundReport(n=p.n, k=k, entries=entries)
