"""Homogeneous decompositions, the chain graph, the automorphism embedding."""

import math

import numpy as np
import pytest

from posetdecomp import (
    NotHomogeneousError,
    Poset,
    acyclic_orientation,
    chain_comparability,
    chain_graph,
    deletion_bounds,
    graph_automorphisms,
    induced_chain_permutation,
    is_homogeneous,
    mhcd,
    min_homogeneous,
    minimum_chain_decomposition,
    preserves_length_classes,
    verify_embedding,
)
from posetdecomp.generate import antichain, boolean_lattice, chain, random_poset, two_chain_fan
from posetdecomp.hcd import _as_decomposition
from posetdecomp.poset import automorphisms, enumerate_posets

import oracles


def theta():
    return Poset.from_cover_relations(
        ["u1", "w1", "w2", "u2", "x1", "x2"],
        [("u1", "w1"), ("w1", "w2"), ("w2", "u2"), ("u1", "x1"), ("x1", "x2"), ("x2", "u2")],
    )


def test_homogeneity_predicate():
    p = theta()
    hom = [["u1", "u2"], ["w1", "w2"], ["x1", "x2"]]
    assert is_homogeneous(p, hom)
    # the dilworth minimum of theta mixes chain pairs
    d = minimum_chain_decomposition(p)
    assert d.k == 2
    assert not is_homogeneous(p, d)


def test_chain_comparability_raises_on_mixed_pair():
    p = theta()
    d = minimum_chain_decomposition(p)
    with pytest.raises(NotHomogeneousError):
        chain_comparability(p, d)


def test_mhcd_known_cases():
    assert mhcd(chain(5)).k == 1
    assert mhcd(antichain(5)).k == 5
    assert mhcd(boolean_lattice(2)).k == 3
    assert mhcd(theta()).k == 3
    assert mhcd(two_chain_fan(2)).k == 5


def test_mhcd_matches_enumeration_oracle():
    for n in range(6):
        for p in enumerate_posets(n, cap=5):
            d = mhcd(p)
            minima = oracles.brute_minimal_homogeneous(p)
            assert len(minima) == 1
            assert frozenset(d.chains) == minima[0]


def test_mhcd_confluent_under_shuffles():
    for n in range(6):
        for p in enumerate_posets(n, cap=5):
            base = frozenset(mhcd(p).chains)
            for s in range(5):
                assert frozenset(mhcd(p, shuffle_seed=s).chains) == base


def test_min_homogeneous_values():
    assert min_homogeneous(antichain(7)) == 7
    assert min_homogeneous(chain(7)) == 1


def test_chain_graph_edges_theta():
    p = theta()
    g = chain_graph(p)
    # the long chain is comparable to both two-element chains; those two are not
    assert sorted(g.edges()) == [(0, 1), (0, 2)]


def test_orientation_is_acyclic_and_by_minima():
    for n in range(6):
        for p in enumerate_posets(n, cap=5):
            g = acyclic_orientation(p)
            mat = g.oriented
            k = g.k
            # no two-cycles, and every oriented edge starts at the smaller minimum
            assert not (mat & mat.T).any()
            d = g.decomposition
            for i, j in g.edges():
                assert p.lt[d.chains[i][0], d.chains[j][0]]


def test_to_dot_shapes():
    p = theta()
    und = chain_graph(p).to_dot("g")
    assert und.startswith("graph g {") and "--" in und
    ori = acyclic_orientation(p).to_dot("d")
    assert ori.startswith("digraph d {") and "->" in ori


def test_graph_automorphisms_square_cycle():
    # an undirected 4-cycle has the dihedral symmetry group of order 8
    mat = np.zeros((4, 4), dtype=bool)
    for a, b in ((0, 1), (1, 2), (2, 3), (3, 0)):
        mat[a, b] = mat[b, a] = True
    assert len(graph_automorphisms(mat)) == 8


def test_induced_chain_permutation_identity():
    p = theta()
    d = mhcd(p)
    ident = tuple(range(p.n))
    assert induced_chain_permutation(p, d, ident) == (0, 1, 2)
    swap = {"u1": "u1", "u2": "u2", "w1": "x1", "w2": "x2", "x1": "w1", "x2": "w2"}
    g = tuple(p.idx(swap[x]) for x in p.labels)
    assert induced_chain_permutation(p, d, g) == (0, 2, 1)


def test_preserves_length_classes():
    p = theta()
    d = mhcd(p)
    assert preserves_length_classes(d, (0, 2, 1))
    fan = mhcd(two_chain_fan(2))
    # chains of different lengths must not trade places
    lens = [len(c) for c in fan.chains]
    sigma = list(range(fan.k))
    a = lens.index(1)
    b = lens.index(2) if 2 in lens else a
    if lens[a] != lens[b]:
        sigma[a], sigma[b] = sigma[b], sigma[a]
        assert not preserves_length_classes(fan, tuple(sigma))


def test_embedding_exhaustive_small():
    for n in range(5):
        for p in enumerate_posets(n):
            rep = verify_embedding(p)
            assert rep.well_defined and rep.injective and rep.homomorphism


def test_embedding_anchor_orders():
    for n in (2, 3, 4, 5):
        rep = verify_embedding(antichain(n))
        assert rep.aut_poset_order == math.factorial(n)
        assert rep.injective
    rep = verify_embedding(chain(6))
    assert rep.aut_poset_order == 1


def test_embedding_random():
    for seed in range(25):
        p = random_poset(7, density=0.3, seed=seed)
        rep = verify_embedding(p, seed=seed)
        assert rep.ok


def test_deletion_bounds_exhaustive():
    for n in range(1, 6):
        for p in enumerate_posets(n, cap=5):
            rep = deletion_bounds(p)
            assert rep.ok


def test_deletion_bounds_fan_sharpness():
    for k in range(1, 6):
        p = two_chain_fan(k)
        assert min_homogeneous(p) == 2 * k + 1
        assert min_homogeneous(p.without("z")) == k
        rep = deletion_bounds(p, "z")
        entry = rep.entries[0]
        assert entry["k_without"] == k
        assert rep.k == 2 * k + 1


def test_as_decomposition_accepts_labels():
    p = theta()
    d = _as_decomposition(p, [["u1", "u2"], ["w1", "w2"], ["x1", "x2"]])
    assert d.k == 3
