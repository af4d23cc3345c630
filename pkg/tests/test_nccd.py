"""Noncrossing decompositions, 132 patterns, descents, trees, the bound chain."""

import itertools

import pytest

from posetdecomp import (
    CheckFailure,
    Poset,
    all_132_avoiding,
    ascending_runs_decomposition,
    attachment_tree,
    canonical_chain_order,
    chain_concatenation,
    count_noncrossing_decompositions,
    crossing_witness,
    derived_extension,
    descent_optimal_permutation,
    descent_profile,
    is_132_avoiding,
    is_132_avoiding_in_extension,
    is_linear_extension,
    is_noncrossing,
    mhcd,
    min_descents_over_avoiders,
    min_descents_over_extension_avoiders,
    minimum_chain_decomposition,
    minimum_noncrossing_decomposition,
    tree_to_text,
    verify_chain_bounds,
    wrap_order,
    wrap_relation,
)
from posetdecomp.generate import antichain, boolean_lattice, chain, random_poset, wrap_forest
from posetdecomp.poset import enumerate_posets

import oracles


def diamond():
    return boolean_lattice(2)


def theta():
    return Poset.from_cover_relations(
        ["u1", "w1", "w2", "u2", "x1", "x2"],
        [("u1", "w1"), ("w1", "w2"), ("w2", "u2"), ("u1", "x1"), ("x1", "x2"), ("x2", "u2")],
    )


# -- crossings ------------------------------------------------------------------


def test_crossing_witness_on_interleaved_chains():
    p = chain(4)
    parts = [["1", "3"], ["2", "4"]]
    w = crossing_witness(p, parts)
    assert w == ("1", "2", "3", "4")
    assert not is_noncrossing(p, parts)
    assert is_noncrossing(p, [["1", "2"], ["3", "4"]])


def test_noncrossing_matches_oracle():
    for n in range(5):
        for p in enumerate_posets(n):
            for part in oracles.chain_partitions(p):
                labels = [[p.labels[x] for x in block] for block in part]
                assert is_noncrossing(p, labels) == oracles.noncrossing_partition(p, part)


def test_minimum_noncrossing_matches_oracle():
    for n in range(6):
        for p in enumerate_posets(n, cap=5):
            nc, witness = minimum_noncrossing_decomposition(p)
            assert nc == oracles.brute_min_noncrossing(p)
            assert is_noncrossing(p, witness)
            assert witness.k == nc


def test_count_noncrossing_matches_oracle():
    for n in range(5):
        for p in enumerate_posets(n):
            assert count_noncrossing_decompositions(p) == oracles.count_noncrossing(p)


def test_catalan_counts():
    for n in range(1, 8):
        assert count_noncrossing_decompositions(chain(n)) == oracles.catalan_closed_form(n)


# -- patterns and descents --------------------------------------------------------


def test_132_predicate_matches_oracle():
    for n in range(5):
        for p in enumerate_posets(n):
            naive = {
                tuple(p.labels[i] for i in perm) for perm in oracles.naive_avoiders(p)
            }
            assert set(all_132_avoiding(p)) == naive
            for perm in itertools.permutations(p.labels):
                assert is_132_avoiding(p, perm) == (perm in naive)


def test_132_in_total_order_matches_classic_pattern():
    p = chain(4)
    # in a total order the poset pattern is the classic permutation pattern
    assert is_132_avoiding(p, ("4", "1", "2", "3"))
    assert not is_132_avoiding(p, ("1", "4", "2", "3"))  # 1 4 2 contains 1<2<4


def test_extension_relative_132():
    p = antichain(3)
    e = ("1", "2", "3")
    # incomparable everywhere, so plain 132 never occurs
    assert is_132_avoiding(p, ("1", "3", "2"))
    # but relative to e, 1 3 2 is exactly the pattern
    assert not is_132_avoiding_in_extension(p, ("1", "3", "2"), e)
    assert is_132_avoiding_in_extension(p, ("3", "2", "1"), e)


def test_extension_must_be_linear_extension():
    p = chain(3)
    with pytest.raises(ValueError):
        is_132_avoiding_in_extension(p, ("1", "2", "3"), ("2", "1", "3"))


def test_descent_profile_positions():
    p = chain(5)
    prof = descent_profile(p, ("1", "2", "5", "3", "4"))
    # drop after 5 at position 3, plus the terminal position
    assert prof.positions == (3, 5)
    assert prof.count == 2
    assert descent_profile(antichain(0), ()).count == 0


def test_descent_profile_incomparable_counts():
    p = antichain(3)
    prof = descent_profile(p, ("1", "2", "3"))
    assert prof.positions == (1, 2, 3)


def test_min_descents_matches_oracle():
    for n in range(5):
        for p in enumerate_posets(n):
            assert min_descents_over_avoiders(p) == oracles.naive_min_descents(p)


def test_ascending_runs_form_noncrossing_decomposition():
    for n in range(5):
        for p in enumerate_posets(n):
            for perm in all_132_avoiding(p):
                d = ascending_runs_decomposition(p, perm)
                assert d.k == descent_profile(p, perm).count
                assert is_noncrossing(p, d)


def test_ascending_runs_reject_pattern():
    p = chain(3)
    with pytest.raises(ValueError):
        ascending_runs_decomposition(p, ("1", "3", "2"))


# -- wrap order and canonical order ------------------------------------------------


def test_wrap_relation_theta():
    p = theta()
    d = mhcd(p)
    rel = wrap_relation(p, d)
    # chains (u1<u2), (w1<w2), (x1<x2): the u chain wraps both others
    assert rel.tolist() == [
        [False, False, False],
        [True, False, False],
        [True, False, False],
    ]


def test_wrap_order_requires_minimal_decomposition():
    p = theta()
    with pytest.raises(ValueError):
        wrap_order(p, minimum_chain_decomposition(p))


def test_canonical_order_diamond_frozen():
    p = diamond()
    order, findings = canonical_chain_order(p)
    d = mhcd(p)
    names = [d.chains_as_labels()[i] for i in order]
    assert names == [("{1}",), ("{2}",), ("{}", "{1,2}")]
    pi = descent_optimal_permutation(p)
    assert pi == ("{1}", "{2}", "{}", "{1,2}")


def test_canonical_order_extends_wrap_order_everywhere():
    for n in range(6):
        for p in enumerate_posets(n, cap=5):
            order, _ = canonical_chain_order(p)
            rel = wrap_relation(p, mhcd(p))
            pos = {c: i for i, c in enumerate(order)}
            for a in range(len(order)):
                for b in range(len(order)):
                    if rel[a, b]:
                        assert pos[a] < pos[b]


def test_optimal_permutation_properties_exhaustive():
    for n in range(6):
        for p in enumerate_posets(n, cap=5):
            pi = descent_optimal_permutation(p)
            k = mhcd(p).k
            assert descent_profile(p, pi).count == k
            assert is_132_avoiding(p, pi)


# -- plane trees and the derived extension -----------------------------------------


def test_tree_diamond_frozen():
    p = diamond()
    d = mhcd(p)
    order, _ = canonical_chain_order(p, d)
    tree = attachment_tree(p, d, order)
    assert tree_to_text(tree) == "*({1,2}({1} {2} {}))"
    assert derived_extension(p) == ("{}", "{2}", "{1}", "{1,2}")


def test_tree_single_chain():
    p = chain(3)
    d = mhcd(p)
    order, _ = canonical_chain_order(p, d)
    tree = attachment_tree(p, d, order)
    assert tree_to_text(tree) == "*(3(2(1)))"
    assert derived_extension(p) == ("1", "2", "3")


def test_derived_extension_is_linear_extension_exhaustive():
    for n in range(6):
        for p in enumerate_posets(n, cap=5):
            e = derived_extension(p)
            assert is_linear_extension(p, e)


def test_derived_extension_wrap_forests():
    for seed in range(12):
        p = wrap_forest(9, seed=seed)
        e = derived_extension(p)
        assert is_linear_extension(p, e)
        pi = descent_optimal_permutation(p)
        assert is_132_avoiding_in_extension(p, pi, e)


# -- the inequality chain -----------------------------------------------------------


def test_chain_bounds_exhaustive_small():
    for n in range(5):
        for p in enumerate_posets(n):
            rep = verify_chain_bounds(p)
            assert rep.ok, rep.checks
            assert (
                rep.min_chains
                <= rep.min_noncrossing
                <= rep.min_descents
                <= rep.min_descents_ext
                <= rep.min_homogeneous
            )


def test_chain_bounds_strictness_witnesses():
    # the diamond separates the extension-relative minimum from Min_h
    rep = verify_chain_bounds(diamond())
    assert (rep.min_descents_ext, rep.min_homogeneous) == (2, 3)
    # theta shows the same gap at the last step with longer chains in play
    rep = verify_chain_bounds(theta())
    assert rep.min_chains == 2
    assert rep.min_descents_ext == 2
    assert rep.min_homogeneous == 3


def test_chain_bounds_random():
    for seed in range(10):
        p = random_poset(7, density=0.3, seed=seed)
        rep = verify_chain_bounds(p)
        assert rep.ok


def test_report_serializes_to_plain_json_types():
    import json

    rep = verify_chain_bounds(diamond())
    blob = json.dumps(rep.to_dict(), sort_keys=True)
    assert "min_homogeneous" in blob
