"""Poset construction, validation, Mobius machinery, and enumeration."""

import numpy as np
import pytest

from posetdecomp import (
    CycleError,
    Poset,
    UnknownElementError,
    count_linear_extensions,
    enumerate_posets,
    is_linear_extension,
    linear_extensions,
    mobius,
    mobius_matrix,
    signed_chain_count,
    signed_chain_count_matrix,
    transitive_closure,
)
from posetdecomp.generate import antichain, boolean_lattice, chain
from posetdecomp.poset import automorphisms, isomorphic

import oracles


def diamond():
    return boolean_lattice(2)


def test_from_cover_relations_closure():
    p = Poset.from_cover_relations("abc", [("a", "b"), ("b", "c")])
    assert p.less("a", "c")
    assert p.less("a", "b") and p.less("b", "c")
    assert not p.less("c", "a")


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        Poset.from_cover_relations(["a", "a"], [])


def test_unknown_element_rejected():
    with pytest.raises(UnknownElementError):
        Poset.from_cover_relations("ab", [("a", "z")])


def test_cycle_rejected_with_witness():
    with pytest.raises(CycleError) as exc:
        Poset.from_cover_relations("abc", [("a", "b"), ("b", "c"), ("c", "a")])
    assert exc.value.cycle


def test_init_rejects_intransitive_matrix():
    lt = np.zeros((3, 3), dtype=bool)
    lt[0, 1] = lt[1, 2] = True
    with pytest.raises(ValueError):
        Poset("abc", lt)


def test_init_rejects_symmetric_pair():
    lt = np.zeros((2, 2), dtype=bool)
    lt[0, 1] = lt[1, 0] = True
    with pytest.raises(ValueError):
        Poset("ab", lt)


def test_matrix_is_read_only():
    p = chain(3)
    with pytest.raises(ValueError):
        p.lt[0, 1] = False


def test_transitive_closure_long_path():
    # repeated squaring must reach the far end of a 12-step path
    n = 13
    rel = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        rel[i, i + 1] = True
    closed = transitive_closure(rel)
    assert closed[0, n - 1]
    assert closed.sum() == n * (n - 1) // 2


def test_covers_of_diamond():
    assert sorted(diamond().covers()) == [
        ("{1}", "{1,2}"),
        ("{2}", "{1,2}"),
        ("{}", "{1}"),
        ("{}", "{2}"),
    ]


def test_induced_and_without():
    p = diamond()
    q = p.without("{1}")
    assert q.n == 3
    assert q.less("{}", "{1,2}")
    r = p.induced(["{2}", "{}"])
    assert r.less("{}", "{2}")


def test_minimal_maximal():
    p = diamond()
    assert p.minimal_elements() == ["{}"]
    assert p.maximal_elements() == ["{1,2}"]


def test_mobius_diamond():
    p = diamond()
    assert mobius(p, "{}", "{}") == 1
    assert mobius(p, "{}", "{1}") == -1
    assert mobius(p, "{}", "{1,2}") == 1
    assert mobius(p, "{1}", "{2}") == 0


def test_mobius_chain_vanishes_beyond_covers():
    p = chain(5)
    m = mobius_matrix(p)
    for i in range(5):
        for j in range(5):
            if j == i:
                assert m[i][j] == 1
            elif j == i + 1:
                assert m[i][j] == -1
            else:
                assert m[i][j] == 0


def test_signed_counts_match_mobius_small():
    for n in range(5):
        for p in enumerate_posets(n):
            assert signed_chain_count_matrix(p) == mobius_matrix(p)


def test_signed_counts_match_dfs_oracle():
    for p in enumerate_posets(4):
        for x in range(p.n):
            for y in range(p.n):
                if x == y or p.lt[x, y]:
                    got = signed_chain_count(p, p.labels[x], p.labels[y])
                    assert got == oracles.signed_chain_count_oracle(p, x, y)


def test_linear_extensions_chain_and_antichain():
    assert count_linear_extensions(chain(4)) == 1
    assert count_linear_extensions(antichain(4)) == 24
    exts = list(linear_extensions(diamond()))
    assert len(exts) == 2
    for e in exts:
        assert is_linear_extension(diamond(), e)


def test_is_linear_extension_rejects_swap():
    p = chain(3)
    assert not is_linear_extension(p, ("2", "1", "3"))


def test_automorphisms_diamond_and_chain():
    assert len(automorphisms(diamond())) == 2
    assert len(automorphisms(chain(6))) == 1
    assert len(automorphisms(antichain(4))) == 24


def test_isomorphic_relabeled():
    p = Poset.from_cover_relations("abcd", [("a", "b"), ("b", "d"), ("a", "c"), ("c", "d")])
    assert isomorphic(p, diamond())
    assert not isomorphic(p, chain(4))


def test_enumerate_posets_counts():
    # labeled poset counts for n = 0..4
    got = [sum(1 for _ in enumerate_posets(n, cap=4)) for n in range(5)]
    assert got == [1, 1, 3, 19, 219]


def test_enumerate_posets_matches_relation_filter_oracle():
    for n in range(4):
        assert sum(1 for _ in enumerate_posets(n)) == oracles.all_relations_poset_count(n)


def test_enumerated_posets_are_valid_and_distinct():
    seen = set()
    for p in enumerate_posets(3):
        key = p.lt_bytes
        assert key not in seen
        seen.add(key)
