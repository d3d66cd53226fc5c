import pytest
import sympy

import oracles
from conftest import cyc
from supersolv import catalog, config
from supersolv.errors import BudgetError, PreconditionError
from supersolv.perm import join
from supersolv.subgroups import (
    all_subgroups,
    index,
    is_normal,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_subgroups,
    permutes,
    product_set,
)


def brute(G):
    return frozenset(p.array_form for p in G), G.degree


def as_sets(subs):
    return {frozenset(p.array_form for p in s.elements) for s in subs}


# subgroup counts of small groups, from the join-closure oracle in oracles.py
ORACLE_COUNTS = {"S3": 6, "Q8": 6, "A4": 10, "D4": 10, "C2^3": 16, "D6": 16, "S4": 30, "M21": 10}


@pytest.mark.parametrize("name", sorted(ORACLE_COUNTS))
def test_lattice_matches_oracle(name):
    G = catalog.catalog_entry(name).group
    els, n = brute(G)
    expected = oracles.subgroups(els, n)
    assert len(expected) == ORACLE_COUNTS[name]
    assert as_sets(all_subgroups(G)) == expected


def test_prime_cyclic_has_two_subgroups():
    for p in (2, 3, 5, 7, 11):
        assert len(all_subgroups(catalog.cyclic(p))) == 2


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclic_subgroup_count_is_divisor_count(n):
    assert len(all_subgroups(catalog.cyclic(n))) == sympy.divisor_count(n)


def test_lattice_sorted_and_complete(S4):
    lat = all_subgroups(S4)
    keys = [s.sort_key for s in lat]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert lat[0].is_trivial() and lat[-1].is_whole()
    assert all(s.is_closed() and S4.order % s.order == 0 for s in lat)


def test_lattice_budget():
    G = catalog.elementary_abelian(2, 4)
    G._lattices.clear()
    with config.override(max_subgroups=50):
        with pytest.raises(BudgetError, match="subgroup count"):
            all_subgroups(G)
    assert len(all_subgroups(G)) == 67


def test_index_examples(S3):
    assert index(S3, S3.whole) == 1
    assert index(S3, S3.trivial) == 6
    assert index(S3, S3.subgroup([cyc(3, (1, 2, 3))])) == 2


def test_index_parent_mismatch(S3, S4):
    with pytest.raises(PreconditionError):
        index(S3, S4.trivial)


def test_maximal_examples(A4):
    for p in (2, 3, 5, 7):
        Cp = catalog.cyclic(p)
        (M,) = maximal_subgroups(Cp)
        assert M.is_trivial() and index(Cp, M) == p
    assert sorted(M.order for M in maximal_subgroups(A4)) == [3, 3, 3, 3, 4]
    assert sorted(M.order for M in maximal_subgroups(catalog.cyclic(6))) == [2, 3]


@pytest.mark.parametrize("name", ["S3", "A4", "S4", "D4", "Q8"])
def test_maximals_match_oracle(name):
    G = catalog.catalog_entry(name).group
    els, n = brute(G)
    assert as_sets(maximal_subgroups(G)) == set(oracles.maximals(els, n))


def test_maximals_are_incomparable(S4):
    ms = maximal_subgroups(S4)
    assert all(m in list(all_subgroups(S4)) for m in ms)
    for a in ms:
        for b in ms:
            assert a == b or not a.issubset(b)


def test_is_normal_examples(S3):
    assert is_normal(S3, S3.trivial) and is_normal(S3, S3.whole)
    assert not is_normal(S3, S3.subgroup([cyc(3, (1, 2))]))
    assert is_normal(S3, S3.subgroup([cyc(3, (1, 2, 3))]))


def test_normal_subgroups_examples(S3, A5):
    # the filter oracle gives 3 normal subgroups of S3: 1, C3, S3
    els, n = brute(S3)
    assert len(oracles.normals(els, n)) == 3
    assert [s.order for s in normal_subgroups(S3)] == [1, 3, 6]
    ab = catalog.catalog_entry("C2^2xC3^2").group
    assert len(normal_subgroups(ab)) == len(all_subgroups(ab))
    assert [s.order for s in normal_subgroups(A5)] == [1, 60]


@pytest.mark.parametrize("name", ["A4", "S4", "D6", "Q8", "M21"])
def test_normality_matches_oracle(name):
    G = catalog.catalog_entry(name).group
    els, n = brute(G)
    assert as_sets(normal_subgroups(G)) == set(oracles.normals(els, n))


def test_minimal_normal_examples(S3, V4, A5):
    assert [s.order for s in minimal_normal_subgroups(S3)] == [3]
    assert [s.order for s in minimal_normal_subgroups(V4)] == [2, 2, 2]
    assert [s.order for s in minimal_normal_subgroups(A5)] == [60]


def test_product_set_examples(S3):
    X = S3.subgroup([cyc(3, (1, 2))])
    Y = S3.subgroup([cyc(3, (1, 3))])
    assert product_set(X, S3.trivial) == frozenset(X.member_indices)
    xy = product_set(X, Y)
    assert len(xy) == len(oracles.product(*(frozenset(p.array_form for p in s.elements) for s in (X, Y)))) == 4
    assert product_set(S3.whole, S3.whole) == frozenset(range(6))


def test_product_set_size_formula(S4):
    subs = list(all_subgroups(S4))
    for X in subs[::3]:
        for Y in subs[::4]:
            assert len(product_set(X, Y)) == X.order * Y.order // X.intersection(Y).order


def test_permutes_examples(S3):
    X = S3.subgroup([cyc(3, (1, 2))])
    Y = S3.subgroup([cyc(3, (1, 3))])
    C3 = S3.subgroup([cyc(3, (1, 2, 3))])
    assert permutes(X, X)
    assert not permutes(X, Y)
    assert permutes(X, C3) and permutes(C3, X)


def test_permutes_iff_product_closed(S4):
    subs = list(all_subgroups(S4))
    for X in subs:
        for Y in subs[::2]:
            P = product_set(X, Y)
            closed = all(S4.table[a, b] in P for a in P for b in P)
            assert permutes(X, Y) == closed


def test_normal_permutes_with_everything(S4):
    subs = list(all_subgroups(S4))
    for N in normal_subgroups(S4):
        assert all(permutes(N, X) for X in subs)


def test_sublattice_of_subgroup(S4):
    D4 = S4.subgroup([cyc(4, (1, 2, 3, 4)), cyc(4, (1, 3))])
    G = catalog.symmetric(4)
    fresh = G.subgroup([cyc(4, (1, 2, 3, 4)), cyc(4, (1, 3))])
    direct = all_subgroups(fresh)  # enumerated inside D4 (no parent lattice yet)
    all_subgroups(S4)
    filtered = all_subgroups(D4)  # derived from the parent lattice
    assert [s.member_indices for s in direct] == [s.member_indices for s in filtered]
    assert len(direct) == 10
    assert index(D4, S4.trivial) == 8
