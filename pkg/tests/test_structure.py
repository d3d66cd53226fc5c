from collections import Counter
from math import prod

import pytest

import oracles
from conftest import cyc
from supersolv import catalog
from supersolv.errors import PreconditionError
from supersolv.structure import (
    chief_series,
    frattini,
    hall_complement,
    is_elementary_abelian,
    maschke_decompose,
    p_part,
    primes_of,
    sylow,
)
from supersolv.subgroups import is_normal, minimal_normal_subgroups, normal_subgroups


def test_primes_of(S3, A5):
    assert primes_of(catalog.cyclic(1)) == []
    assert primes_of(S3) == [2, 3]
    assert primes_of(A5) == [2, 3, 5]


def test_frattini_examples(S3):
    assert frattini(S3).is_trivial()
    C4 = catalog.cyclic(4)
    assert frattini(C4).order == 2
    assert frattini(catalog.cyclic(1)).is_trivial()


@pytest.mark.parametrize("name", ["S3", "C4", "D4", "Q8", "A4", "C2^3", "C8"])
def test_frattini_matches_oracle(name):
    G = catalog.catalog_entry(name).group
    els, n = frozenset(p.array_form for p in G), G.degree
    expected = frozenset.intersection(*oracles.maximals(els, n))
    assert frozenset(p.array_form for p in frattini(G).elements) == expected


def test_sylow_examples(S3, S4):
    assert sylow(S3, 2).order == 2
    assert sylow(S4, 2).order == 8
    assert sylow(S3, 5).is_trivial()
    with pytest.raises(PreconditionError):
        sylow(S3, 4)


def test_sylow_order_is_p_part(std_catalog):
    for e in std_catalog:
        G = e.group
        if G.order > 100:
            continue
        for p in primes_of(G):
            assert sylow(G, p).order == p_part(G.order, p), (e.name, p)


def test_hall_examples(S3, A5):
    assert hall_complement(S3, 3).order == 2
    C6 = catalog.cyclic(6)
    H = hall_complement(C6, 2)
    assert H.order == 3
    assert hall_complement(A5, 2) is None


def test_chief_series_examples(S3, A4):
    cs = chief_series(catalog.cyclic(1))
    assert cs.factor_orders == () and len(cs.chain) == 1
    assert chief_series(S3).factor_orders == (3, 2)
    cs = chief_series(A4)
    assert cs.factor_orders == (4, 3)
    assert [c.order for c in cs.chain] == [1, 4, 12]


def test_chief_series_invariants(std_catalog):
    for e in std_catalog:
        G = e.group
        if G.order > 100:
            continue
        cs = chief_series(G)
        assert prod(cs.factor_orders) == G.order
        assert all(is_normal(G, N) for N in cs.chain)
        assert all(a < b for a, b in zip(cs.chain, cs.chain[1:]))
        normals = normal_subgroups(G)
        for a, b in zip(cs.chain, cs.chain[1:]):
            assert not any(a < N < b for N in normals)


def test_jordan_holder_tie_breaking(std_catalog):
    """Factor multisets do not depend on which cover the greedy step picks."""
    picked = [e for e in std_catalog if e.group.order <= 100 and len(normal_subgroups(e.group)) > 3][:20]
    assert len(picked) == 20
    for e in picked:
        fwd = Counter(chief_series(e.group).factor_orders)
        rev = Counter(chief_series(e.group, reverse=True).factor_orders)
        assert fwd == rev, e.name


@pytest.mark.parametrize("name", ["S4", "A4", "D4", "C2^3", "S3xC2", "Q8"])
def test_chief_factors_match_every_oracle_chain(name):
    G = catalog.catalog_entry(name).group
    chains = oracles.chief_factor_orders(frozenset(p.array_form for p in G), G.degree)
    assert chains == {tuple(sorted(chief_series(G).factor_orders))}


def test_elementary_abelian_examples(V4):
    C4 = catalog.cyclic(4)
    assert is_elementary_abelian(C4.trivial, 7)
    assert is_elementary_abelian(V4.whole, 2)
    assert not is_elementary_abelian(C4.whole, 2)
    S3 = catalog.symmetric(3)
    assert not is_elementary_abelian(S3.whole, 2)


def test_maschke_examples(A4, S3):
    V = next(N for N in normal_subgroups(A4) if N.order == 4)
    dec = maschke_decompose(A4, V)
    assert dec.m == 1 and dec.components[0] == V
    E = catalog.elementary_abelian(2, 2)
    dec = maschke_decompose(E, E.whole)
    assert dec.m == 2 and [N.order for N in dec.components] == [2, 2]
    C3 = S3.subgroup([cyc(3, (1, 2, 3))])
    assert maschke_decompose(S3, C3).m == 1


def test_maschke_preconditions(S3):
    with pytest.raises(PreconditionError):
        maschke_decompose(S3, S3.subgroup([cyc(3, (1, 2))]))
    C4 = catalog.cyclic(4)
    with pytest.raises(PreconditionError):
        maschke_decompose(C4, C4.whole)
    # V4 inside D4 meets Frattini(D4) = Z(D4), and D4 has a single minimal
    # normal subgroup, so no splitting exists
    D4 = catalog.dihedral(4)
    V = next(N for N in normal_subgroups(D4) if N.order == 4 and is_elementary_abelian(N, 2))
    assert len(minimal_normal_subgroups(D4)) == 1
    with pytest.raises(PreconditionError, match="Frattini"):
        maschke_decompose(D4, V)


def test_maschke_on_catalog(std_catalog):
    seen = 0
    for e in std_catalog:
        G = e.group
        if G.order > 100:
            continue
        phi = frattini(G)
        minimal = minimal_normal_subgroups(G)
        for P in normal_subgroups(G):
            ps = primes_of(P)
            if len(ps) != 1 or not is_elementary_abelian(P, ps[0]) or not P.intersection(phi).is_trivial():
                continue
            dec = maschke_decompose(G, P)
            assert prod(N.order for N in dec.components) == P.order
            assert all(N in minimal for N in dec.components)
            seen += 1
    assert seen > 50


def test_frattini_monotone_on_normal_subgroups(std_catalog):
    for e in std_catalog:
        G = e.group
        if G.order > 60:
            continue
        phi = frattini(G)
        for P in normal_subgroups(G):
            assert frattini(P).issubset(phi), (e.name, P)
