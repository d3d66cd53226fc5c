"""Total permutability, tcc-permutability and the factorization checks built
on them.

H and K are tcc-permutable when every X <= H and Y <= K admit some
u in <X, Y> with X Y^u = Y^u X.
"""
from __future__ import annotations

import dataclasses
from typing import Literal

from . import kernels
from .config import settings
from .criteria import is_supersoluble_chief
from .errors import BudgetError, PreconditionError, TheoremViolation
from .perm import Group, Perm, Subgroup, conjugate_subgroup, join
from .subgroups import all_subgroups, permutes, product_mask

Kind = Literal["totally_permutable", "tcc"]


def _pair_lattices(H: Subgroup, K: Subgroup):
    if H.parent is not K.parent:
        raise PreconditionError("subgroups belong to different parent groups")
    return all_subgroups(H), all_subgroups(K)


def totally_permutable(H: Subgroup, K: Subgroup) -> bool:
    """Every subgroup of H permutes with every subgroup of K."""
    LH, LK = _pair_lattices(H, K)
    return all(permutes(X, Y) for X in LH for Y in LK)


@dataclasses.dataclass
class TccResult:
    holds: bool
    # (position of X in lattice(H), position of Y in lattice(K)) -> u index
    witnesses: dict[tuple[int, int], int]
    failing_pair: tuple[Subgroup, Subgroup] | None = None
    pairs_checked: int = 0

    def __bool__(self):
        return self.holds


def tcc_permutable(H: Subgroup, K: Subgroup) -> TccResult:
    """Exhaustive check over all pairs (X, Y); stops at the first failing pair.

    The witness for each pair is the first u of <X, Y> in canonical element
    order, so permuting pairs always get the identity.
    """
    LH, LK = _pair_lattices(H, K)
    G = H.parent
    cost = len(LH) * len(LK) * join(H, K).order
    if cost > settings.tcc_budget:
        raise BudgetError("tcc elementary checks", settings.tcc_budget, cost)
    table, inv = G.table, G.inv
    witnesses: dict[tuple[int, int], int] = {}
    checked = 0
    for i, X in enumerate(LH):
        xs = X.members
        for j, Y in enumerate(LK):
            checked += 1
            us = join(X, Y).members
            u = int(kernels.tcc_witness(table, inv, xs, Y.members, us))
            if u < 0:
                return TccResult(False, witnesses, (X, Y), checked)
            witnesses[(i, j)] = u
    return TccResult(True, witnesses, None, checked)


def lemma1_check(H: Subgroup, K: Subgroup, h: Perm | int, assume_tcc: bool = False) -> bool:
    """tcc-permutability survives replacing K by K^h for h in H.

    Returns True or raises :class:`TheoremViolation`.
    """
    u = H.parent.index_of(h) if isinstance(h, Perm) else int(h)
    if u not in H:
        raise PreconditionError("h must be an element of H")
    if not assume_tcc and not tcc_permutable(H, K):
        raise PreconditionError("H and K must be tcc-permutable")
    if not tcc_permutable(H, conjugate_subgroup(K, u)):
        raise TheoremViolation(f"H and K^h are not tcc-permutable for h={H.parent.elements[u]}")
    return True


@dataclasses.dataclass
class FactorizationCase:
    name: str
    G: Group
    H: Subgroup
    K: Subgroup
    kind: Kind
    expected_supersoluble: bool | None = None

    def __post_init__(self):
        if self.kind not in ("totally_permutable", "tcc"):
            raise ValueError(f"unknown factorization kind {self.kind!r}")
        for S in (self.H, self.K):
            if S.parent is not self.G:
                raise PreconditionError(f"{self.name}: subgroup not in G")
        if not product_mask(self.H, self.K).all():
            raise PreconditionError(f"{self.name}: G != HK")


@dataclasses.dataclass
class CorollaryVerdict:
    case: str
    kind: Kind
    order: int
    h_supersoluble: bool
    k_supersoluble: bool
    permutable: bool
    hypotheses_hold: bool
    g_supersoluble: bool

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def _verify(case: FactorizationCase, kind: Kind, permutable: bool) -> CorollaryVerdict:
    if case.kind != kind:
        raise PreconditionError(f"case {case.name} has kind {case.kind}, expected {kind}")
    hs = is_supersoluble_chief(case.H)
    ks = is_supersoluble_chief(case.K)
    gs = is_supersoluble_chief(case.G)
    hyp = hs and ks and permutable
    if hyp and not gs:
        raise TheoremViolation(f"{case.name}: {kind} hypotheses hold but G is not supersoluble")
    return CorollaryVerdict(case.name, kind, case.G.order, hs, ks, permutable, hyp, gs)


def corollary1_verify(case: FactorizationCase) -> CorollaryVerdict:
    """Supersoluble, totally permutable factors force a supersoluble product."""
    return _verify(case, "totally_permutable", totally_permutable(case.H, case.K))


def corollary2_verify(case: FactorizationCase) -> CorollaryVerdict:
    """Supersoluble, tcc-permutable factors force a supersoluble product."""
    return _verify(case, "tcc", tcc_permutable(case.H, case.K).holds)


def lemma1_replay(H: Subgroup, K: Subgroup) -> int:
    """Run :func:`lemma1_check` for every h in H; returns the number of checks.

    Conjugates coinciding as subgroups are checked once.
    """
    seen = set()
    for h in H.member_indices:
        Kh = conjugate_subgroup(K, h)
        if Kh.key in seen:
            continue
        seen.add(Kh.key)
        lemma1_check(H, K, h, assume_tcc=True)
    return len(H.member_indices)

