"""Frattini, Sylow and Hall subgroups, chief series, Maschke decomposition."""
from __future__ import annotations

import dataclasses

import numpy as np
import sympy

from .errors import PreconditionError, TheoremViolation
from .perm import Subgroup, join
from .subgroups import (
    GroupLike,
    all_subgroups,
    ambient,
    is_normal,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_subgroups,
)


@dataclasses.dataclass(frozen=True)
class ChiefSeries:
    chain: tuple[Subgroup, ...]
    factor_orders: tuple[int, ...]

    def __len__(self):
        return len(self.factor_orders)


@dataclasses.dataclass(frozen=True)
class MaschkeDecomposition:
    components: tuple[Subgroup, ...]

    @property
    def m(self) -> int:
        return len(self.components)


def primes_of(G: GroupLike) -> list[int]:
    return sorted(sympy.primefactors(ambient(G).order))


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def frattini(G: GroupLike) -> Subgroup:
    """Intersection of all maximal subgroups (the group itself when trivial)."""
    A = ambient(G)
    mask = A.mask.copy()
    for M in maximal_subgroups(A):
        mask &= M.mask
    return Subgroup.from_mask(A.parent, mask)


def sylow(G: GroupLike, p: int) -> Subgroup:
    """First subgroup of order p^a in canonical lattice order."""
    if not sympy.isprime(p):
        raise PreconditionError(f"{p} is not prime")
    A = ambient(G)
    target = p_part(A.order, p)
    if target == 1:
        return A.parent.trivial
    return next(s for s in all_subgroups(A) if s.order == target)


def hall_complement(G: GroupLike, p: int) -> Subgroup | None:
    """First subgroup of order |G|/p^a, or None when no Hall p'-subgroup exists."""
    if not sympy.isprime(p):
        raise PreconditionError(f"{p} is not prime")
    A = ambient(G)
    target = A.order // p_part(A.order, p)
    return next((s for s in all_subgroups(A) if s.order == target), None)


def chief_series(G: GroupLike, reverse: bool = False) -> ChiefSeries:
    """Greedy maximal chain of normal subgroups.

    Each step takes the canonically first normal subgroup covering the current
    term (``reverse=True`` takes the last, for tie-breaking robustness checks).
    """
    A = ambient(G)
    normals = normal_subgroups(A)
    current = A.parent.trivial
    chain = [current]
    factors = []
    while current.order < A.order:
        above = [n for n in normals if current < n]
        covers = [n for n in above if not any(m < n for m in above)]
        nxt = covers[-1] if reverse else covers[0]
        factors.append(nxt.order // current.order)
        chain.append(nxt)
        current = nxt
    return ChiefSeries(tuple(chain), tuple(factors))


def is_abelian(P: Subgroup) -> bool:
    t = P.parent.table
    g = np.array(P.gen_indices, dtype=np.int64)
    return bool((t[np.ix_(g, g)] == t[np.ix_(g, g)].T).all())


def is_elementary_abelian(P: Subgroup, p: int) -> bool:
    if P.is_trivial():
        return True
    orders = P.parent.element_orders[P.members]
    return bool(is_abelian(P) and (orders[1:] == p).all())


def maschke_decompose(G: GroupLike, P: Subgroup) -> MaschkeDecomposition:
    """Split an elementary abelian normal P into minimal normal subgroups of G.

    Requires ``P ∩ Φ(G) = 1``; under that condition P is a completely reducible
    G-module, so greedily adding minimal normal subgroups that meet the running
    product trivially must reach P.
    """
    A = ambient(G)
    if not P.issubset(A) or not is_normal(A, P):
        raise PreconditionError("P must be a normal subgroup of G")
    if P.is_trivial():
        return MaschkeDecomposition(())
    primes = primes_of(P)
    if len(primes) != 1 or not is_elementary_abelian(P, primes[0]):
        raise PreconditionError("P must be an elementary abelian p-group")
    if not frattini(P).is_trivial():
        raise PreconditionError("P must have trivial Frattini subgroup")
    if not P.intersection(frattini(A)).is_trivial():
        raise PreconditionError("P must meet the Frattini subgroup of G trivially")
    candidates = [N for N in minimal_normal_subgroups(A) if N.issubset(P)]
    components: list[Subgroup] = []
    current = A.parent.trivial
    while current.order < P.order:
        N = next((N for N in candidates if N.intersection(current).is_trivial()), None)
        if N is None:
            raise TheoremViolation(
                f"no minimal normal subgroup complements the partial product of order {current.order}"
            )
        components.append(N)
        current = join(current, N)
    if np.prod([N.order for N in components]) != P.order or current != P:
        raise TheoremViolation("Maschke components do not multiply to P")
    return MaschkeDecomposition(tuple(components))
