"""Three supersolubility deciders and the witness machinery tying them together.

* chief-series definition: every chief factor has prime order;
* maximal-subgroup criterion: every maximal subgroup has prime index;
* per-prime criterion: for each prime p dividing |G| some supersoluble
  subgroup has index exactly p.
"""
from __future__ import annotations

import dataclasses
import time

import sympy

from .errors import PreconditionError, SupersolvError, TheoremViolation
from .perm import Subgroup
from .structure import chief_series, hall_complement, primes_of
from .subgroups import (
    GroupLike,
    all_subgroups,
    ambient,
    index,
    maximal_subgroups,
    minimal_normal_subgroups,
    product_mask,
)


def is_supersoluble_chief(G: GroupLike) -> bool:
    return all(sympy.isprime(f) for f in chief_series(G).factor_orders)


def is_supersoluble_huppert(G: GroupLike) -> bool:
    A = ambient(G)
    return all(sympy.isprime(index(A, M)) for M in maximal_subgroups(A))


def thm1_witnesses(G: GroupLike, maximal_only: bool = False) -> dict[int, Subgroup | None]:
    """For each prime p of |G|, the first supersoluble subgroup of index p.

    Candidates are scanned in descending canonical order; subgroup
    supersolubility is judged by the chief-series oracle.  ``None`` marks a
    prime with no such subgroup.
    """
    A = ambient(G)
    lat = all_subgroups(A)
    if maximal_only:
        pool = maximal_subgroups(A)
    else:
        pool = lat.subgroups
    out: dict[int, Subgroup | None] = {}
    for p in primes_of(A):
        target = A.order // p
        out[p] = next(
            (H for H in reversed(pool) if H.order == target and is_supersoluble_chief(H)),
            None,
        )
    return out


def is_supersoluble_thm1(G: GroupLike, maximal_only: bool = False) -> bool:
    return all(w is not None for w in thm1_witnesses(G, maximal_only).values())


def supersoluble_witnesses(G: GroupLike) -> dict[int, Subgroup]:
    """Index-p supersoluble subgroups built as maximal overgroups of Hall p'-subgroups."""
    A = ambient(G)
    if A.is_trivial():
        raise PreconditionError("G must be nontrivial")
    if not is_supersoluble_chief(A):
        raise PreconditionError("G must be supersoluble")
    maximals = maximal_subgroups(A)
    out = {}
    for p in primes_of(A):
        hall = hall_complement(A, p)
        if hall is None:
            raise TheoremViolation(f"supersoluble group without a Hall {p}'-subgroup")
        M = next((M for M in maximals if hall.issubset(M)), None)
        if M is None:
            raise TheoremViolation(f"no maximal subgroup contains the Hall {p}'-subgroup")
        if index(A, M) != p or not is_supersoluble_chief(M):
            raise TheoremViolation(
                f"witness for p={p} has index {index(A, M)} or is not supersoluble"
            )
        out[p] = M
    return out


def minimal_normal_complement_check(G: GroupLike, H1: Subgroup, N: Subgroup) -> bool:
    """With |G:H1| = p prime and N minimal normal, N ⊄ H1: is G = N H1 with
    N ∩ H1 = 1 and |N| = p?"""
    A = ambient(G)
    p = index(A, H1)
    if not sympy.isprime(p):
        raise PreconditionError(f"H1 has non-prime index {p}")
    if N not in minimal_normal_subgroups(A):
        raise PreconditionError("N must be a minimal normal subgroup of G")
    if N.issubset(H1):
        raise PreconditionError("N must not be contained in H1")
    covers = bool((product_mask(N, H1) == A.mask).all())
    return covers and N.intersection(H1).is_trivial() and N.order == p


def describe(G: GroupLike, H: Subgroup) -> dict:
    return {
        "generators": [str(g) for g in H.generators()],
        "order": H.order,
        "index": index(G, H),
    }


@dataclasses.dataclass
class CriterionReport:
    group_id: str
    order: int
    verdict_chief: bool | None
    verdict_huppert: bool | None
    verdict_thm1: bool | None
    witnesses: dict[int, dict]
    timing: dict[str, float]
    errors: dict[str, str] = dataclasses.field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        v = {self.verdict_chief, self.verdict_huppert, self.verdict_thm1}
        return len(v) == 1 and None not in v

    def to_json(self, witnesses: bool = True) -> dict:
        return {
            "group_id": self.group_id,
            "order": self.order,
            "verdict_chief": self.verdict_chief,
            "verdict_huppert": self.verdict_huppert,
            "verdict_thm1": self.verdict_thm1,
            "witnesses": {str(p): w for p, w in sorted(self.witnesses.items())} if witnesses else {},
            "errors": dict(self.errors),
            "timing": dict(self.timing),
        }


def criteria_report(G: GroupLike, group_id: str = "", maximal_only: bool = False) -> CriterionReport:
    """Run all three deciders; a budget error in one is recorded, not raised."""
    A = ambient(G)
    verdicts: dict[str, bool | None] = {}
    timing: dict[str, float] = {}
    errors: dict[str, str] = {}
    found: dict[int, Subgroup | None] = {}

    def run(name, fn):
        t0 = time.perf_counter()
        try:
            verdicts[name] = fn()
        except SupersolvError as exc:
            if isinstance(exc, TheoremViolation):
                raise
            verdicts[name] = None
            errors[name] = str(exc)
        timing[name] = time.perf_counter() - t0

    def thm1():
        found.update(thm1_witnesses(A, maximal_only))
        return all(w is not None for w in found.values())

    run("chief", lambda: is_supersoluble_chief(A))
    run("huppert", lambda: is_supersoluble_huppert(A))
    run("thm1", thm1)
    witnesses = {}
    if verdicts["thm1"]:
        witnesses = {p: describe(A, H) for p, H in found.items()}
    return CriterionReport(
        group_id=group_id,
        order=A.order,
        verdict_chief=verdicts["chief"],
        verdict_huppert=verdicts["huppert"],
        verdict_thm1=verdicts["thm1"],
        witnesses=witnesses,
        timing=timing,
        errors=errors,
    )
