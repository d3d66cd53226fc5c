"""Finite permutation groups and cross-checked supersolubility criteria."""

__version__ = "0.1.0"

from .catalog import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    factorization_cases,
    metacyclic_21,
    parse_group,
    quaternion8,
    render,
    standard_catalog,
    symmetric,
)
from .criteria import (
    criteria_report,
    is_supersoluble_chief,
    is_supersoluble_huppert,
    is_supersoluble_thm1,
    minimal_normal_complement_check,
    supersoluble_witnesses,
)
from .errors import BudgetError, ParseError, PreconditionError, TheoremViolation
from .perm import Group, Perm, Subgroup, compose, conjugate, conjugate_subgroup, group_from_generators, inverse, join
from .structure import chief_series, frattini, hall_complement, maschke_decompose, primes_of, sylow
from .subgroups import (
    all_subgroups,
    index,
    is_normal,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_subgroups,
    permutes,
    product_set,
)
from .tcc import corollary1_verify, corollary2_verify, lemma1_check, tcc_permutable, totally_permutable
