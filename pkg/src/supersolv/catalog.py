"""Small-group constructors, the standard catalog, curated factorizations and
the one-group-per-file text format::

    degree: 5
    gens: (1 2 3)(4 5), (1 2)
"""
from __future__ import annotations

import dataclasses
import functools
import re

from .config import settings
from .errors import BudgetError, ParseError
from .perm import Group, Perm, group_from_generators
from .tcc import FactorizationCase


def _cyc(degree: int, *cycles) -> Perm:
    return Perm.from_cycles(degree, cycles)


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("n must be positive")
    gens = [_cyc(n, tuple(range(1, n + 1)))] if n > 1 else []
    return group_from_generators(n, gens)


def dihedral(n: int) -> Group:
    """Symmetries of the n-gon on n points, order 2n (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3 to act faithfully on n points")
    rot = _cyc(n, tuple(range(1, n + 1)))
    ref = Perm([n + 1 - i for i in range(1, n + 1)])
    return group_from_generators(n, [rot, ref])


def symmetric(n: int) -> Group:
    if n > 6:
        raise BudgetError("symmetric degree", 6, n)
    if n < 2:
        return group_from_generators(max(n, 1), [])
    return group_from_generators(n, [_cyc(n, (1, 2)), _cyc(n, tuple(range(1, n + 1)))])


def alternating(n: int) -> Group:
    if n > 6:
        raise BudgetError("alternating degree", 6, n)
    if n < 3:
        return group_from_generators(max(n, 1), [])
    return group_from_generators(n, [_cyc(n, (1, 2, k)) for k in range(3, n + 1)])


# unit products for the quaternion basis 1, i, j, k: (sign, unit)
_QUAT = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion8() -> Group:
    """Q8 in its right regular representation; point 2u+1+s is (-1)^s * unit u."""

    def point(sign: int, unit: int) -> int:
        return 2 * unit + (0 if sign > 0 else 1) + 1

    def right_mult(g: int) -> Perm:
        images = []
        for unit in range(4):
            for sign in (1, -1):
                s, u = _QUAT[(unit, g)]
                images.append(point(sign * s, u))
        return Perm(images)

    return group_from_generators(8, [right_mult(1), right_mult(2)])


def elementary_abelian(p: int, k: int) -> Group:
    """(C_p)^k as k disjoint p-cycles."""
    if p**k > 256:
        raise BudgetError("elementary abelian order", 256, p**k)
    n = p * k
    gens = [_cyc(n, tuple(range(i * p + 1, (i + 1) * p + 1))) for i in range(k)]
    return group_from_generators(max(n, 1), gens)


def direct_product(A: Group, B: Group) -> Group:
    """A x B acting on disjoint point sets (A first)."""
    n = A.degree + B.degree
    gens = []
    for g in A.generators:
        gens.append(Perm(list(g.images) + list(range(A.degree + 1, n + 1))))
    for g in B.generators:
        gens.append(Perm(list(range(1, A.degree + 1)) + [i + A.degree for i in g.images]))
    return group_from_generators(n, gens)


def metacyclic_21() -> Group:
    """C7 : C3 via x -> x + 1 and x -> 2x on Z/7 (points 1..7 hold 0..6)."""
    return group_from_generators(7, [_cyc(7, (1, 2, 3, 4, 5, 6, 7)), _cyc(7, (2, 3, 5), (4, 7, 6))])


@dataclasses.dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: Group
    # fixture metadata only; never read by the deciders
    expected: bool | None = None


def _product_specs():
    S3, A4, Q8, M21 = symmetric(3), alternating(4), quaternion8(), metacyclic_21()
    C = cyclic
    return [
        ("S3xC2", S3, C(2), True),
        ("S3xC3", S3, C(3), True),
        ("S3xC4", S3, C(4), True),
        ("S3xS3", S3, S3, True),
        ("D4xC2", dihedral(4), C(2), True),
        ("D4xC3", dihedral(4), C(3), True),
        ("D4xS3", dihedral(4), S3, True),
        ("D5xC3", dihedral(5), C(3), True),
        ("S3xD5", S3, dihedral(5), True),
        ("Q8xC2", Q8, C(2), True),
        ("Q8xC3", Q8, C(3), True),
        ("Q8xS3", Q8, S3, True),
        ("M21xC2", M21, C(2), True),
        ("M21xC3", M21, C(3), True),
        ("C2^2xC3^2", elementary_abelian(2, 2), elementary_abelian(3, 2), True),
        ("A4xC2", A4, C(2), False),
        ("A4xC3", A4, C(3), False),
        ("A4xC4", A4, C(4), False),
        ("A4xC5", A4, C(5), False),
        ("A4xS3", A4, S3, False),
        ("S4xC2", symmetric(4), C(2), False),
        ("S4xC3", symmetric(4), C(3), False),
    ]


@functools.lru_cache(maxsize=1)
def standard_catalog() -> tuple[CatalogEntry, ...]:
    """Fixed, ordered list of test groups (orders 1 to 120)."""
    out = [CatalogEntry(f"C{n}", cyclic(n), True) for n in range(1, 31)]
    out += [CatalogEntry(f"D{n}", dihedral(n), True) for n in range(3, 16)]
    out += [
        CatalogEntry("S3", symmetric(3), True),
        CatalogEntry("S4", symmetric(4), False),
        CatalogEntry("S5", symmetric(5), False),
        CatalogEntry("A4", alternating(4), False),
        CatalogEntry("A5", alternating(5), False),
        CatalogEntry("Q8", quaternion8(), True),
        CatalogEntry("C2^2", elementary_abelian(2, 2), True),
        CatalogEntry("C2^3", elementary_abelian(2, 3), True),
        CatalogEntry("C2^4", elementary_abelian(2, 4), True),
        CatalogEntry("C3^2", elementary_abelian(3, 2), True),
        CatalogEntry("M21", metacyclic_21(), True),
    ]
    out += [CatalogEntry(name, direct_product(A, B), exp) for name, A, B, exp in _product_specs()]
    return tuple(out)


def catalog_entry(name: str) -> CatalogEntry:
    for e in standard_catalog():
        if e.name.lower() == name.lower():
            return e
    raise KeyError(f"unknown catalog group {name!r}")


def _case_pair(name, G, h_gens, k_gens, expected):
    H, K = G.subgroup(h_gens), G.subgroup(k_gens)
    return [
        FactorizationCase(name, G, H, K, "totally_permutable", expected),
        FactorizationCase(name, G, H, K, "tcc", expected),
    ]


def factorization_cases() -> list[FactorizationCase]:
    """Curated G = HK factorizations, each listed once per permutability kind."""
    c = _cyc
    cases = []
    cases += _case_pair("S3;C3,C2", symmetric(3), [c(3, (1, 2, 3))], [c(3, (1, 2))], True)
    g6 = c(6, (1, 2, 3, 4, 5, 6))
    cases += _case_pair("C6;C2,C3", cyclic(6), [g6 * g6 * g6], [g6 * g6], True)
    S4 = symmetric(4)
    cases += _case_pair("S4;D4,C3", S4, [c(4, (1, 2, 3, 4)), c(4, (1, 3))], [c(4, (1, 2, 3))], False)
    cases += _case_pair("S4;S3,C4", S4, [c(4, (1, 2)), c(4, (1, 2, 3))], [c(4, (1, 2, 3, 4))], False)
    cases += _case_pair(
        "S4;A4,C2", S4, [c(4, (1, 2), (3, 4)), c(4, (1, 2, 3))], [c(4, (1, 2))], False
    )
    cases += _case_pair("D4;C4,C2", dihedral(4), [c(4, (1, 2, 3, 4))], [c(4, (1, 4), (2, 3))], True)
    cases += _case_pair(
        "A4;V4,C3", alternating(4), [c(4, (1, 2), (3, 4)), c(4, (1, 3), (2, 4))], [c(4, (1, 2, 3))], False
    )
    cases += _case_pair("C2^2;C2,C2", elementary_abelian(2, 2), [c(4, (1, 2))], [c(4, (3, 4))], True)
    M21 = metacyclic_21()
    cases += _case_pair("M21;C7,C3", M21, [M21.generators[0]], [M21.generators[1]], True)
    Q8 = quaternion8()
    cases += _case_pair("Q8;C4,C4", Q8, [Q8.generators[0]], [Q8.generators[1]], True)
    r6 = c(6, (1, 2, 3, 4, 5, 6))
    s6 = Perm([6, 5, 4, 3, 2, 1])
    cases += _case_pair("D6;S3,C2", dihedral(6), [r6 * r6, s6], [r6 * r6 * r6], True)
    # tcc-permutable without being totally permutable
    cases += _case_pair(
        "D6;C2,S3'", dihedral(6), [c(6, (2, 6), (3, 5))], [c(6, (1, 2), (3, 6), (4, 5)), r6 * r6], True
    )
    cases += _case_pair(
        "S3xC3;C6,S3", direct_product(symmetric(3), cyclic(3)),
        [c(6, (2, 3), (4, 5, 6))], [c(6, (2, 3)), c(6, (1, 2))], True,
    )
    S3xS3 = direct_product(symmetric(3), symmetric(3))
    a, b, x, y = S3xS3.generators
    cases += _case_pair("S3xS3;S3,S3", S3xS3, [a, b], [x, y], True)
    cases += _case_pair(
        "A5;A4,C5", alternating(5), [c(5, (1, 2, 3)), c(5, (1, 2), (3, 4))], [c(5, (1, 2, 3, 4, 5))], False
    )
    return cases


# ---- text format -----------------------------------------------------------

_DEGREE = re.compile(r"\s*degree\s*:\s*(\d+)\s*$")
_GENS = re.compile(r"\s*gens\s*:(.*)$")


def _parse_perm(text: str, degree: int, line: int, col0: int) -> Perm:
    cycles: list[tuple[int, ...]] = []
    seen: dict[int, int] = {}
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {ch!r}", line, col0 + i)
        close = text.find(")", i)
        if close < 0:
            raise ParseError("unclosed cycle", line, col0 + i)
        cyc = []
        for m in re.finditer(r"\S+", text[i + 1 : close]):
            col = col0 + i + 1 + m.start()
            tok = m.group()
            if not tok.isdigit():
                raise ParseError(f"bad point {tok!r}", line, col)
            pt = int(tok)
            if not 1 <= pt <= degree:
                raise ParseError(f"point {pt} outside 1..{degree}", line, col)
            if pt in seen:
                raise ParseError(f"point {pt} repeated", line, col)
            seen[pt] = col
            cyc.append(pt)
        if cyc:
            cycles.append(tuple(cyc))
        i = close + 1
    return Perm.from_cycles(degree, cycles)


def parse_group(text: str) -> Group:
    """Parse the ``degree:`` / ``gens:`` format; errors carry line and column."""
    degree = None
    gens_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _DEGREE.match(raw)
        if m and degree is None:
            degree = int(m.group(1))
            if degree < 1:
                raise ParseError("degree must be positive", lineno, m.start(1) + 1)
            if degree > settings.max_degree:
                raise BudgetError("degree", settings.max_degree, degree)
            continue
        m = _GENS.match(raw)
        if m and degree is not None and gens_line is None:
            gens_line = (lineno, m.start(1), m.group(1))
            continue
        if degree is None:
            raise ParseError("expected 'degree: <n>'", lineno, 1)
        raise ParseError("unexpected line", lineno, 1)
    if degree is None:
        raise ParseError("missing 'degree:' line", 1, 1)
    if gens_line is None:
        raise ParseError("missing 'gens:' line", lineno if text else 1, 1)
    lineno, offset, body = gens_line
    gens = []
    start = 0
    for part in body.split(","):
        if not part.strip():
            raise ParseError("empty generator", lineno, offset + start + 1)
        gens.append(_parse_perm(part, degree, lineno, offset + start + 1))
        start += len(part) + 1
    return group_from_generators(degree, gens)


def render(G: Group) -> str:
    gens = ", ".join(str(g) for g in G.generators) or "()"
    return f"degree: {G.degree}\ngens: {gens}\n"
