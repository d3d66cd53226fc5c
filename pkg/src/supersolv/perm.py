"""Permutations, enumerated permutation groups and their subgroups.

Products are read left to right: ``compose(p, q)`` applies ``p`` first and
then ``q``.  Conjugation follows the same convention, ``p^s = s^-1 p s``.
"""
from __future__ import annotations

import functools
import math
from collections.abc import Iterable, Sequence

import numpy as np

from . import kernels
from .config import settings
from .errors import BudgetError, PreconditionError


@functools.total_ordering
class Perm:
    """A bijection of ``{1..degree}``.

    Stored 0-based in ``array_form``; ``images`` gives the 1-based view.
    """

    __slots__ = ("array_form", "_hash")

    def __init__(self, images: Sequence[int]):
        a = tuple(int(i) - 1 for i in images)
        if len(a) > settings.max_degree:
            raise BudgetError("degree", settings.max_degree, len(a))
        if sorted(a) != list(range(len(a))):
            raise ValueError(f"not a permutation of 1..{len(a)}: {tuple(images)!r}")
        self.array_form = a
        self._hash = hash(a)

    @classmethod
    def _from_array(cls, a: tuple[int, ...]) -> "Perm":
        p = object.__new__(cls)
        p.array_form = a
        p._hash = hash(a)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._from_array(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build from disjoint 1-based cycles, e.g. ``[(1, 2, 3), (4, 5)]``."""
        a = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated in cycles")
                seen.add(pt)
            for i, pt in enumerate(cyc):
                a[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls([i + 1 for i in a])

    @property
    def degree(self) -> int:
        return len(self.array_form)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.array_form)

    def __call__(self, point: int) -> int:
        return self.array_form[point - 1] + 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start] or self.array_form[start] == start:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.array_form[i]
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.array_form))

    def order(self) -> int:
        return functools.reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __invert__(self) -> "Perm":
        return inverse(self)

    def __pow__(self, other: "Perm") -> "Perm":
        return conjugate(self, other)

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.array_form == other.array_form

    def __lt__(self, other: "Perm") -> bool:
        return self.array_form < other.array_form

    def __hash__(self):
        return self._hash

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Perm({str(self)!r}, degree={self.degree})"


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p``, then ``q``."""
    if p.degree != q.degree:
        raise PreconditionError(f"degree mismatch: {p.degree} vs {q.degree}")
    qa = q.array_form
    return Perm._from_array(tuple(qa[i] for i in p.array_form))


def inverse(p: Perm) -> Perm:
    a = [0] * p.degree
    for i, v in enumerate(p.array_form):
        a[v] = i
    return Perm._from_array(tuple(a))


def conjugate(p: Perm, s: Perm) -> Perm:
    """``s^-1 * p * s``; relabels each point ``i`` of ``p`` as ``s(i)``."""
    if p.degree != s.degree:
        raise PreconditionError(f"degree mismatch: {p.degree} vs {s.degree}")
    a = [0] * p.degree
    sa = s.array_form
    for i, v in enumerate(p.array_form):
        a[sa[i]] = sa[v]
    return Perm._from_array(tuple(a))


class Group:
    """A permutation group with a fully enumerated, lexicographically sorted
    element list.  Build it with :func:`group_from_generators`.

    The identity is always ``elements[0]``.
    """

    def __init__(self, degree: int, generators: Sequence[Perm], elements: Sequence[Perm]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self._index = {p: i for i, p in enumerate(self.elements)}
        self._table = None
        self._inv = None
        self._orders = None
        self._lattices: dict = {}
        self._whole = None
        self._trivial = None

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"<Group degree={self.degree} order={self.order} gens={gens}>"

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return p in self._index

    def index_of(self, p: Perm) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise PreconditionError(f"{p} is not an element of the group") from None

    @property
    def array(self) -> np.ndarray:
        return np.array([p.array_form for p in self.elements], dtype=np.int64).reshape(
            self.order, self.degree
        )

    @property
    def table(self) -> np.ndarray:
        """``table[i, j]`` = index of ``elements[i] * elements[j]``."""
        if self._table is None:
            self._table = _multiplication_table(self)
        return self._table

    @property
    def inv(self) -> np.ndarray:
        if self._inv is None:
            t = self.table
            self._inv = np.argmax(t == 0, axis=1).astype(np.int32)
        return self._inv

    @property
    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = kernels.element_orders(self.table)
        return self._orders

    @property
    def whole(self) -> "Subgroup":
        if self._whole is None:
            self._whole = Subgroup(self, range(self.order), gens=self._generator_indices())
        return self._whole

    @property
    def trivial(self) -> "Subgroup":
        if self._trivial is None:
            self._trivial = Subgroup(self, (0,), gens=())
        return self._trivial

    def _generator_indices(self) -> tuple[int, ...]:
        return tuple(sorted({self._index[g] for g in self.generators} - {0}))

    def subgroup(self, gens: Iterable[Perm]) -> "Subgroup":
        """The subgroup generated by ``gens`` (which must lie in the group)."""
        idx = tuple(sorted({self.index_of(g) for g in gens} - {0}))
        return Subgroup.from_mask(self, kernels.closure(self.table, np.array(idx, dtype=np.int64)), gens=idx)

    def subgroup_from_elements(self, elems: Iterable[Perm]) -> "Subgroup":
        """Wrap an explicit element set; raises if it is not closed."""
        members = sorted({self.index_of(p) for p in elems})
        s = Subgroup(self, members)
        if not s.is_closed():
            raise PreconditionError("element set is not a subgroup")
        return s


def _multiplication_table(G: Group) -> np.ndarray:
    if G.order > settings.max_table_order:
        raise BudgetError("multiplication table order", settings.max_table_order, G.order)
    E = G.array
    n, d = E.shape
    if d == 0:
        return np.zeros((1, 1), dtype=np.int32)
    # rows are mapped back to indices through a 64-bit polynomial key,
    # then checked for exact equality, so a key collision cannot go unnoticed
    rng = np.random.default_rng(0x5eed)
    weights = rng.integers(1, 2**62, size=d, dtype=np.uint64) | np.uint64(1)
    keys = (E.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    if np.any(sorted_keys[1:] == sorted_keys[:-1]):
        return _multiplication_table_slow(G)
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        # row i: e_i then e_j  ->  images e_j[e_i[k]]
        prod = E[:, E[i]]
        pk = (prod.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
        pos = np.searchsorted(sorted_keys, pk)
        j = order[np.minimum(pos, n - 1)]
        if not np.array_equal(E[j], prod):
            return _multiplication_table_slow(G)
        table[i] = j
    return table


def _multiplication_table_slow(G: Group) -> np.ndarray:
    idx = G._index
    table = np.empty((G.order, G.order), dtype=np.int32)
    for i, p in enumerate(G.elements):
        for j, q in enumerate(G.elements):
            table[i, j] = idx[compose(p, q)]
    return table


def group_from_generators(degree: int, gens: Sequence[Perm]) -> Group:
    """Enumerate the closure of ``gens`` breadth-first.

    Raises :class:`BudgetError` once the closure passes ``settings.max_order``.
    """
    if degree > settings.max_degree:
        raise BudgetError("degree", settings.max_degree, degree)
    for g in gens:
        if g.degree != degree:
            raise PreconditionError(f"generator {g} has degree {g.degree}, expected {degree}")
    ident = tuple(range(degree))
    arrays = sorted({g.array_form for g in gens} - {ident})
    seen = {ident}
    frontier = [ident]
    cap = settings.max_order
    while frontier:
        nxt = []
        for x in frontier:
            for g in arrays:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > cap:
            raise BudgetError("group order", cap, len(seen))
        frontier = nxt
    elements = [Perm._from_array(a) for a in sorted(seen)]
    return Group(degree, gens, elements)


class Subgroup:
    """A closed subset of ``parent.elements``, stored as sorted indices.

    Two subgroups are equal iff they share a parent and a member set.
    """

    __slots__ = ("parent", "member_indices", "_mask", "_key", "_gens")

    def __init__(self, parent: Group, members: Iterable[int], gens: Sequence[int] | None = None):
        self.parent = parent
        self.member_indices = tuple(sorted(int(m) for m in members))
        self._mask = None
        self._key = None
        self._gens = None if gens is None else tuple(int(g) for g in gens)

    @classmethod
    def from_mask(cls, parent: Group, mask: np.ndarray, gens: Sequence[int] | None = None) -> "Subgroup":
        s = cls.__new__(cls)
        s.parent = parent
        s.member_indices = tuple(np.flatnonzero(mask).tolist())
        s._mask = np.asarray(mask, dtype=np.bool_)
        s._key = None
        s._gens = None if gens is None else tuple(int(g) for g in gens)
        return s

    @property
    def order(self) -> int:
        return len(self.member_indices)

    def __len__(self):
        return self.order

    @property
    def members(self) -> np.ndarray:
        return np.array(self.member_indices, dtype=np.int64)

    @property
    def mask(self) -> np.ndarray:
        if self._mask is None:
            m = np.zeros(self.parent.order, dtype=np.bool_)
            m[list(self.member_indices)] = True
            self._mask = m
        return self._mask

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = np.packbits(self.mask).tobytes()
        return self._key

    @property
    def sort_key(self) -> tuple:
        return (self.order, self.member_indices)

    @property
    def gen_indices(self) -> tuple[int, ...]:
        """A small generating set, found greedily in canonical order if unknown."""
        if self._gens is None:
            table = self.parent.table
            gens: list[int] = []
            cur = np.zeros(self.parent.order, dtype=np.bool_)
            cur[0] = True
            for m in self.member_indices:
                if not cur[m]:
                    gens.append(m)
                    cur = kernels.closure(table, np.array(gens, dtype=np.int64))
                    if cur.sum() == self.order:
                        break
            self._gens = tuple(gens)
        return self._gens

    def generators(self) -> list[Perm]:
        return [self.parent.elements[i] for i in self.gen_indices]

    @property
    def elements(self) -> list[Perm]:
        return [self.parent.elements[i] for i in self.member_indices]

    def __contains__(self, item) -> bool:
        if isinstance(item, Perm):
            i = self.parent._index.get(item)
            return i is not None and bool(self.mask[i])
        return bool(self.mask[int(item)])

    def issubset(self, other: "Subgroup") -> bool:
        _same_parent(self, other)
        return self.order <= other.order and bool(other.mask[self.members].all())

    def __le__(self, other: "Subgroup") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Subgroup") -> bool:
        return self.order < other.order and self.issubset(other)

    def intersection(self, other: "Subgroup") -> "Subgroup":
        _same_parent(self, other)
        return Subgroup.from_mask(self.parent, self.mask & other.mask)

    def is_closed(self) -> bool:
        if 0 not in self.member_indices:
            return False
        m = self.members
        t = self.parent.table
        return bool(self.mask[t[np.ix_(m, m)]].all()) and bool(self.mask[self.parent.inv[m]].all())

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.member_indices == other.member_indices

    def __hash__(self):
        return hash((id(self.parent), self.key))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators()) or "()"
        return f"<Subgroup order={self.order} gens={gens}>"


def _same_parent(a: Subgroup, b: Subgroup) -> None:
    if a.parent is not b.parent:
        raise PreconditionError("subgroups belong to different parent groups")


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    """Smallest subgroup of the common parent containing both."""
    _same_parent(A, B)
    if B.issubset(A):
        return A
    if A.issubset(B):
        return B
    gens = tuple(sorted(set(A.gen_indices) | set(B.gen_indices)))
    mask = kernels.closure(A.parent.table, np.array(gens, dtype=np.int64))
    return Subgroup.from_mask(A.parent, mask, gens=gens)


def conjugate_subgroup(K: Subgroup, h: Perm | int) -> Subgroup:
    """``K^h = {h^-1 k h : k in K}``; ``h`` is a Perm or a parent index."""
    G = K.parent
    u = G.index_of(h) if isinstance(h, Perm) else int(h)
    if not 0 <= u < G.order:
        raise PreconditionError(f"element index {u} outside parent")
    conj = kernels.conjugate_members(G.table, G.inv, K.members, np.int64(u))
    gens = None
    if K._gens is not None:
        gens = kernels.conjugate_members(G.table, G.inv, np.array(K._gens, dtype=np.int64), np.int64(u)).tolist()
    mask = np.zeros(G.order, dtype=np.bool_)
    mask[conj] = True
    return Subgroup.from_mask(G, mask, gens=gens)
