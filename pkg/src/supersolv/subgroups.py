"""Exhaustive subgroup lattices and the set-level operations built on them.

Every function taking a group accepts either a :class:`Group` or a
:class:`Subgroup`; a subgroup is treated as a group in its own right, with
results expressed as subgroups of the common parent.
"""
from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from . import kernels
from .config import settings
from .errors import BudgetError, PreconditionError
from .perm import Group, Subgroup

GroupLike = Group | Subgroup


def ambient(G: GroupLike) -> Subgroup:
    return G.whole if isinstance(G, Group) else G


def _check_inside(A: Subgroup, H: Subgroup) -> None:
    if H.parent is not A.parent:
        raise PreconditionError("subgroup belongs to a different parent group")
    if not H.issubset(A):
        raise PreconditionError("subgroup is not contained in the ambient group")


class SubgroupLattice:
    """All subgroups of ``ambient``, sorted by (order, member indices)."""

    def __init__(self, ambient: Subgroup, subgroups: list[Subgroup]):
        self.parent = ambient.parent
        self.ambient = ambient
        self.subgroups = sorted(subgroups, key=lambda s: s.sort_key)
        self._pos = {s.key: i for i, s in enumerate(self.subgroups)}
        self._containment = None
        self._normal = None

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def position(self, H: Subgroup) -> int:
        return self._pos[H.key]

    @property
    def orders(self) -> np.ndarray:
        return np.array([s.order for s in self.subgroups], dtype=np.int64)

    @property
    def containment(self) -> np.ndarray:
        """``containment[i, j]`` is True iff subgroup i lies inside subgroup j."""
        if self._containment is None:
            M = np.stack([s.mask for s in self.subgroups]).astype(np.int32)
            inter = M @ M.T
            self._containment = inter == self.orders[:, None]
        return self._containment

    @property
    def normal_flags(self) -> np.ndarray:
        if self._normal is None:
            self._normal = np.array([is_normal(self.ambient, s) for s in self.subgroups])
        return self._normal

    def within(self, H: Subgroup) -> list[Subgroup]:
        """Lattice members contained in ``H`` (H must itself be a member)."""
        col = self.containment[:, self.position(H)]
        return [s for s, inside in zip(self.subgroups, col) if inside]


def _cyclic_subgroups(A: Subgroup) -> list[Subgroup]:
    G = A.parent
    table = G.table
    orders = G.element_orders
    done = np.zeros(G.order, dtype=np.bool_)
    done[0] = True
    out = []
    for g in A.member_indices:
        if done[g]:
            continue
        mask = kernels.closure(table, np.array([g], dtype=np.int64))
        # every element of <g> with the same order generates <g>
        done[mask & (orders == orders[g])] = True
        out.append(Subgroup.from_mask(G, mask, gens=(g,)))
    return out


def _enumerate(A: Subgroup) -> list[Subgroup]:
    G = A.parent
    table = G.table
    cap = settings.max_subgroups
    cyclics = _cyclic_subgroups(A)
    found: dict[bytes, Subgroup] = {G.trivial.key: G.trivial}
    for c in cyclics:
        found.setdefault(c.key, c)
    if len(found) > cap:
        raise BudgetError("subgroup count", cap, len(found))
    cgens = np.array([c._gens[0] for c in cyclics], dtype=np.int64)
    queue = list(cyclics)
    head = 0
    while head < len(queue):
        S = queue[head]
        head += 1
        sg = S.gen_indices
        rows = kernels.extend_by_cyclics(table, np.array(sg, dtype=np.int64), S.mask, cgens)
        packed = np.packbits(rows, axis=1)
        for k in np.flatnonzero(rows[:, 0]):
            key = packed[k].tobytes()
            if key in found:
                continue
            T = Subgroup.from_mask(G, rows[k], gens=sg + (int(cgens[k]),))
            found[key] = T
            queue.append(T)
            if len(found) > cap:
                raise BudgetError("subgroup count", cap, len(found))
    return list(found.values())


def all_subgroups(G: GroupLike) -> SubgroupLattice:
    """Complete subgroup lattice by cyclic extension; cached per ambient group."""
    A = ambient(G)
    parent = A.parent
    cached = parent._lattices.get(A.key)
    if cached is not None:
        return cached
    full = parent._lattices.get(parent.whole.key)
    if full is not None:
        subs = full.within(A)
    else:
        subs = _enumerate(A)
    lat = SubgroupLattice(A, subs)
    parent._lattices[A.key] = lat
    return lat


def index(G: GroupLike, H: Subgroup) -> int:
    A = ambient(G)
    _check_inside(A, H)
    return A.order // H.order


def maximal_subgroups(G: GroupLike) -> list[Subgroup]:
    lat = all_subgroups(G)
    n = lat.ambient.order
    orders = lat.orders
    proper = orders < n
    C = lat.containment
    strict = C & (orders[:, None] < orders[None, :])
    # a proper subgroup is maximal iff no proper subgroup strictly contains it
    blocked = (strict & proper[None, :]).any(axis=1)
    return [s for s, p, b in zip(lat.subgroups, proper, blocked) if p and not b]


def is_normal(G: GroupLike, H: Subgroup) -> bool:
    """Checks invariance under conjugation by the ambient group's generators."""
    A = ambient(G)
    _check_inside(A, H)
    if H.is_trivial() or H.order == A.order:
        return True
    P = A.parent
    mask, members = H.mask, H.members
    return all(kernels.normalizes(P.table, P.inv, mask, members, np.int64(g)) for g in A.gen_indices)


def normal_subgroups(G: GroupLike) -> list[Subgroup]:
    lat = all_subgroups(G)
    return [s for s, n in zip(lat.subgroups, lat.normal_flags) if n]


def minimal_normal_subgroups(G: GroupLike) -> list[Subgroup]:
    normals = [s for s in normal_subgroups(G) if not s.is_trivial()]
    return [n for n in normals if not any(m < n for m in normals)]


def product_mask(X: Subgroup, Y: Subgroup) -> np.ndarray:
    if X.parent is not Y.parent:
        raise PreconditionError("subgroups belong to different parent groups")
    return kernels.product_mask(X.parent.table, X.members, Y.members)


def product_set(X: Subgroup, Y: Subgroup) -> frozenset[int]:
    """``{x*y}`` as a set of parent element indices."""
    return frozenset(np.flatnonzero(product_mask(X, Y)).tolist())


def permutes(X: Subgroup, Y: Subgroup) -> bool:
    """True iff ``XY = YX``, i.e. the set product is a subgroup."""
    if X.parent is not Y.parent:
        raise PreconditionError("subgroups belong to different parent groups")
    return bool(kernels.permutes(X.parent.table, X.members, Y.members))
