"""Pure-numpy reference kernels.

Elements are indices into a group's canonically sorted element list; the
identity is always index 0.  ``table[i, j]`` is the index of ``e_i * e_j``
(apply ``e_i`` first) and ``inv[i]`` the index of ``e_i``'s inverse.
"""
import numpy as np


def closure(table, seeds):
    n = table.shape[0]
    mask = np.zeros(n, dtype=np.bool_)
    mask[0] = True
    seeds = np.asarray(seeds, dtype=np.int64)
    if seeds.size == 0:
        return mask
    frontier = np.zeros(1, dtype=np.int64)
    while frontier.size:
        new = table[frontier][:, seeds].ravel()
        new = np.unique(new[~mask[new]])
        mask[new] = True
        frontier = new
    return mask


def product_mask(table, xs, ys):
    mask = np.zeros(table.shape[0], dtype=np.bool_)
    mask[table[np.ix_(xs, ys)].ravel()] = True
    return mask


def permutes(table, xs, ys):
    xy = product_mask(table, xs, ys)
    return bool(xy[table[np.ix_(ys, xs)]].all())


def conjugate_members(table, inv, ys, u):
    return table[table[inv[u], ys], u]


def tcc_witness(table, inv, xs, ys, us):
    for u in us:
        if permutes(table, xs, conjugate_members(table, inv, ys, u)):
            return int(u)
    return -1


def normalizes(table, inv, mask, members, g):
    """True iff conjugation by ``g`` maps the member set into itself."""
    return bool(mask[conjugate_members(table, inv, members, g)].all())


def element_orders(table):
    n = table.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    cur = idx.copy()
    k = 1
    pending = np.ones(n, dtype=np.bool_)
    while pending.any():
        hit = pending & (cur == 0)
        orders[hit] = k
        pending &= ~hit
        cur = table[cur, idx]
        k += 1
    return orders


def extend_by_cyclics(table, sgens, smask, cgens):
    """Row k holds the closure of ``sgens + [cgens[k]]``; rows whose cyclic
    generator already lies in the subgroup are left all-False."""
    out = np.zeros((cgens.shape[0], table.shape[0]), dtype=np.bool_)
    for k, c in enumerate(cgens):
        if not smask[c]:
            out[k] = closure(table, np.append(sgens, c))
    return out
