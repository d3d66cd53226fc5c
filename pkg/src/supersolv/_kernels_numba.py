"""numba-compiled kernels; same contracts as the numpy reference module."""
import numpy as np
from numba import njit


@njit(cache=True)
def closure(table, seeds):
    n = table.shape[0]
    mask = np.zeros(n, dtype=np.bool_)
    mask[0] = True
    queue = np.empty(n, dtype=np.int64)
    queue[0] = 0
    head = 0
    tail = 1
    while head < tail:
        x = queue[head]
        head += 1
        for s in seeds:
            y = table[x, s]
            if not mask[y]:
                mask[y] = True
                queue[tail] = y
                tail += 1
    return mask


@njit(cache=True)
def product_mask(table, xs, ys):
    mask = np.zeros(table.shape[0], dtype=np.bool_)
    for x in xs:
        for y in ys:
            mask[table[x, y]] = True
    return mask


@njit(cache=True)
def _permutes_into(table, xs, ys, scratch):
    for x in xs:
        for y in ys:
            scratch[table[x, y]] = True
    ok = True
    for y in ys:
        for x in xs:
            if not scratch[table[y, x]]:
                ok = False
                break
        if not ok:
            break
    for x in xs:
        for y in ys:
            scratch[table[x, y]] = False
    return ok


@njit(cache=True)
def permutes(table, xs, ys):
    scratch = np.zeros(table.shape[0], dtype=np.bool_)
    return _permutes_into(table, xs, ys, scratch)


@njit(cache=True)
def conjugate_members(table, inv, ys, u):
    out = np.empty(ys.shape[0], dtype=np.int64)
    ui = inv[u]
    for i in range(ys.shape[0]):
        out[i] = table[table[ui, ys[i]], u]
    return out


@njit(cache=True)
def tcc_witness(table, inv, xs, ys, us):
    scratch = np.zeros(table.shape[0], dtype=np.bool_)
    for u in us:
        conj = conjugate_members(table, inv, ys, u)
        if _permutes_into(table, xs, conj, scratch):
            return u
    return -1


@njit(cache=True)
def normalizes(table, inv, mask, members, g):
    gi = inv[g]
    for h in members:
        if not mask[table[table[gi, h], g]]:
            return False
    return True


@njit(cache=True)
def element_orders(table):
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    for i in range(n):
        cur = i
        k = 1
        while cur != 0:
            cur = table[cur, i]
            k += 1
        orders[i] = k
    return orders


@njit(cache=True)
def extend_closure(table, smembers, smask, gens, out):
    """Close ``S + gens`` into ``out`` by adding whole right cosets of S.

    S (``smembers``/``smask``) must already be a subgroup; then the result is
    closed once every coset representative times every generator lands in it.
    """
    n = table.shape[0]
    out[:] = smask
    reps = np.empty(n // smembers.shape[0] + 1, dtype=np.int64)
    reps[0] = 0
    nreps = 1
    i = 0
    while i < nreps:
        r = reps[i]
        i += 1
        for g in gens:
            y = table[r, g]
            if not out[y]:
                for s in smembers:
                    out[table[s, y]] = True
                reps[nreps] = y
                nreps += 1


@njit(cache=True)
def extend_by_cyclics(table, sgens, smask, cgens):
    """Row k holds the closure of ``sgens + [cgens[k]]``; rows whose cyclic
    generator already lies in the subgroup are left all-False."""
    n = table.shape[0]
    m = cgens.shape[0]
    out = np.zeros((m, n), dtype=np.bool_)
    smembers = np.flatnonzero(smask)
    seeds = np.empty(sgens.shape[0] + 1, dtype=np.int64)
    seeds[: sgens.shape[0]] = sgens
    for k in range(m):
        if smask[cgens[k]]:
            continue
        seeds[sgens.shape[0]] = cgens[k]
        extend_closure(table, smembers, smask, seeds, out[k])
    return out
