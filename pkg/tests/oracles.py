"""Brute-force reference computations on plain tuples.

Nothing here imports the package: permutations are 0-based image tuples,
groups are frozensets, and every answer comes from direct enumeration.
"""
from itertools import combinations


def mul(p, q):
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def conj(p, s):
    return mul(mul(inv(s), p), s)


def from_cycles(n, *cycles):
    a = list(range(n))
    for c in cycles:
        for i, x in enumerate(c):
            a[x - 1] = c[(i + 1) % len(c)] - 1
    return tuple(a)


def closure(gens, n):
    e = tuple(range(n))
    seen = {e}
    todo = [e]
    while todo:
        x = todo.pop()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return frozenset(seen)


def is_subgroup(S, n):
    e = tuple(range(n))
    return e in S and all(mul(a, b) in S for a in S for b in S)


def subgroups(G, n):
    """Cyclic subgroups closed under pairwise joins until nothing new appears."""
    cyc = {closure([g], n) for g in G}
    subs = set(cyc)
    while True:
        new = {closure(list(a | b), n) for a, b in combinations(subs, 2)} - subs
        if not new:
            return subs
        subs |= new


def product(X, Y):
    return frozenset(mul(x, y) for x in X for y in Y)


def is_normal(H, G):
    return all(frozenset(conj(h, g) for h in H) == H for g in G)


def normals(G, n):
    return [H for H in subgroups(G, n) if is_normal(H, G)]


def maximals(G, n):
    subs = [S for S in subgroups(G, n) if S != G]
    return [S for S in subs if not any(S < T for T in subs)]


def element_order(p):
    e = tuple(range(len(p)))
    k, x = 1, p
    while x != e:
        x = mul(x, p)
        k += 1
    return k


def is_prime(k):
    return k > 1 and all(k % d for d in range(2, int(k**0.5) + 1))


def chief_factor_orders(G, n):
    """All maximal normal chains, as sorted factor-order lists (as a set)."""
    N = normals(G, n)
    e = frozenset([tuple(range(n))])
    out = set()

    def walk(cur, acc):
        if cur == G:
            out.add(tuple(sorted(acc)))
            return
        above = [M for M in N if cur < M]
        for M in above:
            if not any(cur < L < M for L in above):
                walk(M, acc + [len(M) // len(cur)])

    walk(e, [])
    return out


def supersoluble(G, n):
    return all(all(is_prime(f) for f in fs) for fs in chief_factor_orders(G, n))


def tcc(H, K, n):
    """Definition-level tcc check over all subgroup pairs of H and K."""
    for X in subgroups(H, n):
        for Y in subgroups(K, n):
            U = closure(list(X | Y), n)
            if not any(
                product(X, frozenset(conj(y, u) for y in Y)) == product(frozenset(conj(y, u) for y in Y), X)
                for u in U
            ):
                return False
    return True
