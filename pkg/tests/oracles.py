"""Independent reference computations used to cross-check the package.

Nothing here calls into the code under test except the plain data types.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from shiftlab.monomial import MonomialIdeal


def _lcm(ms, n):
    return tuple(max((m[j] for m in ms), default=0) for j in range(n))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def in_ideal(gens, m):
    return any(_divides(g, m) for g in gens)


def _rank(rows, ncols, p):
    """Row reduction over Q (p == 0) or GF(p) on dense lists."""
    if p == 0:
        mat = [[Fraction(x) for x in r] for r in rows]
    else:
        mat = [[x % p for x in r] for r in rows]
    rank, col = 0, 0
    nrows = len(mat)
    while rank < nrows and col < ncols:
        piv = next((r for r in range(rank, nrows) if mat[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        inv = (1 / pv) if p == 0 else pow(pv, p - 2, p)
        for r in range(nrows):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col] * inv
                if p == 0:
                    mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
                else:
                    mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def taylor_betti(I: MonomialIdeal, p: int = 0) -> dict[tuple[int, tuple], int]:
    """beta_{i,a}(I) from the Taylor complex, one multidegree at a time.

    The degree-a strand of Taylor(I) tensored with the field has a basis of
    the nonempty generator subsets with lcm exactly a; homology at subset
    size i+1 is beta_{i,a}.
    """
    gens = list(I.gens)
    n = I.n
    by_lcm: dict[tuple, list[tuple[int, ...]]] = {}
    for size in range(1, len(gens) + 1):
        for sub in itertools.combinations(range(len(gens)), size):
            a = _lcm([gens[j] for j in sub], n)
            by_lcm.setdefault(a, []).append(sub)
    out = {}
    for a, subs in by_lcm.items():
        levels: dict[int, list] = {}
        for s in subs:
            levels.setdefault(len(s), []).append(s)
        ranks = {}
        for size, chain in levels.items():
            lower = levels.get(size - 1, [])
            index = {s: r for r, s in enumerate(lower)}
            rows = []
            for s in chain:
                row = [0] * len(lower)
                for pos in range(len(s)):
                    face = s[:pos] + s[pos + 1:]
                    if face in index:
                        row[index[face]] += (-1) ** pos
                rows.append(row)
            ranks[size] = _rank(rows, len(lower), p) if lower else 0
        for size, chain in levels.items():
            dim = len(chain) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if dim:
                out[size - 1, a] = dim
    return out


def taylor_hs(I: MonomialIdeal, i: int, p: int = 0) -> MonomialIdeal:
    gens = tuple(a for (j, a) in taylor_betti(I, p) if j == i)
    return MonomialIdeal(I.n, gens)


def max_ideal_hs(n: int, k: int, i: int) -> set[tuple]:
    """Monomials of degree k+i whose support has at least i+1 variables, minimal."""
    cands = [
        m for m in itertools.product(range(k + i + 1), repeat=n)
        if sum(m) == k + i and sum(1 for e in m if e) >= i + 1
    ]
    return {m for m in cands if not any(c != m and _divides(c, m) for c in cands)}


def brute_colon_primes(I: MonomialIdeal) -> set[frozenset[int]]:
    """Ass(I) as {I : f prime} over standard monomials f in the exponent box."""
    n = I.n
    box = [max(g[j] for g in I.gens) for j in range(n)]
    out = set()
    for f in itertools.product(*(range(b + 1) for b in box)):
        if not in_ideal(I.gens, f):
            p = _colon_prime(I.gens, f)
            if p:
                out.add(p)
    return out


def borel_majorization(us, n) -> set[tuple]:
    """Generators of B(u_1,...,u_m) by the prefix-sum criterion, then minimized."""
    cands = set()
    for u in us:
        d = sum(u)
        for v in itertools.product(range(d + 1), repeat=n):
            if sum(v) != d:
                continue
            if all(sum(v[: t + 1]) >= sum(u[: t + 1]) for t in range(n)):
                cands.add(v)
    return {m for m in cands if not any(c != m and _divides(c, m) for c in cands)}


def _colon_is_linear(prev, u):
    quots = [tuple(max(a - b, 0) for a, b in zip(g, u)) for g in prev]
    vars_in = {q.index(1) for q in quots if sum(q) == 1}
    return all(any(q[j] for j in vars_in) for q in quots)


def brute_has_linear_quotients(I: MonomialIdeal) -> bool:
    for perm in itertools.permutations(I.gens):
        if all(_colon_is_linear(perm[:t], perm[t]) for t in range(1, len(perm))):
            return True
    return False


def linearly_related_by_betti(I: MonomialIdeal, p: int = 0) -> bool:
    d = sum(I.gens[0])
    return all(sum(a) == d + 1 for (i, a) in taylor_betti(I, p) if i == 1)


def random_ideal(rng: random.Random, n: int, ngens: int, max_exp: int = 3) -> MonomialIdeal:
    gens = []
    while len(gens) < ngens:
        g = tuple(rng.randint(0, max_exp) for _ in range(n))
        if sum(g):
            gens.append(g)
    return MonomialIdeal(n, tuple(gens))


def random_equigenerated(rng: random.Random, n: int, d: int, ngens: int) -> MonomialIdeal:
    pool = [m for m in itertools.product(range(d + 1), repeat=n) if sum(m) == d]
    gens = rng.sample(pool, min(ngens, len(pool)))
    return MonomialIdeal(n, tuple(gens))


def _colon_prime(gens, f):
    """Variables of I : f when that colon is generated by variables, else None."""
    n = len(f)
    vars_in = {j for j in range(n) if in_ideal(gens, tuple(e + (t == j) for t, e in enumerate(f)))}
    for g in gens:
        q = tuple(max(ge - fe, 0) for ge, fe in zip(g, f))
        if not any(q[j] for j in vars_in):
            return None
    return frozenset(j + 1 for j in vars_in)


def v_numbers_via_generators(I: MonomialIdeal) -> dict[frozenset[int], int]:
    """v_p as the least degree of a minimal generator f of I : p with f outside I and I : f = p."""
    n = I.n
    box = [max(g[j] for g in I.gens) for j in range(n)]
    out = {}
    for p in brute_colon_primes(I):
        members = [
            f for f in itertools.product(*(range(b + 1) for b in box))
            if all(in_ideal(I.gens, tuple(e + (t + 1 == j) for t, e in enumerate(f))) for j in p)
        ]
        minimal = [f for f in members if not any(c != f and _divides(c, f) for c in members)]
        degs = [sum(f) for f in minimal if not in_ideal(I.gens, f) and _colon_prime(I.gens, f) == p]
        out[p] = min(degs)
    return out


def strongly_golod_by_products(I: MonomialIdeal) -> bool:
    """(dI)^2 in I, from every pair of partial derivatives of the generators."""
    parts = []
    for g in I.gens:
        for j, e in enumerate(g):
            if e:
                parts.append(tuple(x - (t == j) for t, x in enumerate(g)))
    return all(in_ideal(I.gens, tuple(a + b for a, b in zip(p, q))) for p in parts for q in parts)
