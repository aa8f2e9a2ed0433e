"""Strongly stable and c-bounded strongly stable ideals.

Exchange move: u -> x_i * u / x_j for i < j with x_j | u.  A Borel closure is
the orbit of each Borel generator under these moves (moves preserve degree,
so each orbit is finite), minimized.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple, Sequence

from .errors import UndefinedInputError
from .monomial import (
    Monomial,
    MonomialIdeal,
    degree,
    max_index,
    mul,
    squarefree,
    support,
    zero_ideal,
)


def _moves(u: Monomial):
    n = len(u)
    for j in range(n):
        if u[j] == 0:
            continue
        for i in range(j):
            w = list(u)
            w[j] -= 1
            w[i] += 1
            yield tuple(w)


def _orbit(u: Monomial, bound: Sequence[int] | None = None) -> set[Monomial]:
    seen = {u}
    stack = [u]
    while stack:
        v = stack.pop()
        for w in _moves(v):
            if w in seen:
                continue
            if bound is not None and any(e > c for e, c in zip(w, bound)):
                continue
            seen.add(w)
            stack.append(w)
    return seen


def is_strongly_stable(I: MonomialIdeal) -> bool:
    if I.is_zero():
        raise UndefinedInputError("strong stability of the zero ideal")
    return all(I.contains(w) for u in I.gens for w in _moves(u))


def borel_closure(us: Iterable[Sequence[int]]) -> MonomialIdeal:
    """B(u_1, ..., u_m), the smallest strongly stable ideal containing the u's."""
    us = [tuple(u) for u in us]
    if not us:
        raise ValueError("borel_closure needs at least one monomial")
    n = len(us[0])
    gens: set[Monomial] = set()
    for u in us:
        gens |= _orbit(u)
    return MonomialIdeal(n, tuple(gens))


def is_c_bounded(u: Sequence[int], c: Sequence[int]) -> bool:
    return len(u) == len(c) and all(e <= b for e, b in zip(u, c))


def c_bounded_borel_closure(u: Sequence[int], c: Sequence[int]) -> MonomialIdeal:
    """B^c(u): the smallest c-bounded strongly stable ideal containing u."""
    u, c = tuple(u), tuple(c)
    if len(c) != len(u):
        raise ValueError("bound vector length differs from the monomial length")
    if not is_c_bounded(u, c):
        raise ValueError(f"{u} is not {c}-bounded")
    return MonomialIdeal(len(u), tuple(_orbit(u, c)))


def is_c_bounded_strongly_stable(I: MonomialIdeal, c: Sequence[int]) -> bool:
    if not all(is_c_bounded(g, c) for g in I.gens):
        return False
    return all(I.contains(w) for g in I.gens for w in _moves(g) if is_c_bounded(w, c))


def hs_principal_borel_power(u: Sequence[int], i: int, k: int) -> MonomialIdeal:
    """HS_i(B(u)^k) = (x_{j1}...x_{ji} v : v in G(B(u^k)), j1 < ... < ji < max(v))."""
    u = tuple(u)
    n = len(u)
    if k < 1:
        raise ValueError("power must be at least 1")
    if i < 0:
        raise ValueError("homological index must be nonnegative")
    if i >= max_index(u):
        return zero_ideal(n)
    base = borel_closure([tuple(k * e for e in u)])
    gens = []
    for v in base.gens:
        for J in itertools.combinations(range(1, max_index(v)), i):
            gens.append(mul(squarefree(n, J), v))
    return MonomialIdeal(n, tuple(gens)) if gens else zero_ideal(n)


def _check_regular_sequence(us: Sequence[Monomial]) -> None:
    for a, b in itertools.combinations(us, 2):
        if support(a) & support(b):
            raise ValueError("monomials with overlapping supports do not form a regular sequence")
    if any(degree(u) == 0 for u in us):
        raise ValueError("a regular sequence cannot contain the constant monomial")


def _compositions(k: int, m: int):
    for bars in itertools.combinations(range(k + m - 1), m - 1):
        prev, parts = -1, []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(k + m - 1 - prev - 1)
        yield tuple(parts)


def monomial_ci_hs(us: Sequence[Sequence[int]], i: int, k: int) -> MonomialIdeal:
    """HS_i(I^k) for I generated by a monomial regular sequence u_1, ..., u_m.

    Generators u_{j1}...u_{ji} u^b with |b| = k and j1 < ... < ji < max{l : b_l > 0}.
    """
    us = [tuple(u) for u in us]
    if not us:
        raise ValueError("empty sequence")
    n = len(us[0])
    _check_regular_sequence(us)
    m = len(us)
    gens = []
    for b in _compositions(k, m):
        top = max(l + 1 for l in range(m) if b[l])
        ub = (0,) * n
        for l in range(m):
            for _ in range(b[l]):
                ub = mul(ub, us[l])
        for J in itertools.combinations(range(1, top), i):
            w = ub
            for j in J:
                w = mul(w, us[j - 1])
            gens.append(w)
    return MonomialIdeal(n, tuple(gens)) if gens else zero_ideal(n)


class CIRegularity(NamedTuple):
    displayed: int
    from_proof: int


def monomial_ci_regularity_variants(us: Sequence[Sequence[int]], i: int, k: int) -> CIRegularity:
    """Two closed-form candidates for reg HS_i(I^k) of a monomial complete intersection.

    ``displayed``:  d_m k + sum_{j=1}^{m} d_j + sum_{j=1}^{i} d_{m-j} - (m-1)
    ``from_proof``: d_m k + sum_{j=1}^{m-1} d_j + sum_{j=1}^{i} d_{m-j} - (m-1)
    with degrees sorted ascending.  Neither is trusted; compare with Betti numbers.
    """
    d = sorted(degree(tuple(u)) for u in us)
    m = len(d)
    tail = sum(d[m - j - 1] for j in range(1, i + 1) if m - j - 1 >= 0)
    displayed = d[-1] * k + sum(d) + tail - (m - 1)
    from_proof = d[-1] * k + sum(d[:-1]) + tail - (m - 1)
    return CIRegularity(displayed, from_proof)
