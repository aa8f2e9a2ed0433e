"""Monomials and monomial ideals.

A monomial in ``n`` variables is a plain tuple of ``n`` nonnegative exponents.
A :class:`MonomialIdeal` stores its minimal generating set in canonical order
(degree, then lexicographic with x1 > x2 > ... > xn), so two ideals are equal
exactly when their generator tuples are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, NamedTuple, Sequence

from .errors import AmbientMismatchError, ExponentOverflowError, UndefinedInputError

Monomial = tuple[int, ...]

EXPONENT_LIMIT = 2**32


def one(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int) -> Monomial:
    """The variable x_i (1-based) in ``n`` variables."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} outside 1..{n}")
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def squarefree(n: int, indices: Iterable[int]) -> Monomial:
    """x_F for a set F of 1-based variable indices."""
    exps = [0] * n
    for i in indices:
        exps[i - 1] = 1
    return tuple(exps)


def degree(m: Monomial) -> int:
    return sum(m)


def support(m: Monomial) -> frozenset[int]:
    """1-based indices of the variables dividing ``m``."""
    return frozenset(i + 1 for i, e in enumerate(m) if e > 0)


def max_index(m: Monomial) -> int:
    """Largest index i with x_i dividing m (0 for the constant monomial)."""
    for i in range(len(m), 0, -1):
        if m[i - 1] > 0:
            return i
    return 0


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    if out and max(out) >= EXPONENT_LIMIT:
        raise ExponentOverflowError("monomial exponent exceeds 2^32")
    return out


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b), the generator of (a) : b."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def sort_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in m))


def _check_monomial(m: Sequence[int], n: int) -> Monomial:
    if len(m) != n:
        raise AmbientMismatchError(f"monomial {tuple(m)} has length {len(m)}, expected {n}")
    out = tuple(int(e) for e in m)
    if any(e < 0 for e in out):
        raise ValueError(f"negative exponent in {out}")
    return out


def _antichain(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # sorted by degree, a later monomial can never divide an earlier distinct one
    kept: list[Monomial] = []
    for m in sorted(set(gens), key=sort_key):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``n`` variables, stored by its minimal generators.

    The constructor minimizes whatever generators it is given.  The zero
    ideal has no generators; the unit ideal is generated by ``(0, ..., 0)``.
    """

    n: int
    gens: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("variable count must be nonnegative")
        checked = [_check_monomial(g, self.n) for g in self.gens]
        object.__setattr__(self, "gens", _antichain(checked))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (one(self.n),)

    def contains(self, m: Sequence[int]) -> bool:
        m = _check_monomial(m, self.n)
        return any(divides(g, m) for g in self.gens)

    def __contains__(self, m) -> bool:
        return self.contains(m)

    def issubset(self, other: MonomialIdeal) -> bool:
        _same_ambient(self, other)
        return all(other.contains(g) for g in self.gens)

    def missing_from(self, other: MonomialIdeal) -> list[Monomial]:
        """Generators of ``self`` that do not lie in ``other``."""
        _same_ambient(self, other)
        return [g for g in self.gens if not other.contains(g)]

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return multiply(self, other)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_ambient(self, other)
        return MonomialIdeal(self.n, self.gens + other.gens)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def degrees(self) -> list[int]:
        return [degree(g) for g in self.gens]

    def max_exponents(self) -> Monomial:
        if not self.gens:
            return one(self.n)
        return reduce(lcm, self.gens)

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, gens={list(self.gens)})"


def _same_ambient(*ideals: MonomialIdeal) -> None:
    ns = {I.n for I in ideals}
    if len(ns) > 1:
        raise AmbientMismatchError(f"ambient variable counts differ: {sorted(ns)}")


def minimize(gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(tuple(g) for g in gens))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (one(n),))


def maximal_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(variable(n, i) for i in range(1, n + 1)))


def prime_ideal(n: int, indices: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(variable(n, i) for i in indices))


def principal(m: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(len(m), (tuple(m),))


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    return I.contains(m)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.n, tuple(mul(g, h) for g in I.gens for h in J.gens))


def scale(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The ideal m * I."""
    return MonomialIdeal(I.n, tuple(mul(g, m) for g in I.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("power must be nonnegative")
    result = unit_ideal(I.n)
    for _ in range(k):
        result = multiply(result, I)
    return result


def colon(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """I : m for a single monomial m."""
    m = _check_monomial(m, I.n)
    return MonomialIdeal(I.n, tuple(quotient(g, m) for g in I.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.n, tuple(lcm(g, h) for g in I.gens for h in J.gens))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise UndefinedInputError("intersection of an empty family")
    return reduce(intersect, ideals)


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J, the intersection of I : h over the generators h of J."""
    _same_ambient(I, J)
    if J.is_zero():
        raise UndefinedInputError("colon by the zero ideal")
    return intersect_all([colon(I, h) for h in J.gens])


class Socle(NamedTuple):
    ideal: MonomialIdeal
    degenerate: bool


def socle_report(I: MonomialIdeal) -> Socle:
    """soc(I) together with a flag for the degenerate case soc(I) = (1).

    The degenerate case happens when I contains the maximal ideal, e.g.
    I = (x) in one variable.
    """
    if I.is_zero() or I.is_unit():
        raise UndefinedInputError("socle needs a proper nonzero ideal")
    top = colon_ideal(I, maximal_ideal(I.n))
    soc = MonomialIdeal(I.n, tuple(g for g in top.gens if not I.contains(g)))
    return Socle(soc, soc.is_unit())


def socle(I: MonomialIdeal) -> MonomialIdeal:
    return socle_report(I).ideal


class Shape(NamedTuple):
    alpha: int
    equigenerated: bool
    support: frozenset[int]


def shape(I: MonomialIdeal) -> Shape:
    if I.is_zero():
        raise UndefinedInputError("shape of the zero ideal")
    degs = I.degrees()
    supp = frozenset().union(*(support(g) for g in I.gens))
    return Shape(min(degs), len(set(degs)) == 1, supp)


def is_equigenerated(I: MonomialIdeal) -> bool:
    return not I.is_zero() and len(set(I.degrees())) == 1


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 1..n."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {e} outside vertex set 1..{self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        edges = list(edges)
        keys = [(min(e), max(e)) for e in edges]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate edge")
        return cls(n, frozenset(keys))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, frozenset((min(i, i % n + 1), max(i, i % n + 1)) for i in range(1, n + 1)))


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal(G.n, tuple(squarefree(G.n, e) for e in G.edges))


def cover_ideal(G: Graph) -> MonomialIdeal:
    if not G.edges:
        return unit_ideal(G.n)
    return intersect_all([prime_ideal(G.n, e) for e in sorted(G.edges)])


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All monomials of degree d in n variables, in canonical order."""
    out = []
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev, exps = -1, []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 1 - prev - 1)
        out.append(tuple(exps))
    return sorted(out, key=sort_key)


def monomials_in_box(bound: Sequence[int]) -> list[Monomial]:
    """All exponent vectors componentwise <= bound, sorted canonically."""
    return sorted(itertools.product(*(range(b + 1) for b in bound)), key=sort_key)
