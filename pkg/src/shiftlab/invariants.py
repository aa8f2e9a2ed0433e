"""Irreducible decomposition, associated primes and v-numbers of monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .betti import graded_invariants
from .errors import ResourceError, UndefinedInputError
from .linalg import DEFAULT_FIELD, FieldSpec
from .monomial import (
    Monomial,
    MonomialIdeal,
    colon,
    degree,
    monomials_in_box,
    sort_key,
    support,
)


def _check_proper(I: MonomialIdeal) -> None:
    if I.is_zero() or I.is_unit():
        raise UndefinedInputError("needs a proper nonzero ideal")


def _mixed_generator(I: MonomialIdeal) -> Monomial | None:
    for g in reversed(I.gens):
        if sum(1 for e in g if e) > 1:
            return g
    return None


def is_irreducible(I: MonomialIdeal) -> bool:
    return not I.is_zero() and _mixed_generator(I) is None


def irreducible_decomposition(I: MonomialIdeal, cap: int | None = None) -> list[MonomialIdeal]:
    """Irredundant irreducible components of I, in canonical order.

    Splits (J + (x_j^e * h)) = (J + x_j^e) intersect (J + h) on a generator with
    mixed support until every leaf is generated by pure powers, then drops
    leaves that contain another leaf.
    """
    _check_proper(I)
    cap = config.budget(config.COMPONENT_CAP) if cap is None else cap
    n = I.n
    leaves: set[MonomialIdeal] = set()
    seen = {I}
    stack = [I]
    while stack:
        J = stack.pop()
        g = _mixed_generator(J)
        if g is None:
            leaves.add(J)
            if len(leaves) > cap:
                raise ResourceError(f"more than {cap} irreducible components")
            continue
        j = next(idx for idx, e in enumerate(g) if e)
        pure = tuple(g[j] if idx == j else 0 for idx in range(n))
        rest = tuple(0 if idx == j else e for idx, e in enumerate(g))
        for part in (pure, rest):
            K = MonomialIdeal(n, J.gens + (part,))
            if K not in seen:
                seen.add(K)
                stack.append(K)
        if len(seen) > 20 * cap:
            raise ResourceError("irreducible decomposition search exceeded its cap")
    comps = [C for C in leaves if not any(D != C and D.issubset(C) for D in leaves)]
    return sorted(comps, key=lambda C: [sort_key(g) for g in C.gens])


def associated_primes(I: MonomialIdeal) -> set[frozenset[int]]:
    """Ass(I) as supports (1-based variable index sets) of the primes."""
    primes = set()
    for C in irreducible_decomposition(I):
        primes.add(frozenset().union(*(support(g) for g in C.gens)))
    return primes


def as_prime(J: MonomialIdeal) -> frozenset[int] | None:
    """Variable set of J if J is a monomial prime, else None."""
    if J.is_zero() or J.is_unit():
        return None
    if any(degree(g) != 1 for g in J.gens):
        return None
    return frozenset(g.index(1) + 1 for g in J.gens)


@dataclass(frozen=True)
class VNumberReport:
    """Minimal witness degree v_p and a witness monomial f with I : f = p, per prime."""

    per_prime: dict[frozenset[int], tuple[int, Monomial]]

    @property
    def v(self) -> int:
        return min(d for d, _ in self.per_prime.values())

    def to_json(self) -> dict:
        return {
            "v": self.v,
            "primes": [
                {"prime": sorted(p), "v_p": d, "witness": list(f)}
                for p, (d, f) in sorted(self.per_prime.items(), key=lambda kv: sorted(kv[0]))
            ],
        }


def v_number(I: MonomialIdeal) -> VNumberReport:
    """v-numbers from monomial witnesses.

    Witnesses are searched in increasing degree inside the box bounded by the
    largest exponent of each variable among the generators: raising an exponent
    past that bound leaves every colon unchanged.
    """
    _check_proper(I)
    targets = associated_primes(I)
    found: dict[frozenset[int], tuple[int, Monomial]] = {}
    for f in monomials_in_box(I.max_exponents()):
        if I.contains(f):
            continue
        p = as_prime(colon(I, f))
        if p is not None and p in targets and p not in found:
            found[p] = (degree(f), f)
            if len(found) == len(targets):
                break
    return VNumberReport(found)


def depth_and_regularity(I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD) -> tuple[int, int]:
    """(depth S/I, reg I), read off the Betti table."""
    inv = graded_invariants(I, field)
    return inv.depth_of_quotient, inv.regularity
