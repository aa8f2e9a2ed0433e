"""Linear quotients, the generator graph G_I, and linear relatedness."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from enum import Enum

from . import config
from .errors import ContractViolation, UndefinedInputError
from .monomial import (
    Monomial,
    MonomialIdeal,
    degree,
    divides,
    is_equigenerated,
    lcm,
    mul,
    quotient,
    sort_key,
    squarefree,
    zero_ideal,
)


def _prefix_colon(prefix, u: Monomial, n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(quotient(v, u) for v in prefix))


def _variable_set(colon: MonomialIdeal) -> frozenset[int] | None:
    """The variable indices generating ``colon``, or None if some generator is not a variable."""
    out = set()
    for g in colon.gens:
        if degree(g) != 1:
            return None
        out.add(g.index(1) + 1)
    return frozenset(out)


@dataclass(frozen=True)
class AdmissibleOrder:
    """A linear-quotients order of G(I) with set(u_j) for each generator."""

    order: tuple[Monomial, ...]
    sets: tuple[frozenset[int], ...]

    def set_of(self, u: Monomial) -> frozenset[int]:
        return self.sets[self.order.index(tuple(u))]

    def to_json(self) -> dict:
        return {
            "order": [list(u) for u in self.order],
            "sets": [sorted(s) for s in self.sets],
        }


def admissible_sets(I: MonomialIdeal, order) -> tuple[frozenset[int], ...] | None:
    """set(u_j) along ``order`` if every prefix colon is variable-generated, else None."""
    order = [tuple(u) for u in order]
    if sorted(order, key=sort_key) != list(I.gens):
        raise ContractViolation("order is not a permutation of the minimal generators")
    sets = []
    for j, u in enumerate(order):
        if j == 0:
            sets.append(frozenset())
            continue
        s = _variable_set(_prefix_colon(order[:j], u, I.n))
        if s is None:
            return None
        sets.append(s)
    return tuple(sets)


def check_order(I: MonomialIdeal, order) -> AdmissibleOrder:
    sets = admissible_sets(I, order)
    if sets is None:
        raise ContractViolation("order does not give linear quotients")
    return AdmissibleOrder(tuple(tuple(u) for u in order), sets)


class SearchStatus(Enum):
    FOUND = "found"
    NONE_EXISTS = "none-exists"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class LinearQuotientsResult:
    status: SearchStatus
    order: AdmissibleOrder | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


def _lex_key(u: Monomial) -> tuple:
    return (degree(u), tuple(-e for e in u))


def find_linear_quotients_order(I: MonomialIdeal, budget: int | None = None) -> LinearQuotientsResult:
    """Search for a linear-quotients order of G(I).

    The (degree, lex) order is tried first.  Otherwise a depth-first search
    over degree-nondecreasing orders runs, memoizing prefixes (as sets) that
    are known dead ends.  Any ideal with linear quotients admits such an
    order, so exhausting the tree proves that none exists.
    """
    if I.is_zero() or I.is_unit():
        raise UndefinedInputError("linear quotients need a proper nonzero ideal")
    budget = config.budget(config.SEARCH_BUDGET) if budget is None else budget
    gens = sorted(I.gens, key=_lex_key)
    sets = admissible_sets(I, gens)
    if sets is not None:
        return LinearQuotientsResult(SearchStatus.FOUND, AdmissibleOrder(tuple(gens), sets), 1)

    n = I.n
    dead: set[frozenset] = set()
    nodes = 0
    chosen: list[Monomial] = []
    chosen_sets: list[frozenset[int]] = []

    class _Budget(Exception):
        pass

    def extend(remaining: list[Monomial]) -> bool:
        nonlocal nodes
        if not remaining:
            return True
        key = frozenset(chosen)
        if key in dead:
            return False
        dmin = degree(remaining[0])
        for idx, u in enumerate(remaining):
            if degree(u) != dmin:
                break
            nodes += 1
            if nodes > budget:
                raise _Budget
            if chosen:
                s = _variable_set(_prefix_colon(chosen, u, n))
                if s is None:
                    continue
            else:
                s = frozenset()
            chosen.append(u)
            chosen_sets.append(s)
            if extend(remaining[:idx] + remaining[idx + 1:]):
                return True
            chosen.pop()
            chosen_sets.pop()
        dead.add(key)
        return False

    try:
        ok = extend(gens)
    except _Budget:
        return LinearQuotientsResult(SearchStatus.BUDGET_EXHAUSTED, None, nodes)
    if ok:
        return LinearQuotientsResult(
            SearchStatus.FOUND, AdmissibleOrder(tuple(chosen), tuple(chosen_sets)), nodes
        )
    return LinearQuotientsResult(SearchStatus.NONE_EXISTS, None, nodes)


def has_linear_quotients(I: MonomialIdeal, budget: int | None = None) -> bool | None:
    """True/False, or None when the search budget ran out."""
    res = find_linear_quotients_order(I, budget)
    if res.status is SearchStatus.BUDGET_EXHAUSTED:
        return None
    return res.found


def hs_via_linear_quotients(I: MonomialIdeal, order: AdmissibleOrder, i: int) -> MonomialIdeal:
    """HS_i(I) = (x_F u : u in G(I), F subset of set(u), |F| = i)."""
    sets = admissible_sets(I, order.order)
    if sets is None or tuple(sets) != tuple(order.sets):
        raise ContractViolation("order is not admissible for this ideal")
    gens = []
    for u, s in zip(order.order, order.sets):
        for F in itertools.combinations(sorted(s), i):
            gens.append(mul(squarefree(I.n, F), u))
    return MonomialIdeal(I.n, tuple(gens)) if gens else zero_ideal(I.n)


@dataclass(frozen=True)
class GeneratorGraph:
    vertices: tuple[Monomial, ...]
    edges: frozenset[tuple[Monomial, Monomial]]

    def neighbours(self, u: Monomial) -> set[Monomial]:
        return {b if a == u else a for a, b in self.edges if u in (a, b)}

    def edge_list(self) -> list[list[list[int]]]:
        return [[list(a), list(b)] for a, b in sorted(self.edges)]


def _require_equigenerated(I: MonomialIdeal) -> int:
    if not is_equigenerated(I):
        raise UndefinedInputError("this operation needs an equigenerated ideal")
    return degree(I.gens[0])


def generator_graph(I: MonomialIdeal) -> GeneratorGraph:
    d = _require_equigenerated(I)
    edges = set()
    for u, v in itertools.combinations(I.gens, 2):
        if degree(lcm(u, v)) == d + 1:
            edges.add((u, v))
    return GeneratorGraph(I.gens, frozenset(edges))


def _connected_within(u, v, allowed: list[Monomial], d: int) -> bool:
    seen = {u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        if w == v:
            return True
        for z in allowed:
            if z not in seen and degree(lcm(w, z)) == d + 1:
                seen.add(z)
                queue.append(z)
    return False


def _unconnected(I: MonomialIdeal):
    d = _require_equigenerated(I)
    for u, v in itertools.combinations(I.gens, 2):
        m = lcm(u, v)
        if degree(m) == d + 1:
            continue
        allowed = [w for w in I.gens if divides(w, m)]
        if not _connected_within(u, v, allowed, d):
            yield u, v


def unconnected_pairs(I: MonomialIdeal) -> list[tuple[Monomial, Monomial]]:
    """Generator pairs u, v with no path inside the subgraph induced on divisors of lcm(u, v)."""
    return list(_unconnected(I))


def is_linearly_related(I: MonomialIdeal) -> bool:
    return next(_unconnected(I), None) is None


def colon_by_rest(I: MonomialIdeal, u) -> MonomialIdeal:
    """(G(I) minus {u}) : u."""
    u = tuple(u)
    if u not in I.gens:
        raise ValueError(f"{u} is not a minimal generator")
    if len(I.gens) < 2:
        raise UndefinedInputError("colon by the rest needs at least two generators")
    return _prefix_colon([g for g in I.gens if g != u], u, I.n)


def is_variable_generated(I: MonomialIdeal) -> bool:
    return all(degree(g) == 1 for g in I.gens)
