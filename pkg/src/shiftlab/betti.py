"""Multigraded Betti numbers of monomial ideals.

For a multidegree a, beta_{i,a}(I) is the dimension of the reduced homology
H~_{i-1} of the upper Koszul complex

    K^a(I) = {F subset of supp(a) : x^(a - e_F) in I}.

Only lcms of generators can carry nonzero Betti numbers, so the table is
computed by sweeping the lcm lattice.  K^a(I) is generated by the facets
{j : g_j < a_j} over the generators g dividing x^a, which makes building it
cheap; when all these facets share a vertex the complex is a cone and the
point is skipped.
"""

from __future__ import annotations

import itertools
import threading
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from . import config
from .errors import ResourceError, UndefinedInputError
from .linalg import DEFAULT_FIELD, FieldSpec, rank
from .monomial import Monomial, MonomialIdeal, degree, divides, lcm, sort_key, zero_ideal


def _check_analytic(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise UndefinedInputError("Betti numbers of the zero ideal are not defined here")
    if I.is_unit():
        raise UndefinedInputError("Betti numbers of the unit ideal are not defined here")


@dataclass(frozen=True)
class LcmLattice:
    elements: frozenset[Monomial]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return tuple(a) in self.elements

    def __iter__(self):
        return iter(self.elements)


def lcm_lattice(I: MonomialIdeal, cap: int | None = None) -> LcmLattice:
    """Join-closure of the generator multidegrees."""
    _check_analytic(I)
    cap = config.budget(config.LATTICE_CAP) if cap is None else cap
    gens = I.gens
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                j = lcm(x, g)
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        if len(seen) > cap:
            raise ResourceError(f"lcm lattice exceeds {cap} elements")
        frontier = nxt
    return LcmLattice(frozenset(seen))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on vertices 1..n, stored as its set of faces.

    The void complex has no faces; the irrelevant complex is {emptyset}.
    """

    n: int
    faces: frozenset[frozenset[int]]

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        faces = set()
        for f in facets:
            f = sorted(f)
            for r in range(len(f) + 1):
                faces.update(frozenset(c) for c in itertools.combinations(f, r))
        return cls(n, frozenset(faces))

    def is_closed(self) -> bool:
        return all(f - {v} in self.faces for f in self.faces for v in f)

    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-2)


def _masks(faces: Iterable[frozenset[int]]) -> list[int]:
    return [sum(1 << (v - 1) for v in f) for f in faces]


def _reduced_homology(face_masks: list[int], field: FieldSpec) -> dict[int, int]:
    """All nonzero reduced homology dimensions, keyed by homological degree."""
    if not face_masks:
        return {}
    by_dim: dict[int, list[int]] = defaultdict(list)
    for m in face_masks:
        by_dim[m.bit_count() - 1].append(m)
    top = max(by_dim)
    index = {d: {m: k for k, m in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        rows = []
        lower = index.get(d - 1, {})
        for m in sorted(by_dim.get(d, ())):
            row = {}
            sign = 1
            bits = m
            while bits:
                low = bits & -bits
                row[lower[m ^ low]] = sign
                sign = -sign
                bits ^= low
            rows.append(row)
        ranks[d] = rank(rows, len(lower), field) if rows else 0
    out = {}
    for d in range(-1, top + 1):
        h = len(by_dim.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def simplicial_homology_dim(
    complex_: SimplicialComplex, i: int, field: FieldSpec = DEFAULT_FIELD
) -> int:
    """dim over ``field`` of the reduced homology group of degree ``i``."""
    return _reduced_homology(_masks(complex_.faces), field).get(i, 0)


def upper_koszul_complex(I: MonomialIdeal, a) -> SimplicialComplex:
    a = tuple(a)
    if len(a) != I.n or any(e < 0 for e in a):
        raise ValueError(f"bad multidegree {a}")
    facets = []
    for g in I.gens:
        if divides(g, a):
            facets.append([j + 1 for j in range(I.n) if g[j] < a[j]])
    return SimplicialComplex.from_facets(I.n, facets)


def _betti_at(gens, a, n, field) -> dict[int, int]:
    facet_masks = []
    for g in gens:
        if all(x <= y for x, y in zip(g, a)):
            m = 0
            for j in range(n):
                if g[j] < a[j]:
                    m |= 1 << j
            facet_masks.append(m)
    if not facet_masks:
        return {}
    common = facet_masks[0]
    for m in facet_masks[1:]:
        common &= m
    if common:
        return {}
    maximal = [m for m in set(facet_masks) if not any(m != o and m & o == m for o in facet_masks)]
    faces = set()
    for m in maximal:
        sub = m
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    hom = _reduced_homology(list(faces), field)
    return {d + 1: h for d, h in hom.items()}


class GradedInvariants(NamedTuple):
    regularity: int
    projective_dimension: int
    depth_of_quotient: int
    graded_betti: dict[tuple[int, int], int]


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers beta_{i,a}(I)."""

    n: int
    field: FieldSpec
    entries: Mapping[tuple[int, Monomial], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, Monomial]) -> int:
        i, a = key
        return self.entries.get((i, tuple(a)), 0)

    def multidegrees(self, i: int) -> list[Monomial]:
        return sorted((a for (j, a) in self.entries if j == i), key=sort_key)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), d in self.entries.items():
            out[i, degree(a)] += d
        return dict(sorted(out.items()))

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for (i, _), d in self.entries.items():
            out[i] += d
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        rows = sorted(self.entries.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1])))
        return {
            "field": self.field.characteristic,
            "entries": [{"i": i, "multidegree": list(a), "dim": d} for (i, a), d in rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> BettiTable:
        entries = {}
        n = None
        for e in data["entries"]:
            a = tuple(e["multidegree"])
            n = len(a) if n is None else n
            entries[e["i"], a] = e["dim"]
        return cls(n or 0, FieldSpec(data["field"]), entries)

    def display(self) -> str:
        """Graded Betti table in the usual Macaulay layout (rows j - i)."""
        g = self.graded()
        pd = self.projective_dimension
        shifts = sorted({j - i for i, j in g})
        cols = list(range(pd + 1))
        totals = self.totals()
        label_w = max(len("total:"), max(len(f"{s}:") for s in shifts))
        cells = [[str(totals.get(i, 0)) for i in cols]]
        for s in shifts:
            cells.append([str(g[i, i + s]) if (i, i + s) in g else "." for i in cols])
        width = max(len(c) for row in cells + [[str(i) for i in cols]] for c in row)
        lines = [" " * (label_w + 1) + " ".join(str(i).rjust(width) for i in cols)]
        labels = ["total:"] + [f"{s}:" for s in shifts]
        for lab, row in zip(labels, cells):
            lines.append(lab.rjust(label_w) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


class BettiCache:
    """Get-or-compute map keyed by (canonical ideal, field).

    A per-key lock makes concurrent requests for the same ideal compute it once.
    """

    def __init__(self):
        self._data: dict = {}
        self._locks: dict = {}
        self._guard = threading.Lock()

    def get_or_compute(self, key, compute):
        with self._guard:
            if key in self._data:
                return self._data[key]
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            with self._guard:
                if key in self._data:
                    return self._data[key]
            value = compute()
            with self._guard:
                self._data[key] = value
                self._locks.pop(key, None)
            return value

    def clear(self) -> None:
        with self._guard:
            self._data.clear()

    def __len__(self) -> int:
        return len(self._data)


CACHE = BettiCache()


def _compute_table(I: MonomialIdeal, field: FieldSpec, lattice_cap: int | None) -> BettiTable:
    lattice = lcm_lattice(I, lattice_cap)
    entries = {}
    for a in lattice:
        for i, d in _betti_at(I.gens, a, I.n, field).items():
            entries[i, a] = d
    return BettiTable(I.n, field, entries)


def betti_table(
    I: MonomialIdeal,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    lattice_cap: int | None = None,
    use_cache: bool = True,
) -> BettiTable:
    _check_analytic(I)
    if not use_cache:
        return _compute_table(I, field, lattice_cap)
    key = (I.n, I.gens, field.characteristic)
    return CACHE.get_or_compute(key, lambda: _compute_table(I, field, lattice_cap))


def hs(I: MonomialIdeal, i: int, field: FieldSpec = DEFAULT_FIELD) -> MonomialIdeal:
    """The i-th homological shift ideal HS_i(I)."""
    if i < 0:
        raise ValueError("homological index must be nonnegative")
    table = betti_table(I, field)
    gens = table.multidegrees(i)
    return MonomialIdeal(I.n, tuple(gens)) if gens else zero_ideal(I.n)


def graded_invariants(I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD) -> GradedInvariants:
    table = betti_table(I, field)
    g = table.graded()
    reg = max(j - i for i, j in g)
    pd = table.projective_dimension
    return GradedInvariants(reg, pd, I.n - (pd + 1), g)


def regularity(I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD) -> int:
    return graded_invariants(I, field).regularity


def projective_dimension(I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD) -> int:
    return betti_table(I, field).projective_dimension


def depth_of_quotient(I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD) -> int:
    return graded_invariants(I, field).depth_of_quotient


def has_linear_resolution(I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD) -> bool:
    _check_analytic(I)
    degs = set(I.degrees())
    if len(degs) != 1:
        return False
    return regularity(I, field) == degs.pop()
