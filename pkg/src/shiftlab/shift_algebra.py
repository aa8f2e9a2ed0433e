"""Power sweeps of HS_i(I^k) and the analyses run on them.

"For k >> 0" is read as: holds on a suffix of the computed window of length
at least :data:`MIN_SUFFIX`.  Nothing is extrapolated beyond the window.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .betti import graded_invariants, has_linear_resolution, hs
from .borel import monomial_ci_regularity_variants
from .errors import ResourceError, UndefinedInputError
from .invariants import associated_primes, v_number
from .linalg import DEFAULT_FIELD, FieldSpec
from .monomial import (
    Monomial,
    MonomialIdeal,
    degree,
    is_equigenerated,
    mul,
    multiply,
    power,
    scale,
    socle_report,
    sort_key,
    zero_ideal,
)

log = logging.getLogger(__name__)

MIN_SUFFIX = 3


@dataclass
class SweepRecord:
    k: int
    power: MonomialIdeal
    hs: MonomialIdeal
    reg: int | None = None
    depth: int | None = None
    ass: frozenset[frozenset[int]] | None = None
    v: int | None = None
    linear: bool | None = None

    @property
    def degenerate(self) -> bool:
        return self.hs.is_zero()


@dataclass
class PowerSweep:
    base: MonomialIdeal
    i: int
    kmax: int
    field: FieldSpec
    records: list[SweepRecord] = field(default_factory=list)
    truncated_at: int | None = None
    truncation_reason: str | None = None

    @property
    def ks(self) -> list[int]:
        return [r.k for r in self.records]

    def record(self, k: int) -> SweepRecord:
        return self.records[k - 1]


def sweep(
    I: MonomialIdeal,
    i: int,
    kmax: int = 4,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    with_v: bool = True,
) -> PowerSweep:
    """Compute I^k, HS_i(I^k) and their invariants for k = 1..kmax.

    A resource error at some k stops the sweep; the records computed so far
    are kept and ``truncated_at`` names the offending k.
    """
    if I.is_zero() or I.is_unit():
        raise UndefinedInputError("sweep needs a proper nonzero ideal")
    if kmax < 2:
        raise ValueError("kmax must be at least 2")
    out = PowerSweep(I, i, kmax, field)
    P = None
    for k in range(1, kmax + 1):
        try:
            P = I if P is None else multiply(I, P)
            H = hs(P, i, field)
            rec = SweepRecord(k, P, H)
            if not H.is_zero():
                inv = graded_invariants(H, field)
                rec.reg = inv.regularity
                rec.depth = inv.depth_of_quotient
                rec.linear = is_equigenerated(H) and inv.regularity == degree(H.gens[0])
                rec.ass = frozenset(associated_primes(H))
                if with_v:
                    rec.v = v_number(H).v
        except ResourceError as exc:
            log.warning("sweep truncated at k=%d: %s", k, exc)
            out.truncated_at = k
            out.truncation_reason = str(exc)
            break
        out.records.append(rec)
    return out


@dataclass
class ContainmentReport:
    """Containments between I * HS_i(I^k) and HS_i(I^{k+1}) for each k in the window."""

    forward: dict[int, bool]
    backward: dict[int, bool]
    forward_witnesses: dict[int, list[Monomial]]
    backward_witnesses: dict[int, list[Monomial]]
    equality_onset: int | None


def check_containments(sw: PowerSweep) -> ContainmentReport:
    if len(sw.records) < 2:
        raise ValueError("need at least two computed powers")
    I = sw.base
    fwd, bwd, fw, bw = {}, {}, {}, {}
    for a, b in zip(sw.records, sw.records[1:]):
        k = a.k
        prod = multiply(I, a.hs)
        fw[k] = prod.missing_from(b.hs)
        bw[k] = b.hs.missing_from(prod)
        fwd[k] = not fw[k]
        bwd[k] = not bw[k]
    onset = None
    for k in sorted(fwd, reverse=True):
        if fwd[k] and bwd[k]:
            onset = k
        else:
            break
    return ContainmentReport(fwd, bwd, fw, bw, onset)


class AffineFit(NamedTuple):
    slope: Fraction
    intercept: Fraction
    onset: int
    length: int

    @property
    def stabilized(self) -> bool:
        return self.length >= MIN_SUFFIX


class ConstantFit(NamedTuple):
    value: object
    onset: int
    length: int

    @property
    def stabilized(self) -> bool:
        return self.length >= MIN_SUFFIX


def _consecutive_suffix(points: Sequence[tuple[int, object]]) -> list[tuple[int, object]]:
    if not points:
        return []
    out = [points[-1]]
    for p in reversed(points[:-1]):
        if p[0] != out[-1][0] - 1:
            break
        out.append(p)
    return out[::-1]


def affine_suffix(points: Sequence[tuple[int, int]]) -> AffineFit | None:
    """Longest suffix of consecutive k on which the values are exactly affine in k."""
    pts = _consecutive_suffix([p for p in points if p[1] is not None])
    if len(pts) < 2:
        return None
    (k1, y1), (k2, y2) = pts[-2], pts[-1]
    slope = Fraction(y2 - y1, k2 - k1)
    intercept = y2 - slope * k2
    start = len(pts) - 2
    while start > 0:
        k, y = pts[start - 1]
        if slope * k + intercept != y:
            break
        start -= 1
    return AffineFit(slope, intercept, pts[start][0], len(pts) - start)


def constant_suffix(points: Sequence[tuple[int, object]]) -> ConstantFit | None:
    pts = _consecutive_suffix([p for p in points if p[1] is not None])
    if not pts:
        return None
    value = pts[-1][1]
    start = len(pts) - 1
    while start > 0 and pts[start - 1][1] == value:
        start -= 1
    return ConstantFit(value, pts[start][0], len(pts) - start)


@dataclass
class FitReport:
    reg: AffineFit | None
    v: AffineFit | None
    depth: ConstantFit | None
    ass: ConstantFit | None

    def verdicts(self) -> dict[str, str]:
        out = {}
        for name in ("reg", "v", "depth", "ass"):
            fit = getattr(self, name)
            if fit is None or not fit.stabilized:
                out[name] = "not stabilized within window"
            else:
                out[name] = f"stable from k={fit.onset}"
        return out


def fit_linear_laws(sw: PowerSweep) -> FitReport:
    recs = sw.records
    return FitReport(
        reg=affine_suffix([(r.k, r.reg) for r in recs]),
        v=affine_suffix([(r.k, r.v) for r in recs]),
        depth=constant_suffix([(r.k, r.depth) for r in recs]),
        ass=constant_suffix([(r.k, r.ass) for r in recs]),
    )


@dataclass
class StabilizationReport:
    containments: ContainmentReport
    fits: FitReport


def stabilization_report(sw: PowerSweep) -> StabilizationReport:
    return StabilizationReport(check_containments(sw), fit_linear_laws(sw))


class SocleDegrees(NamedTuple):
    k: int
    degrees: tuple[int, ...]
    expected: int
    matches: bool


def socle_degree_profile(I: MonomialIdeal, kmax: int) -> list[SocleDegrees]:
    """Generator degrees of soc(I^k), compared against d*k - 1."""
    if not is_equigenerated(I):
        raise UndefinedInputError("socle degree profile needs an equigenerated ideal")
    d = degree(I.gens[0])
    out = []
    P = None
    for k in range(1, kmax + 1):
        P = I if P is None else multiply(I, P)
        soc = socle_report(P).ideal
        degs = tuple(sorted(set(soc.degrees())))
        out.append(SocleDegrees(k, degs, d * k - 1, degs == (d * k - 1,)))
    return out


def hs_top_via_socle(I: MonomialIdeal, k: int = 1) -> MonomialIdeal:
    """x_1 * ... * x_n * soc(I^k), the top homological shift ideal HS_{n-1}(I^k)."""
    soc = socle_report(power(I, k)).ideal
    if soc.is_zero():
        return zero_ideal(I.n)
    return scale(soc, (1,) * I.n)


def derivative_ideal(I: MonomialIdeal) -> MonomialIdeal:
    """The ideal generated by all partial derivatives of the generators (characteristic 0)."""
    gens = []
    for g in I.gens:
        for j, e in enumerate(g):
            if e:
                gens.append(g[:j] + (e - 1,) + g[j + 1:])
    return MonomialIdeal(I.n, tuple(gens))


@dataclass
class GolodCertificate:
    strongly_golod: bool
    derivative: MonomialIdeal
    witnesses: list[tuple[Monomial, Monomial, Monomial]]

    @property
    def witness(self) -> Monomial | None:
        return self.witnesses[0][2] if self.witnesses else None

    def __bool__(self) -> bool:
        return self.strongly_golod


def strongly_golod(I: MonomialIdeal) -> GolodCertificate:
    """Check (dI)^2 in I; failing products are listed in canonical order."""
    if I.is_zero() or I.is_unit():
        raise UndefinedInputError("strongly Golod check needs a proper nonzero ideal")
    D = derivative_ideal(I)
    bad = {}
    gens = D.gens
    for a in range(len(gens)):
        for b in range(a, len(gens)):
            p = mul(gens[a], gens[b])
            if p not in bad and not I.contains(p):
                bad[p] = (gens[a], gens[b], p)
    witnesses = [bad[p] for p in sorted(bad, key=sort_key)]
    return GolodCertificate(not witnesses, D, witnesses)


@dataclass
class HLPReport:
    """Linear-resolution flags of HS_i(I^k); None marks HS_i(I^k) = 0."""

    n: int
    kmax: int
    flags: dict[tuple[int, int], bool | None]
    failures: list[tuple[int, int]]
    onset: int | None
    verdict: str

    def matrix(self) -> list[list[bool | None]]:
        return [[self.flags[i, k] for k in range(1, self.kmax + 1)] for i in range(self.n)]


def homological_linear_powers(
    I: MonomialIdeal, kmax: int = 3, field: FieldSpec = DEFAULT_FIELD
) -> HLPReport:
    """Linear-resolution flags for I^k (i = 0) and every HS_i(I^k), k <= kmax."""
    if not is_equigenerated(I):
        raise UndefinedInputError("homological linear powers needs an equigenerated ideal")
    if I.is_unit():
        raise UndefinedInputError("unit ideal")
    flags: dict[tuple[int, int], bool | None] = {}
    P = None
    for k in range(1, kmax + 1):
        P = I if P is None else multiply(I, P)
        for i in range(I.n):
            H = hs(P, i, field)
            flags[i, k] = None if H.is_zero() else has_linear_resolution(H, field)
    failures = sorted(((i, k) for (i, k), f in flags.items() if f is False), key=lambda t: (t[1], t[0]))
    onset = None
    for k in range(kmax, 0, -1):
        if any(flags[i, k] is False for i in range(I.n)):
            break
        onset = k
    if not failures:
        verdict = "homological linear powers within window"
    elif onset is not None and kmax - onset + 1 >= MIN_SUFFIX:
        verdict = f"eventually homological linear powers (onset k={onset}) within window"
    else:
        cells = ", ".join(f"(i={i}, k={k})" for i, k in failures)
        verdict = f"fails at {cells}"
    return HLPReport(I.n, kmax, flags, failures, onset, verdict)


class CIRegularityRow(NamedTuple):
    i: int
    k: int
    displayed: int
    from_proof: int
    actual: int

    @property
    def in_scope(self) -> bool:
        # the closed form is only claimed for k >= 2
        return self.k >= 2

    @property
    def discrepancy(self) -> bool:
        return self.in_scope and (self.displayed != self.actual or self.from_proof != self.actual)


def ci_regularity_report(
    us: Sequence[Sequence[int]], kmax: int = 3, field: FieldSpec = DEFAULT_FIELD
) -> list[CIRegularityRow]:
    """Both closed-form regularity candidates next to the value read off the Betti table."""
    us = [tuple(u) for u in us]
    I = MonomialIdeal(len(us[0]), tuple(us))
    rows = []
    for k in range(1, kmax + 1):
        P = power(I, k)
        for i in range(len(us)):
            H = hs(P, i, field)
            if H.is_zero():
                continue
            cand = monomial_ci_regularity_variants(us, i, k)
            rows.append(CIRegularityRow(i, k, cand.displayed, cand.from_proof, graded_invariants(H, field).regularity))
    return rows


# two-variable ideals I_{a,b} = (x^{a_1} y^{b_1}, ..., x^{a_m} y^{b_m})


def two_variable_ideal(a: Sequence[int], b: Sequence[int]) -> MonomialIdeal:
    if len(a) != len(b) or not a:
        raise ValueError("a and b must be nonempty and of equal length")
    if any(x <= y for x, y in zip(a, a[1:])) or a[-1] < 0:
        raise ValueError("a must be strictly decreasing and nonnegative")
    if any(x >= y for x, y in zip(b, b[1:])) or b[0] < 0:
        raise ValueError("b must be strictly increasing and nonnegative")
    return MonomialIdeal(2, tuple(zip(a, b)))


def two_variable_parameters(I: MonomialIdeal) -> tuple[list[int], list[int]]:
    """The sequences (a, b) with G(I) = {x^{a_j} y^{b_j}}, ordered by decreasing x-degree."""
    if I.n != 2 or I.is_zero():
        raise UndefinedInputError("needs a nonzero ideal in two variables")
    gens = sorted(I.gens, key=lambda g: -g[0])
    return [g[0] for g in gens], [g[1] for g in gens]


def two_variable_hs1(a: Sequence[int], b: Sequence[int]) -> MonomialIdeal:
    """(x^{a_j} y^{b_{j+1}} : 1 <= j <= m-1)."""
    gens = tuple((a[j], b[j + 1]) for j in range(len(a) - 1))
    return MonomialIdeal(2, gens) if gens else zero_ideal(2)


def two_variable_depth(m: int, k: int) -> int | None:
    """Predicted depth S/HS_i(I^k) for I with m generators; None where nothing is predicted."""
    if m == 1:
        return 1
    if m == 2:
        return 0 if k >= 2 else None
    return 0


def ratios_to_alpha(sw: PowerSweep) -> list[tuple[int, Fraction]]:
    """v(HS_i(I^k)) / k along the sweep, for comparing against alpha(I)."""
    return [(r.k, Fraction(r.v, r.k)) for r in sw.records if r.v is not None]


def sweep_rows(sw: PowerSweep) -> list[dict]:
    cont = check_containments(sw) if len(sw.records) >= 2 else None
    rows = []
    for r in sw.records:
        rows.append(
            {
                "k": r.k,
                "gens": len(r.hs),
                "reg": r.reg,
                "depth": r.depth,
                "v": r.v,
                "ass": None if r.ass is None else sorted(sorted(p) for p in r.ass),
                "linear": r.linear,
                "forward": None if cont is None else cont.forward.get(r.k),
                "backward": None if cont is None else cont.backward.get(r.k),
            }
        )
    return rows


CSV_COLUMNS = ["k", "gens", "reg", "depth", "v", "ass", "linear", "forward", "backward"]


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "PASS" if v else "FAIL"
    if isinstance(v, list):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def sweep_to_csv(sw: PowerSweep) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in sweep_rows(sw):
        w.writerow([_csv_cell(row[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def _fit_json(fit) -> dict | None:
    if fit is None:
        return None
    d = fit._asdict()
    for key in ("slope", "intercept"):
        if key in d:
            d[key] = str(d[key])
    if "value" in d and isinstance(d["value"], frozenset):
        d["value"] = sorted(sorted(p) for p in d["value"])
    d["stabilized"] = fit.stabilized
    return d


def sweep_to_json(sw: PowerSweep) -> dict:
    data = {
        "field": sw.field.characteristic,
        "i": sw.i,
        "kmax": sw.kmax,
        "truncated_at": sw.truncated_at,
        "rows": sweep_rows(sw),
    }
    if len(sw.records) >= 2:
        rep = stabilization_report(sw)
        c = rep.containments
        data["report"] = {
            "forward": {str(k): v for k, v in c.forward.items()},
            "backward": {str(k): v for k, v in c.backward.items()},
            "forward_witnesses": {str(k): [list(m) for m in v] for k, v in c.forward_witnesses.items()},
            "equality_onset": c.equality_onset,
            "reg_fit": _fit_json(rep.fits.reg),
            "v_fit": _fit_json(rep.fits.v),
            "depth_fit": _fit_json(rep.fits.depth),
            "ass_fit": _fit_json(rep.fits.ass),
        }
    return data
