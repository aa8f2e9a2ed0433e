"""Command-line front end.

    shiftlab VERB IDEAL [--i I] [--kmax K] [--vars N] [--field P]
                        [--format text|json|csv] [--out PATH] [--budget B]

Exit status: 0 on success, 2 when a yes/no question is answered "no",
1 on errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__, config
from .betti import betti_table, graded_invariants, hs
from .errors import ShiftLabError
from .invariants import associated_primes, irreducible_decomposition, v_number
from .linalg import FieldSpec
from .linearity import SearchStatus, find_linear_quotients_order, unconnected_pairs
from .monomial import MonomialIdeal, multiply, socle_report
from .shift_algebra import (
    CSV_COLUMNS,
    homological_linear_powers,
    strongly_golod,
    sweep,
    sweep_to_csv,
    sweep_to_json,
    sweep_rows,
    stabilization_report,
)
from .syntax import format_ideal, format_monomial, parse_ideal, variable_names

VERBS = (
    "hs", "betti", "socle", "reg", "depth", "ass", "vnum", "power",
    "lq", "linrel", "borel", "sweep", "golod", "hlp",
)

EXIT_OK, EXIT_ERROR, EXIT_NO = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # usage errors share exit status 1 with every other error; 2 means "no"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


class Report:
    def __init__(self, text: str, data: dict, rows: list[list] | None = None, ok: bool = True):
        self.text = text
        self.data = data
        self.rows = rows
        self.ok = ok


def _field_arg(raw: str) -> FieldSpec:
    try:
        return FieldSpec(int(raw))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="shiftlab", description="Homological shift ideals of monomial ideals.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("ideal", help='e.g. "(x^2, y^2, x*y*z)", "B(x1*x2*x5, x3^3)", "E(4; 1-2, 2-3, 3-4)"')
    p.add_argument("--i", type=int, default=1, help="homological index (default 1)")
    p.add_argument("--kmax", type=int, default=4, help="largest power for sweep/hlp/power (default 4)")
    p.add_argument("--vars", type=int, default=None, help="ambient number of variables")
    p.add_argument("--field", type=_field_arg, default=FieldSpec(), help="0 or a prime (default 32003)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default=None, help="write the report to this file")
    p.add_argument("--budget", type=int, default=None, help="cap for lattice/search sizes")
    return p


def _ideal_rows(I: MonomialIdeal) -> list[list]:
    return [["generator"]] + [[format_monomial(g)] for g in I.gens]


def _ideal_report(I: MonomialIdeal, **extra) -> Report:
    data = {"n": I.n, "ideal": format_ideal(I), "generators": [list(g) for g in I.gens], **extra}
    return Report(format_ideal(I), data, _ideal_rows(I))


def _do_hs(I, args):
    return _ideal_report(hs(I, args.i, args.field), i=args.i)


def _do_betti(I, args):
    table = betti_table(I, args.field)
    text = table.display() + "\n\nmultigraded:\n" + "\n".join(
        f"  beta_{e['i']},{format_monomial(tuple(e['multidegree']))} = {e['dim']}"
        for e in table.to_json()["entries"]
    )
    rows = [["i", "multidegree", "dim"]] + [
        [e["i"], " ".join(map(str, e["multidegree"])), e["dim"]] for e in table.to_json()["entries"]
    ]
    return Report(text, table.to_json(), rows)


def _do_socle(I, args):
    soc = socle_report(I)
    rep = _ideal_report(soc.ideal, degenerate=soc.degenerate)
    if soc.degenerate:
        rep.text += "\n(degenerate: the socle is the unit ideal)"
    return rep


def _do_reg(I, args):
    inv = graded_invariants(I, args.field)
    return Report(str(inv.regularity), {"regularity": inv.regularity}, [["regularity"], [inv.regularity]])


def _do_depth(I, args):
    inv = graded_invariants(I, args.field)
    data = {"depth_of_quotient": inv.depth_of_quotient, "projective_dimension": inv.projective_dimension}
    return Report(str(inv.depth_of_quotient), data, [list(data), list(data.values())])


def _prime_text(p, n: int) -> str:
    names = variable_names(n)
    return "(" + ", ".join(names[j - 1] for j in sorted(p)) + ")"


def _do_ass(I, args):
    primes = sorted(sorted(p) for p in associated_primes(I))
    comps = irreducible_decomposition(I)
    text = "\n".join(_prime_text(p, I.n) for p in primes)
    text += "\n\ncomponents:\n" + "\n".join("  " + format_ideal(C) for C in comps)
    rows = [["prime"]] + [[" ".join(map(str, p))] for p in primes]
    return Report(text, {"ass": primes, "components": [format_ideal(C) for C in comps]}, rows)


def _do_vnum(I, args):
    rep = v_number(I)
    lines = [f"v = {rep.v}"]
    for p in rep.to_json()["primes"]:
        lines.append(f"  v_p = {p['v_p']} for {_prime_text(p['prime'], I.n)}, "
                     f"witness {format_monomial(tuple(p['witness']))}")
    return Report("\n".join(lines), rep.to_json())


def _do_power(I, args):
    lines, data = [], []
    P = None
    for k in range(1, args.kmax + 1):
        P = I if P is None else multiply(I, P)
        lines.append(f"k={k}: {format_ideal(P)}")
        data.append({"k": k, "ideal": format_ideal(P), "generators": [list(g) for g in P.gens]})
    rows = [["k", "ideal"]] + [[d["k"], d["ideal"]] for d in data]
    return Report("\n".join(lines), {"powers": data}, rows)


def _do_lq(I, args):
    res = find_linear_quotients_order(I)
    if res.status is SearchStatus.BUDGET_EXHAUSTED:
        raise ShiftLabError(f"linear-quotients search budget exhausted after {res.nodes} nodes")
    if not res.found:
        return Report("no linear-quotients order exists", {"status": res.status.value}, ok=False)
    o = res.order
    lines = [f"{format_monomial(u)}  set={{{', '.join(map(str, sorted(s)))}}}" for u, s in zip(o.order, o.sets)]
    return Report("\n".join(lines), {"status": res.status.value, **o.to_json()})


def _do_linrel(I, args):
    bad = unconnected_pairs(I)
    ok = not bad
    text = "linearly related" if ok else "not linearly related; unconnected pairs:\n" + "\n".join(
        f"  {format_monomial(u)} -- {format_monomial(v)}" for u, v in bad
    )
    return Report(text, {"linearly_related": ok, "unconnected": [[list(u), list(v)] for u, v in bad]}, ok=ok)


def _do_borel(I, args):
    return _ideal_report(I)


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "PASS" if v else "FAIL"
    if isinstance(v, list):
        return " ".join("{" + ",".join(map(str, p)) + "}" for p in v)
    return str(v)


def _do_sweep(I, args):
    sw = sweep(I, args.i, args.kmax, args.field)
    rows = [CSV_COLUMNS] + [list(r.values()) for r in sweep_rows(sw)]
    lines = [f"sweep of HS_{args.i}(I^k), k = 1..{args.kmax}"]
    for r in sw.records:
        lines.append(f"k={r.k}: {format_ideal(r.hs)}")
    lines.append("")
    table = [CSV_COLUMNS] + [[_cell(r[c]) for c in CSV_COLUMNS] for r in sweep_rows(sw)]
    widths = [max(len(row[j]) for row in table) for j in range(len(CSV_COLUMNS))]
    for row in table:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    if len(sw.records) >= 2:
        rep = stabilization_report(sw)
        for name, verdict in rep.fits.verdicts().items():
            lines.append(f"{name}: {verdict}")
        if rep.fits.reg is not None and rep.fits.reg.stabilized:
            lines.append(f"reg fit: {rep.fits.reg.slope}*k + {rep.fits.reg.intercept} from k={rep.fits.reg.onset}")
        lines.append(f"equality onset: {rep.containments.equality_onset}")
    if sw.truncated_at is not None:
        lines.append(f"TRUNCATED at k={sw.truncated_at}: {sw.truncation_reason}")
    report = Report("\n".join(lines), sweep_to_json(sw), rows)
    report.csv_text = sweep_to_csv(sw)
    return report


def _do_golod(I, args):
    cert = strongly_golod(I)
    data = {
        "strongly_golod": cert.strongly_golod,
        "derivative": [list(g) for g in cert.derivative.gens],
        "witnesses": [[list(a), list(b), list(p)] for a, b, p in cert.witnesses],
    }
    if cert.strongly_golod:
        text = "strongly Golod"
    else:
        a, b, p = cert.witnesses[0]
        text = f"not strongly Golod: {format_monomial(a)} * {format_monomial(b)} = {format_monomial(p)} not in I"
    return Report(text, data, ok=cert.strongly_golod)


def _do_hlp(I, args):
    rep = homological_linear_powers(I, args.kmax, args.field)
    sym = {True: "+", False: "X", None: "0"}
    lines = ["i\\k " + " ".join(str(k) for k in range(1, args.kmax + 1))]
    for i, row in enumerate(rep.matrix()):
        lines.append(f"{i:>3} " + " ".join(sym[f] for f in row))
    lines.append(rep.verdict)
    flags = [{"i": i, "k": k, "linear": f} for (i, k), f in sorted(rep.flags.items())]
    rows = [["i", "k", "linear"]] + [[f["i"], f["k"], f["linear"]] for f in flags]
    data = {"kmax": args.kmax, "flags": flags, "verdict": rep.verdict,
            "failures": [list(t) for t in rep.failures]}
    return Report("\n".join(lines), data, rows, ok=not rep.failures or "eventually" in rep.verdict)


HANDLERS = {
    "hs": _do_hs, "betti": _do_betti, "socle": _do_socle, "reg": _do_reg, "depth": _do_depth,
    "ass": _do_ass, "vnum": _do_vnum, "power": _do_power, "lq": _do_lq, "linrel": _do_linrel,
    "borel": _do_borel, "sweep": _do_sweep, "golod": _do_golod, "hlp": _do_hlp,
}


def _render(report: Report, fmt: str, field: FieldSpec) -> str:
    if fmt == "json":
        return json.dumps({"field": field.characteristic, **report.data}, indent=2) + "\n"
    if fmt == "csv":
        body = getattr(report, "csv_text", None)
        if body is None:
            if report.rows is None:
                raise ShiftLabError("csv output is not available for this verb")
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(report.rows)
            body = buf.getvalue()
        return f"# field: {field}\n" + body
    return f"# field: {field}\n{report.text}\n"


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get(config.ENV_BUDGET)
    if args.budget is not None:
        os.environ[config.ENV_BUDGET] = str(args.budget)
    try:
        I = parse_ideal(args.ideal, args.vars)
        report = HANDLERS[args.verb](I, args)
        out = _render(report, args.format, args.field)
    except (ShiftLabError, ValueError) as exc:
        print(f"shiftlab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        if saved is None:
            os.environ.pop(config.ENV_BUDGET, None)
        else:
            os.environ[config.ENV_BUDGET] = saved
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK if report.ok else EXIT_NO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
