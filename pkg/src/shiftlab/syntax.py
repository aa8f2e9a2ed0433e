"""Text syntax for monomial ideals.

Grammar (whitespace is ignored)::

    ideal   := "(" [gen ("," gen)*] ")"
             | "B(" gen ("," gen)* ")"                 Borel closure
             | "Bc(" gen ";" int ("," int)* ")"        c-bounded Borel closure
             | "E(" graph ")" | "C(" graph ")"         edge / cover ideal
    gen     := "1" | factor ("*" factor)*
    factor  := var ("^" int)?
    var     := "x" int | "x" | "y" | "z" | "w"         x, y, z, w alias x1..x4
    graph   := int ";" [int "-" int ("," int "-" int)*]

The ambient variable count is the largest variable index used (or the graph
size, or the bound length) unless given explicitly.  "()" and "(0)" denote
the zero ideal.
"""

from __future__ import annotations

from .borel import borel_closure, c_bounded_borel_closure
from .errors import ParseError
from .monomial import Graph, Monomial, MonomialIdeal, cover_ideal, edge_ideal

ALIASES = {"x": 1, "y": 2, "z": 3, "w": 4}
_NAMES = "xyz"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.error(f"expected {token!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")

    def var(self) -> int:
        ch = self.peek()
        if ch not in ALIASES:
            self.error("expected a variable")
        self.pos += 1
        if ch == "x" and self.pos < len(self.text) and self.text[self.pos].isdigit():
            idx = self.integer()
            if idx < 1:
                self.error("variable indices start at 1")
            return idx
        return ALIASES[ch]

    def gen(self) -> dict[int, int]:
        if self.peek() == "1":
            self.pos += 1
            return {}
        exps: dict[int, int] = {}
        while True:
            v = self.var()
            e = self.integer() if self.accept("^") else 1
            exps[v] = exps.get(v, 0) + e
            if not self.accept("*"):
                return exps

    def gen_list(self, stop: str) -> list[dict[int, int]]:
        gens = []
        if self.peek() == stop:
            return gens
        if self.peek() == "0":
            self.pos += 1
            return gens
        while True:
            gens.append(self.gen())
            if not self.accept(","):
                return gens

    def graph(self) -> Graph:
        n = self.integer()
        self.expect(";")
        edges = []
        if self.peek() != ")":
            while True:
                i = self.integer()
                self.expect("-")
                j = self.integer()
                edges.append((i, j))
                if not self.accept(","):
                    break
        try:
            return Graph.from_edges(n, edges)
        except ValueError as exc:
            self.error(str(exc))


def _to_monomial(exps: dict[int, int], n: int) -> Monomial:
    return tuple(exps.get(i, 0) for i in range(1, n + 1))


def _ambient(gens: list[dict[int, int]], n: int | None, pos: int) -> int:
    used = max((max(g) for g in gens if g), default=0)
    if n is None:
        return max(used, 1)
    if used > n:
        raise ParseError(f"variable x{used} exceeds the declared {n} variables", pos)
    return n


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    p = _Parser(text)
    if p.accept("Bc("):
        gen = p.gen()
        p.expect(";")
        bounds = [p.integer()]
        while p.accept(","):
            bounds.append(p.integer())
        p.expect(")")
        p.end()
        nn = n if n is not None else len(bounds)
        if len(bounds) != nn:
            raise ParseError(f"bound vector has {len(bounds)} entries, expected {nn}", p.pos)
        nn = _ambient([gen], nn, p.pos)
        u = _to_monomial(gen, nn)
        if any(e > c for e, c in zip(u, bounds)):
            raise ParseError(f"monomial violates the bound {tuple(bounds)}", p.pos)
        return c_bounded_borel_closure(u, bounds)
    if p.accept("B("):
        gens = p.gen_list(")")
        p.expect(")")
        p.end()
        if not gens:
            raise ParseError("B(...) needs at least one Borel generator", p.pos)
        nn = _ambient(gens, n, p.pos)
        return borel_closure([_to_monomial(g, nn) for g in gens])
    for prefix, build in (("E(", edge_ideal), ("C(", cover_ideal)):
        if p.accept(prefix):
            G = p.graph()
            p.expect(")")
            p.end()
            if n is not None and n != G.n:
                raise ParseError(f"graph has {G.n} vertices, expected {n}", p.pos)
            return build(G)
    p.expect("(")
    gens = p.gen_list(")")
    p.expect(")")
    p.end()
    nn = _ambient(gens, n, p.pos)
    return MonomialIdeal(nn, tuple(_to_monomial(g, nn) for g in gens))


def parse_monomial(text: str, n: int) -> Monomial:
    p = _Parser(text)
    g = p.gen()
    p.end()
    _ambient([g], n, p.pos)
    return _to_monomial(g, n)


def variable_names(n: int) -> list[str]:
    if n <= 3:
        return list(_NAMES[:n])
    return [f"x{i}" for i in range(1, n + 1)]


def format_monomial(m: Monomial, names: list[str] | None = None) -> str:
    names = names or variable_names(len(m))
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal) -> str:
    names = variable_names(I.n)
    return "(" + ", ".join(format_monomial(g, names) for g in I.gens) + ")"
