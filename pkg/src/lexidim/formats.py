"""Text formats: edge lists, graph6, and the family expression language.

Family expressions::

    atom := P<n> | C<n> | K<n> | E<n> | K(<m1>,...,<mt>) | wheel(<n>) | fan(<n>)
    expr := atom | comp(expr) | join(expr,expr) | lex(expr,expr)

:func:`parse_family_ast` returns a nested tuple such as ``("lex", ("C", 5),
("P", 2))`` which :mod:`lexidim.closed_forms` inspects; :func:`parse_family`
builds the graph.
"""

from __future__ import annotations

import re

from . import graph as gr
from .errors import ParseError
from .graph import Graph

Ast = tuple  # ("P", n) | ("K", n) | ("Kparts", (m1, ...)) | ("comp", ast) | ...


# -- edge list ------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"<n>; <i>-<j>,<i>-<j>,..."`` (whitespace ignored)."""
    compact = "".join(text.split())
    head, sep, body = compact.partition(";")
    if not sep:
        raise ParseError("edge list needs '<order>;' prefix", 0)
    if not head.isdigit():
        raise ParseError(f"bad order {head!r}", 0)
    order = int(head)
    edges = []
    pos = len(head) + 1
    if body:
        for item in body.split(","):
            m = re.fullmatch(r"(\d+)-(\d+)", item)
            if not m:
                raise ParseError(f"bad edge {item!r}", pos)
            edges.append((int(m.group(1)), int(m.group(2))))
            pos += len(item) + 1
    return gr.build_graph(order, edges)


def emit_edge_list(g: Graph) -> str:
    return f"{g.order}; " + ",".join(f"{u}-{v}" for u, v in g.edges())


# -- graph6 ---------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = [int(g.adjacent(i, j)) for j in range(1, g.order) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_order(g.order) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside graph6 range", pos)
    if not s:
        raise ParseError("empty graph6 string", 0)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, start = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise ParseError("truncated graph6 order field", len(s))
        n, start = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        if len(vals) < 8:
            raise ParseError("truncated graph6 order field", len(s))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        start = 8
    if n < 1:
        raise ParseError("graph6 order must be at least 1", 0)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    data = vals[start:]
    if len(data) != need:
        raise ParseError(f"expected {need} data characters for order {n}, got {len(data)}", start)
    bits = []
    for v in data:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", len(s) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return gr.build_graph(n, edges)


# -- family expressions -----------------------------------------------------------

class _FamilyParser:
    def __init__(self, text: str) -> None:
        self.s = text
        self.i = 0

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.i)

    def skip(self) -> None:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def expect(self, ch: str) -> None:
        self.skip()
        if self.s[self.i:self.i + 1] != ch:
            raise self.error(f"expected {ch!r}")
        self.i += 1

    def number(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.s, self.i)
        if not m:
            raise self.error("expected a number")
        self.i = m.end()
        return int(m.group())

    def word(self) -> str:
        self.skip()
        m = re.compile(r"[A-Za-z]+").match(self.s, self.i)
        if not m:
            raise self.error("expected a graph name")
        return m.group()

    def expr(self) -> Ast:
        self.skip()
        start = self.i
        name = self.word()
        if name in ("comp", "join", "lex", "wheel", "fan"):
            self.i += len(name)
            self.expect("(")
            if name == "comp":
                out: Ast = ("comp", self.expr())
            elif name in ("join", "lex"):
                left = self.expr()
                self.expect(",")
                out = (name, left, self.expr())
            else:
                out = (name, self.number())
            self.expect(")")
            return out
        # single-letter atoms are immediately followed by digits or '('
        head = self.s[self.i]
        if head not in "PCKE":
            self.i = start
            raise self.error(f"unknown graph name {name!r}")
        self.i += 1
        self.skip()
        if head == "K" and self.s[self.i:self.i + 1] == "(":
            self.i += 1
            parts = [self.number()]
            self.skip()
            while self.s[self.i:self.i + 1] == ",":
                self.i += 1
                parts.append(self.number())
            self.expect(")")
            return ("Kparts", tuple(parts))
        return (head, self.number())

    def parse(self) -> Ast:
        out = self.expr()
        self.skip()
        if self.i != len(self.s):
            raise self.error("trailing characters")
        return out


def parse_family_ast(text: str) -> Ast:
    return _FamilyParser(text).parse()


def build_family(ast: Ast) -> Graph:
    tag = ast[0]
    try:
        if tag == "P":
            return gr.path(ast[1])
        if tag == "C":
            return gr.cycle(ast[1])
        if tag == "K":
            return gr.complete(ast[1])
        if tag == "E":
            return gr.empty(ast[1])
        if tag == "Kparts":
            return gr.complete_multipartite(*ast[1])
        if tag == "wheel":
            return gr.wheel(ast[1])
        if tag == "fan":
            return gr.fan(ast[1])
        if tag == "comp":
            return gr.complement(build_family(ast[1]))
        if tag == "join":
            return gr.join(build_family(ast[1]), build_family(ast[2]))
        if tag == "lex":
            return gr.lex_product(build_family(ast[1]), build_family(ast[2]))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown node {tag!r}")


def parse_family(text: str) -> Graph:
    return build_family(parse_family_ast(text))


# -- dispatch -------------------------------------------------------------------------

FORMATS = ("edge-list", "graph6", "family")


def parse(text: str, fmt: str = "family") -> Graph:
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "family":
        return parse_family(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def emit(g: Graph, fmt: str) -> str:
    if fmt == "edge-list":
        return emit_edge_list(g)
    if fmt == "graph6":
        return emit_graph6(g)
    raise ValueError(f"cannot emit format {fmt!r}")


def guess_format(text: str) -> str:
    """Pick a format for a bare command-line argument."""
    if ";" in text:
        return "edge-list"
    try:
        parse_family_ast(text)
        return "family"
    except ParseError:
        return "graph6"

