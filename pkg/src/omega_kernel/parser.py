"""Reader and writer for ``.gmod`` presentation files.

A file is line oriented::

    # comment
    ring char 2 vars x(1) y(1) z(4)
    gens a(0) b(1)
    rel x*a + (y + z)*...
    meta claim cohomology

``gens`` may be omitted for a cyclic module, whose single generator is then
``g(0)`` and whose relations may be written as bare polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .module import PresentedModule
from .ring import GradedRing, Polynomial, Vector, format_vec, is_prime, vec_degree


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class PresentationDocument:
    ring: GradedRing
    gens: Tuple[Tuple[str, int], ...]
    relations: Tuple[Vector, ...]
    meta: Tuple[Tuple[str, str], ...] = ()

    @property
    def meta_dict(self) -> Dict[str, str]:
        return dict(self.meta)

    @property
    def label(self) -> Optional[str]:
        return self.meta_dict.get("label")

    @property
    def claim_cohomology_ring(self) -> bool:
        return self.meta_dict.get("claim", "").split()[:1] == ["cohomology"]

    @property
    def twists(self) -> Tuple[int, ...]:
        return tuple(d for _, d in self.gens)

    def module(self) -> PresentedModule:
        names = tuple(n for n, _ in self.gens)
        return PresentedModule.from_relations(
            self.ring, self.twists, [v.terms for v in self.relations], names)

    def __eq__(self, other):
        if not isinstance(other, PresentationDocument):
            return NotImplemented
        return (self.ring == other.ring and self.gens == other.gens and self.meta == other.meta
                and [v.terms for v in self.relations] == [v.terms for v in other.relations])

    def __hash__(self):
        return hash((self.ring, self.gens, self.meta))

    def pretty(self) -> str:
        r = self.ring
        vars_ = " ".join(f"{x}({w})" for x, w in zip(r.names, r.weights))
        lines = [f"ring char {r.p} vars {vars_}",
                 "gens " + " ".join(f"{n}({d})" for n, d in self.gens)]
        names = [n for n, _ in self.gens]
        for v in self.relations:
            lines.append("rel " + format_vec(r, v.terms, names))
        for k, val in self.meta:
            lines.append(f"meta {k} {val}")
        return "\n".join(lines) + "\n"


_TOKEN = re.compile(r"(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9']*)|(?P<op>[-+*^()]))")
_DECL = re.compile(r"([A-Za-z_][A-Za-z_0-9']*)\((-?\d+)\)")


class _Linear:
    """Sum of ``poly * generator`` plus an optional generator-free part (key ``None``)."""

    def __init__(self, parts: Dict[Optional[int], Polynomial]):
        self.parts = {k: f for k, f in parts.items() if f}

    def __add__(self, other: "_Linear") -> "_Linear":
        out = dict(self.parts)
        for k, f in other.parts.items():
            out[k] = out[k] + f if k in out else f
        return _Linear(out)

    def scale(self, f: Polynomial) -> "_Linear":
        return _Linear({k: g * f for k, g in self.parts.items()})

    def pure(self) -> bool:
        return all(k is None for k in self.parts)

    def poly(self, ring) -> Polynomial:
        return self.parts.get(None, ring.zero())


class _ExprParser:
    def __init__(self, text: str, line: int, offset: int, ring: GradedRing, gen_index: Dict[str, int]):
        self.line = line
        self.ring = ring
        self.gen_index = gen_index
        self.toks: List[Tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r}", line, offset + pos + 1)
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), offset + pos + 1))
            pos = m.end()
        self.toks.append(("end", "", offset + len(text) + 1))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok[2])

    def parse(self) -> _Linear:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return v

    def expr(self) -> _Linear:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        v = self.term()
        if sign < 0:
            v = v.scale(self.ring.const(-1))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            v = v + (t.scale(self.ring.const(-1)) if op == "-" else t)
        return v

    def term(self) -> _Linear:
        v = self.power()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            tok = self.take()
            w = self.power()
            if v.pure():
                v = w.scale(v.poly(self.ring))
            elif w.pure():
                v = v.scale(w.poly(self.ring))
            else:
                raise self.error("product of two generators", tok)
        return v

    def power(self) -> _Linear:
        v = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a non-negative integer", tok)
            k = int(tok[1])
            if not v.pure():
                if k == 1:
                    return v
                raise self.error("power of a generator", tok)
            return _Linear({None: v.poly(self.ring) ** k})
        return v

    def atom(self) -> _Linear:
        tok = self.take()
        kind, text, _ = tok
        if kind == "int":
            return _Linear({None: self.ring.const(int(text))})
        if kind == "name":
            if text in self.ring.names:
                return _Linear({None: self.ring.var(text)})
            if text in self.gen_index:
                return _Linear({self.gen_index[text]: self.ring.one()})
            raise self.error(f"unknown identifier {text!r}", tok)
        if kind == "op" and text == "(":
            v = self.expr()
            close = self.take()
            if close[1] != ")":
                raise self.error("expected ')'", close)
            return v
        raise self.error(f"unexpected {text or 'end of line'!r}", tok)


def _decls(rest: str, line: int, offset: int, what: str) -> List[Tuple[str, int]]:
    out = []
    pos = 0
    for word in re.finditer(r"\S+", rest):
        m = _DECL.fullmatch(word.group())
        if not m:
            raise ParseError(f"malformed {what} declaration {word.group()!r}", line,
                             offset + word.start() + 1)
        out.append((m.group(1), int(m.group(2))))
        pos = word.end()
    if not out:
        raise ParseError(f"no {what} declared", line, offset + pos + 1)
    return out


def parse_presentation(text: str) -> PresentationDocument:
    ring: Optional[GradedRing] = None
    gens: Optional[List[Tuple[str, int]]] = None
    rel_lines: List[Tuple[int, int, str]] = []
    meta: List[Tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        indent = len(line) - len(stripped)
        head, _, rest = stripped.partition(" ")
        offset = indent + len(head) + 1
        if head == "ring":
            if ring is not None:
                raise ParseError("duplicate ring line", lineno, indent + 1)
            m = re.fullmatch(r"\s*char\s+(\d+)\s+vars\s+(.*)", rest)
            if not m:
                raise ParseError("expected 'ring char <p> vars <name>(<weight>) ...'", lineno, offset + 1)
            p = int(m.group(1))
            if not is_prime(p) or p >= 2**31:
                raise ParseError(f"characteristic {p} is not prime", lineno, offset + m.start(1) + 1)
            decl = _decls(m.group(2), lineno, offset + m.start(2), "variable")
            try:
                ring = GradedRing(tuple(n for n, _ in decl), tuple(w for _, w in decl), p)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, offset + m.start(2) + 1) from None
        elif head == "gens":
            if gens is not None:
                raise ParseError("duplicate gens line", lineno, indent + 1)
            gens = _decls(rest, lineno, offset, "generator")
            if len({n for n, _ in gens}) != len(gens):
                raise ParseError("duplicate generator names", lineno, offset + 1)
        elif head == "rel":
            rel_lines.append((lineno, offset, rest))
        elif head == "meta":
            key, _, val = rest.strip().partition(" ")
            if not key:
                raise ParseError("meta needs a key", lineno, offset + 1)
            meta.append((key, val.strip()))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, indent + 1)
    if ring is None:
        raise ParseError("missing ring line", 1, 1)
    cyclic_default = gens is None
    if cyclic_default:
        gens = [("g", 0)]
    clash = {n for n, _ in gens} & set(ring.names)
    if clash:
        raise ParseError(f"generator name {sorted(clash)[0]!r} is also a variable", 1, 1)
    gen_index = {n: i for i, (n, _) in enumerate(gens)}
    twists = tuple(d for _, d in gens)
    rels: List[Vector] = []
    for lineno, offset, rest in rel_lines:
        lin = _ExprParser(rest, lineno, offset, ring, gen_index).parse()
        parts = dict(lin.parts)
        if None in parts:
            if not cyclic_default and len(gens) != 1:
                raise ParseError("relation term without a generator", lineno, offset + 1)
            if any(k is not None for k in parts):
                raise ParseError("relation mixes bare polynomial and generator terms", lineno, offset + 1)
            parts = {0: parts.pop(None)}
        terms = {(c, e): a for c, f in parts.items() for e, a in f.terms.items()}
        if terms and vec_degree(ring, twists, terms) is None:
            raise ParseError("relation is not homogeneous", lineno, offset + 1)
        rels.append(Vector(ring, twists, terms))
    return PresentationDocument(ring, tuple(gens), tuple(rels), tuple(meta))


def parse_file(path) -> PresentationDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())
