"""Weighted polynomial rings over prime fields.

Polynomials and free-module elements are sparse maps.  A polynomial maps
exponent tuples to residues; a free-module element maps ``(component,
exponent)`` pairs to residues.  The engine works on the raw dicts, the
:class:`Polynomial` and :class:`Vector` wrappers are the public surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Optional, Sequence, Tuple

Exp = Tuple[int, ...]
Term = Tuple[int, Exp]
RawPoly = Dict[Exp, int]
RawVec = Dict[Term, int]

EXP_LIMIT = 2**32
ORDER_NAME = "wdegrevlex"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldElement:
    residue: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ValueError("field mismatch")
            return other.residue
        return other % self.modulus

    def __add__(self, other):
        return FieldElement(self.residue + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.residue - self._coerce(other), self.modulus)

    def __neg__(self):
        return FieldElement(-self.residue, self.modulus)

    def __mul__(self, other):
        return FieldElement(self.residue * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.residue == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        return self * FieldElement(self._coerce(other), self.modulus).inverse()

    def __bool__(self):
        return self.residue != 0


class NonHomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class GradedRing:
    """``k[x_1..x_n]`` over ``GF(p)`` with positive integer variable weights."""

    names: Tuple[str, ...]
    weights: Tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.names:
            raise ValueError("a ring needs at least one variable")
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if any(w < 1 for w in self.weights):
            raise ValueError("variable weights must be positive")
        if not is_prime(self.p) or self.p >= 2**31:
            raise ValueError(f"characteristic {self.p} is not a prime below 2^31")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def sigma(self) -> int:
        return sum(self.weights)

    @cached_property
    def zero_exp(self) -> Exp:
        return (0,) * self.n

    def degree(self, e: Exp) -> int:
        return sum(a * w for a, w in zip(e, self.weights))

    def mon_key(self, e: Exp):
        """Sort key realizing the fixed monomial order (larger key = larger monomial).

        Weighted degree, then total degree, then reverse lexicographic.  Reverse
        lex already separates distinct vectors, so the lex tie-break never fires.
        """
        return (self.degree(e), sum(e), tuple(-a for a in reversed(e)))

    def compare(self, a: Exp, b: Exp) -> int:
        ka, kb = self.mon_key(a), self.mon_key(b)
        return (ka > kb) - (ka < kb)

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.n
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def const(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, {self.zero_exp: c} if c else {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def extend(self, name: str, weight: int) -> "GradedRing":
        return GradedRing(self.names + (name,), self.weights + (weight,), self.p)

    def describe(self) -> str:
        vars_ = " ".join(f"{x}({w})" for x, w in zip(self.names, self.weights))
        return f"GF({self.p})[{vars_}]"


def ring_new(names: Sequence[str], weights: Sequence[int], p: int) -> GradedRing:
    return GradedRing(tuple(names), tuple(weights), p)


# -- raw sparse helpers ---------------------------------------------------

def mono_mul(a: Exp, b: Exp) -> Exp:
    out = tuple(x + y for x, y in zip(a, b))
    for x in out:
        if x >= EXP_LIMIT:
            raise OverflowError("exponent exceeds 32 bits")
    return out


def mono_divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Exp, a: Exp) -> Exp:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def poly_mul_raw(f: RawPoly, g: RawPoly, p: int) -> RawPoly:
    out: RawPoly = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            e = mono_mul(ea, eb)
            c = (out.get(e, 0) + ca * cb) % p
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def vec_add_into(acc: RawVec, v: RawVec, scale: int, p: int) -> None:
    """``acc += scale * v`` in place."""
    for t, c in v.items():
        s = (acc.get(t, 0) + scale * c) % p
        if s:
            acc[t] = s
        else:
            acc.pop(t, None)


def vec_add(a: RawVec, b: RawVec, p: int, scale: int = 1) -> RawVec:
    out = dict(a)
    vec_add_into(out, b, scale, p)
    return out


def vec_mul_term(v: RawVec, coeff: int, e: Exp, p: int) -> RawVec:
    return {(c, mono_mul(m, e)): (a * coeff) % p for (c, m), a in v.items()}


def vec_mul_poly(v: RawVec, f: RawPoly, p: int) -> RawVec:
    out: RawVec = {}
    for e, c in f.items():
        vec_add_into(out, vec_mul_term(v, c, e, p), 1, p)
    return out


def term_key(ring: GradedRing, twists: Sequence[int]):
    """Module order: twisted degree, then the monomial order, then lower component wins."""
    w = ring.weights

    def key(t: Term):
        c, e = t
        return (sum(a * b for a, b in zip(e, w)) + twists[c], sum(e),
                tuple(-a for a in reversed(e)), -c)

    return key


def vec_degree(ring: GradedRing, twists: Sequence[int], v: RawVec) -> Optional[int]:
    """Twisted degree of a homogeneous vector, ``None`` if not homogeneous."""
    degs = {ring.degree(e) + twists[c] for (c, e) in v}
    if len(degs) != 1:
        return None
    return degs.pop()


# -- public wrappers ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Polynomial:
    ring: GradedRing
    terms: RawPoly = field(default_factory=dict)

    def __post_init__(self):
        p = self.ring.p
        clean = {}
        for e, c in self.terms.items():
            if len(e) != self.ring.n:
                raise ValueError("exponent length does not match ring")
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
            if any(x >= EXP_LIMIT for x in e):
                raise OverflowError("exponent exceeds 32 bits")
            c %= p
            if c:
                clean[tuple(e)] = c
        ordered = dict(sorted(clean.items(), key=lambda t: self.ring.mon_key(t[0]), reverse=True))
        object.__setattr__(self, "terms", ordered)

    def _check(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, poly_mul_raw(self.terms, other.terms, self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and list(self.terms.items()) == list(other.terms.items())

    def __hash__(self):
        return hash((self.ring, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.degree(e) for e in self.terms}) <= 1

    def degree(self) -> Optional[int]:
        degs = {self.ring.degree(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def leading_monomial(self) -> Exp:
        return next(iter(self.terms))

    def __repr__(self):
        return format_poly(self.ring, self.terms)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def monomial_compare(ring: GradedRing, a: Exp, b: Exp) -> str:
    c = ring.compare(tuple(a), tuple(b))
    return {1: "GT", 0: "EQ", -1: "LT"}[c]


@dataclass(frozen=True, eq=False)
class Vector:
    """Element of the graded free module ``sum_c S(-twists[c])``."""

    ring: GradedRing
    twists: Tuple[int, ...]
    terms: RawVec = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(self.twists))
        r = len(self.twists)
        clean = {}
        for (c, e), a in self.terms.items():
            if not 0 <= c < r:
                raise ValueError(f"component {c} outside rank {r}")
            a %= self.ring.p
            if a:
                clean[(c, tuple(e))] = a
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_polys(cls, ring: GradedRing, twists: Sequence[int], polys: Iterable[Polynomial]):
        terms = {}
        for c, f in enumerate(polys):
            if isinstance(f, int):
                f = ring.const(f)
            for e, a in f.terms.items():
                terms[(c, e)] = a
        return cls(ring, tuple(twists), terms)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def component(self, c: int) -> Polynomial:
        return Polynomial(self.ring, {e: a for (k, e), a in self.terms.items() if k == c})

    def __add__(self, other: "Vector") -> "Vector":
        if other.ring != self.ring or other.twists != self.twists:
            raise ValueError("ambient mismatch")
        return Vector(self.ring, self.twists, vec_add(self.terms, other.terms, self.ring.p))

    def scale(self, f: Polynomial) -> "Vector":
        return Vector(self.ring, self.twists, vec_mul_poly(self.terms, f.terms, self.ring.p))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return (self.ring, self.twists, self.terms) == (other.ring, other.twists, other.terms)

    def __hash__(self):
        return hash((self.ring, self.twists, frozenset(self.terms.items())))

    def __repr__(self):
        return format_vec(self.ring, self.terms, [f"e{c}" for c in range(self.rank)])


def element_degree(v: Vector) -> Optional[int]:
    """Twisted degree of ``v``; ``None`` signals a non-homogeneous element."""
    if not v.terms:
        raise ValueError("the zero element has no degree")
    return vec_degree(v.ring, v.twists, v.terms)


# -- printing -------------------------------------------------------------

def format_monomial(ring: GradedRing, e: Exp) -> str:
    parts = []
    for name, a in zip(ring.names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_poly(ring: GradedRing, f: RawPoly) -> str:
    if not f:
        return "0"
    out = []
    for e in sorted(f, key=ring.mon_key, reverse=True):
        c, m = f[e], format_monomial(ring, e)
        if not m:
            out.append(str(c))
        elif c == 1:
            out.append(m)
        else:
            out.append(f"{c}*{m}")
    return " + ".join(out)


def format_vec(ring: GradedRing, v: RawVec, gen_names: Sequence[str]) -> str:
    if not v:
        return "0"
    by_comp: Dict[int, RawPoly] = {}
    for (c, e), a in v.items():
        by_comp.setdefault(c, {})[e] = a
    out = []
    for c in sorted(by_comp):
        f = by_comp[c]
        body = format_poly(ring, f)
        g = gen_names[c]
        if body == "1":
            out.append(g)
        elif len(f) == 1:
            out.append(f"{body}*{g}")
        else:
            out.append(f"({body})*{g}")
    return " + ".join(out)
