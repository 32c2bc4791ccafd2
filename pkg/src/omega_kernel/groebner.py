"""Gröbner bases for homogeneous submodules of graded free modules.

Everything downstream (syzygies, colons, intersections, annihilators) is
reduced to one primitive: a homogeneous Buchberger run under a module
order, see :func:`buchberger`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import limits
from .ring import (
    Exp,
    GradedRing,
    Polynomial,
    RawVec,
    Term,
    Vector,
    mono_div,
    mono_divides,
    mono_lcm,
    term_key,
    vec_add_into,
    vec_degree,
    vec_mul_term,
)


class Basis:
    """A list of monic vectors indexed by the component of their leading term."""

    def __init__(self, key):
        self.key = key
        self.items: List[Tuple[Term, RawVec]] = []
        self.by_comp: Dict[int, List[int]] = {}

    def add(self, v: RawVec) -> int:
        lt = max(v, key=self.key)
        self.by_comp.setdefault(lt[0], []).append(len(self.items))
        self.items.append((lt, v))
        return len(self.items) - 1

    def reducer(self, t: Term) -> Optional[int]:
        c, e = t
        for i in self.by_comp.get(c, ()):
            if mono_divides(self.items[i][0][1], e):
                return i
        return None

    def reduce(self, v: RawVec, p: int, full: bool = True) -> RawVec:
        """Remainder of ``v``; with ``full=False`` only the leading term is made irreducible."""
        v = dict(v)
        rest: RawVec = {}
        key = self.key
        while v:
            t = max(v, key=key)
            i = self.reducer(t)
            if i is None:
                if not full:
                    v.update(rest)
                    return v
                rest[t] = v.pop(t)
                continue
            (_, le), g = self.items[i]
            coeff = v[t]
            vec_add_into(v, vec_mul_term(g, coeff, mono_div(t[1], le), p), -1, p)
        return rest


def _monic(v: RawVec, key, p: int) -> RawVec:
    lt = max(v, key=key)
    inv = pow(v[lt], -1, p)
    return {t: (c * inv) % p for t, c in v.items()}


def buchberger(
    ring: GradedRing,
    twists: Sequence[int],
    gens: Sequence[RawVec],
    key: Optional[Callable] = None,
    degrees: Optional[Sequence[int]] = None,
    interreduce: bool = True,
) -> Tuple[List[RawVec], List[int]]:
    """Homogeneous Buchberger algorithm with the normal selection strategy.

    Returns ``(basis, minimal)`` where ``minimal`` lists the indices of the
    input generators that were not already in the span of those of lower
    degree and earlier index, i.e. a minimal generating subset.
    """
    p = ring.p
    key = key or term_key(ring, twists)
    w = ring.weights

    def tdeg(t: Term) -> int:
        return sum(a * b for a, b in zip(t[1], w)) + twists[t[0]]

    if degrees is None:
        degrees = [vec_degree(ring, twists, g) if g else 0 for g in gens]
    pending_gens = sorted(
        (d, i) for i, (d, g) in enumerate(zip(degrees, gens)) if g
    )
    G = Basis(key)
    pairs: List[Tuple[int, int, int]] = []
    pending = set()
    minimal: List[int] = []
    rank1 = len(twists) == 1
    cap = limits.current().max_pairs
    processed = 0

    def push_pairs(k: int):
        lk, _ = G.items[k]
        for i in range(k):
            li, _ = G.items[i]
            if li[0] != lk[0]:
                continue
            lcm = mono_lcm(li[1], lk[1])
            if rank1 and all(a == 0 or b == 0 for a, b in zip(li[1], lk[1])):
                continue
            heapq.heappush(pairs, (tdeg((lk[0], lcm)), i, k))
            pending.add((i, k))

    def chain_skip(i: int, j: int) -> bool:
        (c, ei), _ = G.items[i]
        ej = G.items[j][0][1]
        lcm = mono_lcm(ei, ej)
        for k in G.by_comp.get(c, ()):
            if k == i or k == j:
                continue
            if not mono_divides(G.items[k][0][1], lcm):
                continue
            if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
                continue
            return True
        return False

    def insert(r: RawVec):
        r = G.reduce(r, p, full=False)
        if not r:
            return False
        push_pairs(G.add(_monic(r, key, p)))
        return True

    gi = 0
    while pairs or gi < len(pending_gens):
        d_pair = pairs[0][0] if pairs else None
        d_gen = pending_gens[gi][0] if gi < len(pending_gens) else None
        if d_gen is None or (d_pair is not None and d_pair <= d_gen):
            _, i, j = heapq.heappop(pairs)
            pending.discard((i, j))
            if chain_skip(i, j):
                continue
            processed += 1
            if processed > cap:
                raise limits.ResourceCapExceeded(f"more than {cap} S-pairs")
            (c, ei), fi = G.items[i]
            ej, fj = G.items[j][0][1], G.items[j][1]
            lcm = mono_lcm(ei, ej)
            s = vec_mul_term(fi, 1, mono_div(lcm, ei), p)
            vec_add_into(s, vec_mul_term(fj, 1, mono_div(lcm, ej), p), -1, p)
            if s:
                insert(s)
        else:
            _, idx = pending_gens[gi]
            gi += 1
            if insert(gens[idx]):
                minimal.append(idx)

    if not interreduce:
        return [v for _, v in G.items], minimal
    return _interreduce(G, key, p), minimal


def _interreduce(G: Basis, key, p: int) -> List[RawVec]:
    items = G.items
    keep = []
    for i, (lt, v) in enumerate(items):
        redundant = False
        for j, (lt2, _) in enumerate(items):
            if j != i and lt2[0] == lt[0] and mono_divides(lt2[1], lt[1]):
                if lt2[1] != lt[1] or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(v)
    B = Basis(key)
    for v in keep:
        B.add(v)
    out = []
    for lt, v in B.items:
        head = {lt: v[lt]}
        tail = {t: c for t, c in v.items() if t != lt}
        tail = B.reduce(tail, p)
        head.update(tail)
        out.append(_monic(head, key, p))
    out.sort(key=lambda v: key(max(v, key=key)))
    return out


@dataclass(frozen=True, eq=False)
class Submodule:
    """Submodule of ``sum_c S(-twists[c])`` spanned by homogeneous generators."""

    ring: GradedRing
    twists: Tuple[int, ...]
    gens: Tuple[RawVec, ...]

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(self.twists))
        clean = []
        for g in self.gens:
            if isinstance(g, Vector):
                g = g.terms
            g = {t: c % self.ring.p for t, c in g.items() if c % self.ring.p}
            if not g:
                continue
            if vec_degree(self.ring, self.twists, g) is None:
                raise ValueError("submodule generators must be homogeneous")
            clean.append(g)
        object.__setattr__(self, "gens", tuple(clean))

    @property
    def rank(self) -> int:
        return len(self.twists)

    @cached_property
    def key(self):
        return term_key(self.ring, self.twists)

    @cached_property
    def _run(self):
        return buchberger(self.ring, self.twists, self.gens, self.key)

    @property
    def groebner(self) -> List[RawVec]:
        return self._run[0]

    @cached_property
    def _basis(self) -> Basis:
        B = Basis(self.key)
        for g in self.groebner:
            B.add(g)
        return B

    @cached_property
    def minimal_gens(self) -> List[RawVec]:
        """Minimal homogeneous generating subset of ``gens``, ordered by (degree, index)."""
        return [self.gens[i] for i in self._run[1]]

    def leading_terms(self) -> List[Term]:
        return [t for t, _ in self._basis.items]

    def reduce(self, v: RawVec) -> RawVec:
        return self._basis.reduce(v, self.ring.p)

    def contains(self, v) -> bool:
        if isinstance(v, Vector):
            v = v.terms
        return not self.reduce(v)

    def contains_module(self, other: "Submodule") -> bool:
        return all(self.contains(g) for g in other.gens)

    def same_span(self, other: "Submodule") -> bool:
        return self.groebner_key() == other.groebner_key()

    def groebner_key(self):
        return tuple(tuple(sorted(g.items())) for g in self.groebner)

    def degrees(self) -> List[int]:
        return [vec_degree(self.ring, self.twists, g) for g in self.gens]

    def is_full(self) -> bool:
        return all(self.contains({(c, self.ring.zero_exp): 1}) for c in range(self.rank))

    def vectors(self) -> List[Vector]:
        return [Vector(self.ring, self.twists, g) for g in self.gens]


def ideal(ring: GradedRing, polys: Iterable) -> Submodule:
    gens = []
    for f in polys:
        if isinstance(f, Polynomial):
            f = f.terms
        gens.append({(0, e): c for e, c in f.items()})
    return Submodule(ring, (0,), tuple(gens))


def ideal_polys(I: Submodule) -> List[Polynomial]:
    return [Polynomial(I.ring, {e: c for (_, e), c in g.items()}) for g in I.gens]


def full_module(ring: GradedRing, twists: Sequence[int]) -> Submodule:
    z = ring.zero_exp
    return Submodule(ring, tuple(twists), tuple({(c, z): 1} for c in range(len(twists))))


# -- the syzygy primitive -------------------------------------------------

def syzygies(
    ring: GradedRing,
    twists: Sequence[int],
    vecs: Sequence[RawVec],
    degrees: Sequence[int],
) -> List[RawVec]:
    """Minimal generators of ``{a : sum a_i vecs[i] = 0}`` in ``sum_i S(-degrees[i])``.

    Computed as the part of a Gröbner basis of the graph ``(vecs[i], e_i)``
    that has no component in the original ambient module, under an order in
    which every ambient term dominates every tag term.
    """
    r = len(twists)
    m = len(vecs)
    ext_twists = tuple(twists) + tuple(degrees)
    base = term_key(ring, ext_twists)

    def key(t):
        return (t[0] < r,) + base(t)

    z = ring.zero_exp
    graph = []
    for i, v in enumerate(vecs):
        g = dict(v)
        g[(r + i, z)] = 1
        graph.append(g)
    basis, _ = buchberger(ring, ext_twists, graph, key=key, degrees=list(degrees), interreduce=False)
    kernel = []
    for g in basis:
        if all(c >= r for c, _ in g):
            kernel.append({(c - r, e): a for (c, e), a in g.items()})
    if not kernel:
        return []
    return Submodule(ring, tuple(degrees), tuple(kernel)).minimal_gens


def syzygy_basis(U: Submodule) -> Submodule:
    """Syzygies among the reduced Gröbner basis of ``U``."""
    gb = U.groebner
    degs = [vec_degree(U.ring, U.twists, g) for g in gb]
    return Submodule(U.ring, tuple(degs), tuple(syzygies(U.ring, U.twists, gb, degs)))


def reduced_groebner(U: Submodule) -> Submodule:
    return Submodule(U.ring, U.twists, tuple(U.groebner))


def normal_form(v, U: Submodule) -> Vector:
    if isinstance(v, Vector):
        if v.ring != U.ring or v.twists != U.twists:
            raise ValueError("ambient mismatch")
        v = v.terms
    return Vector(U.ring, U.twists, U.reduce(v))


def combine(coeffs: RawVec, vecs: Sequence[RawVec], p: int) -> RawVec:
    """``sum_i coeffs_i * vecs[i]`` where ``coeffs`` is a vector indexed by ``i``."""
    out: RawVec = {}
    for (i, e), a in coeffs.items():
        vec_add_into(out, vec_mul_term(vecs[i], a, e, p), 1, p)
    return out


def project(v: RawVec, lo: int, hi: int) -> RawVec:
    return {(c - lo, e): a for (c, e), a in v.items() if lo <= c < hi}


# -- ideal and module calculus --------------------------------------------

def intersection(U: Submodule, V: Submodule) -> Submodule:
    if U.twists != V.twists:
        raise ValueError("ambient mismatch")
    if not U.gens or not V.gens:
        return Submodule(U.ring, U.twists, ())
    us, vs = list(U.gens), list(V.gens)
    degs = U.degrees() + V.degrees()
    syz = syzygies(U.ring, U.twists, us + vs, degs)
    p = U.ring.p
    gens = [combine(project(s, 0, len(us)), us, p) for s in syz]
    return Submodule(U.ring, U.twists, tuple(gens))


def ideal_intersection(I: Submodule, J: Submodule) -> Submodule:
    return intersection(I, J)


def colon_element(U: Submodule, f: RawVec) -> Submodule:
    """``(U : f) = {v : f v in U}`` for a homogeneous polynomial ``f`` (rank-1 raw vector)."""
    ring, r = U.ring, U.rank
    fdeg = vec_degree(ring, (0,), f)
    fe = [{(c, e): a for (_, e), a in f.items()} for c in range(r)]
    degs = [t + fdeg for t in U.twists] + U.degrees()
    syz = syzygies(ring, U.twists, fe + list(U.gens), degs)
    gens = [project(s, 0, r) for s in syz]
    return Submodule(ring, U.twists, tuple(gens))


def colon(U: Submodule, J: Submodule) -> Submodule:
    """``(U : J)``; the zero ideal yields the whole ambient module."""
    if not J.gens:
        return full_module(U.ring, U.twists)
    out = None
    for f in J.gens:
        c = colon_element(U, f)
        out = c if out is None else intersection(out, c)
    return out


def saturate(U: Submodule, J: Submodule) -> Submodule:
    cur = U
    while True:
        nxt = colon(cur, J)
        if nxt.same_span(cur):
            return reduced_groebner(cur)
        cur = nxt


def annihilator(M) -> Submodule:
    """``ann M`` as the intersection of the colons ``(relations : g_i)``."""
    ring = M.ring
    p = ring.p
    if M.is_zero():
        return ideal(ring, [ring.one()])
    z = ring.zero_exp
    out = None
    rel = M.relations
    for i in range(M.rank):
        e_i = {(i, z): 1}
        vecs = [e_i] + list(rel.gens)
        degs = [M.twists[i]] + rel.degrees()
        syz = syzygies(ring, M.twists, vecs, degs)
        # tag twist of e_i is its own degree, so coefficients are plain polynomials
        gens = []
        for s in syz:
            g = {(0, e): a for (c, e), a in s.items() if c == 0}
            if g:
                gens.append(g)
        I = Submodule(ring, (0,), tuple(gens))
        out = I if out is None else intersection(out, I)
        if not out.gens:
            break
    return out


def is_zero_module(M) -> bool:
    return M.is_zero()


def monomials_of_degree(ring: GradedRing, d: int) -> List[Exp]:
    """All exponent vectors of weighted degree ``d``, in descending monomial order."""
    if d < 0:
        return []
    w = ring.weights
    n = ring.n
    out = []

    def rec(i, left, acc):
        if i == n - 1:
            if left % w[i] == 0:
                out.append(tuple(acc + [left // w[i]]))
            return
        for a in range(left // w[i] + 1):
            rec(i + 1, left - a * w[i], acc + [a])

    rec(0, d, [])
    out.sort(key=ring.mon_key, reverse=True)
    return out


def graded_piece_basis(obj, q: int) -> List[Term]:
    """Standard ``(component, monomial)`` pairs spanning the degree-``q`` piece.

    ``obj`` is a presented module, or a submodule ``U`` read as the quotient ``F/U``.
    """
    U = obj.relations if hasattr(obj, "relations") else obj
    cap = limits.current().degree_cap
    lts: Dict[int, List[Exp]] = {}
    for c, e in U.leading_terms():
        lts.setdefault(c, []).append(e)
    out = []
    for c, t in enumerate(U.twists):
        d = q - t
        if d > cap:
            raise limits.ResourceCapExceeded(f"graded piece of degree {d} exceeds cap {cap}")
        for e in monomials_of_degree(U.ring, d):
            if not any(mono_divides(le, e) for le in lts.get(c, ())):
                out.append((c, e))
    return out
