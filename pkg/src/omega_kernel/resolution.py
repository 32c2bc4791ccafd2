"""Minimal graded free resolutions and the derived functors built on them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import limits
from .groebner import full_module, project, syzygies
from .errors import ZeroModuleError
from .module import PresentedModule, minimize_presentation
from .ring import GradedRing, Polynomial, RawVec, vec_add_into, vec_mul_term


@dataclass(frozen=True, eq=False)
class GradedResolution:
    """``F_l -> ... -> F_1 -> F_0``.

    ``twists[i]`` are the generator degrees of ``F_i``; ``maps[i-1]`` holds the
    columns of ``d_i : F_i -> F_{i-1}``, column ``k`` being the image of the
    ``k``-th basis element as a sparse vector of ``F_{i-1}``.
    """

    ring: GradedRing
    twists: Tuple[Tuple[int, ...], ...]
    maps: Tuple[Tuple[RawVec, ...], ...]
    minimal: bool = False

    @property
    def length(self) -> int:
        return len(self.twists) - 1

    @property
    def ranks(self) -> List[int]:
        return [len(t) for t in self.twists]

    def matrix(self, i: int) -> List[List[Polynomial]]:
        """``d_i`` as a ``rank F_{i-1}`` by ``rank F_i`` matrix of polynomials."""
        rows, cols = len(self.twists[i - 1]), len(self.twists[i])
        out = [[{} for _ in range(cols)] for _ in range(rows)]
        for k, col in enumerate(self.maps[i - 1]):
            for (r, e), a in col.items():
                out[r][k][e] = a
        return [[Polynomial(self.ring, f) for f in row] for row in out]

    def has_unit_entry(self) -> bool:
        z = self.ring.zero_exp
        return any(e == z for cols in self.maps for col in cols for (_, e) in col)

    def betti(self) -> Dict[Tuple[int, int], int]:
        out: Counter = Counter()
        for i, tw in enumerate(self.twists):
            for d in tw:
                out[(i, d)] += 1
        return dict(sorted(out.items()))


def _trim(twists, maps):
    while len(twists) > 1 and not twists[-1]:
        twists.pop()
        maps.pop()
    return twists, maps


def free_resolution(M: PresentedModule, max_length: Optional[int] = None) -> GradedResolution:
    """Minimal free resolution by iterated minimal syzygies."""
    ring = M.ring
    if max_length is None:
        max_length = ring.n
    M0 = minimize_presentation(M)
    twists = [M0.twists]
    maps: List[Tuple[RawVec, ...]] = []
    cols = list(M0.relations.gens)
    degs = M0.relations.degrees()
    while cols:
        if len(maps) >= max_length:
            raise limits.ResourceCapExceeded(f"resolution longer than {max_length}")
        maps.append(tuple(cols))
        twists.append(tuple(degs))
        syz = syzygies(ring, twists[-2], cols, degs)
        cols = syz
        degs = [_degree(ring, twists[-1], v) for v in syz]
    return GradedResolution(ring, tuple(twists), tuple(maps), minimal=True)


def _degree(ring, twists, v):
    (c, e) = next(iter(v))
    return ring.degree(e) + twists[c]


def minimize(R: GradedResolution) -> GradedResolution:
    """Cancel unit entries until every differential has entries in the maximal ideal.

    Pivots are taken lowest internal degree first, then by homological
    position, row and column.
    """
    ring = R.ring
    p = ring.p
    z = ring.zero_exp
    twists = [list(t) for t in R.twists]
    maps = [[dict(c) for c in cols] for cols in R.maps]
    while True:
        best = None
        for i, cols in enumerate(maps, start=1):
            for k, col in enumerate(cols):
                for (j, e), a in col.items():
                    if e == z:
                        cand = (twists[i][k], i, j, k)
                        if best is None or cand < best:
                            best = cand
        if best is None:
            break
        _, i, j, k = best
        d = maps[i - 1]
        pivot = d[k]
        inv = pow(pivot[(j, z)], -1, p)
        new_cols = []
        for b, col in enumerate(d):
            if b == k:
                continue
            col = dict(col)
            part = {e: a for (r, e), a in col.items() if r == j}
            for e, a in part.items():
                vec_add_into(col, vec_mul_term(pivot, (a * inv) % p, e, p), -1, p)
            new_cols.append(_drop_row(col, j))
        maps[i - 1] = new_cols
        if i < len(maps):
            maps[i] = [_drop_row(col, k) for col in maps[i]]
        if i >= 2:
            maps[i - 2] = [c for idx, c in enumerate(maps[i - 2]) if idx != j]
        del twists[i][k]
        del twists[i - 1][j]
    twists, maps = _trim(twists, maps)
    return GradedResolution(ring, tuple(tuple(t) for t in twists),
                            tuple(tuple(c) for c in maps), minimal=True)


def _drop_row(col: RawVec, j: int) -> RawVec:
    return {(r - (r > j), e): a for (r, e), a in col.items() if r != j}


@lru_cache(maxsize=512)
def _cached_resolution(M: PresentedModule) -> GradedResolution:
    return free_resolution(M)


def resolution(M: PresentedModule) -> GradedResolution:
    return _cached_resolution(M)


def projective_dimension(M: PresentedModule) -> int:
    if M.is_zero():
        raise ZeroModuleError("zero module")
    return resolution(M).length


def betti_table(M: PresentedModule) -> Dict[Tuple[int, int], int]:
    return resolution(M).betti()


# -- subquotients ----------------------------------------------------------

def subquotient(ring: GradedRing, twists: Sequence[int], A: Sequence[RawVec],
                B: Sequence[RawVec]) -> PresentedModule:
    """Presentation of ``(A + B) / B`` inside the free module with ``twists``.

    Generators are the ``A`` vectors; relations are the coefficient vectors
    ``a`` with ``sum a_i A_i`` in the span of ``B``.
    """
    twists = tuple(twists)
    A = [a for a in A if a]
    B = [b for b in B if b]
    if not A:
        return PresentedModule.from_relations(ring, (), ())
    degA = [_degree(ring, twists, a) for a in A]
    degB = [_degree(ring, twists, b) for b in B]
    syz = syzygies(ring, twists, A + B, degA + degB)
    rels = [project(s, 0, len(A)) for s in syz]
    return minimize_presentation(PresentedModule.from_relations(ring, degA, rels))


def _preimage(ring, src_twists, cols, tgt_twists, tgt_rels) -> List[RawVec]:
    """Generators of ``{v : phi(v) in span(tgt_rels)}`` where ``phi`` has the given columns."""
    r = len(src_twists)
    degs = list(src_twists) + [_degree(ring, tgt_twists, g) for g in tgt_rels]
    syz = syzygies(ring, tgt_twists, list(cols) + list(tgt_rels), degs)
    return [v for v in (project(s, 0, r) for s in syz) if v]


def _block_rels(rels: Sequence[RawVec], blocks: int, width: int) -> List[RawVec]:
    out = []
    for k in range(blocks):
        for g in rels:
            out.append({(k * width + c, e): a for (c, e), a in g.items()})
    return out


def _tensor_cols(cols: Sequence[RawVec], width: int) -> List[RawVec]:
    """Columns of ``d (x) id`` on ``F (x) N`` with ``N`` of ``width`` generators."""
    out = []
    for col in cols:
        for c in range(width):
            out.append({(i * width + c, e): a for (i, e), a in col.items()})
    return out


def _transpose(cols: Sequence[RawVec], nrows: int) -> List[RawVec]:
    out: List[RawVec] = [dict() for _ in range(nrows)]
    for k, col in enumerate(cols):
        for (i, e), a in col.items():
            out[i][(k, e)] = a
    return out


def ext_module(M: PresentedModule, j: int) -> PresentedModule:
    """``Ext^j_S(M, S)`` computed from the dual of the minimal resolution."""
    return _cached_ext(M, j)


@lru_cache(maxsize=2048)
def _cached_ext(M: PresentedModule, j: int) -> PresentedModule:
    if j < 0:
        raise ValueError("negative homological degree")
    ring = M.ring
    R = resolution(M)
    if j > R.length or not R.twists[0]:
        return PresentedModule.from_relations(ring, (), ())
    dual = tuple(-t for t in R.twists[j])
    if j == R.length:
        cycles = list(full_module(ring, dual).gens)
    else:
        nxt = tuple(-t for t in R.twists[j + 1])
        cols = _transpose(R.maps[j], len(R.twists[j]))
        cycles = _kernel(ring, dual, cols, nxt)
    if j == 0:
        bounds: List[RawVec] = []
    else:
        bounds = _transpose(R.maps[j - 1], len(R.twists[j - 1]))
    return subquotient(ring, dual, cycles, bounds)


def _kernel(ring, src_twists, cols, tgt_twists) -> List[RawVec]:
    return [v for v in syzygies(ring, tgt_twists, cols, list(src_twists)) if v]


def tor_module(M: PresentedModule, N: PresentedModule, j: int) -> PresentedModule:
    """``Tor_j^S(M, N)`` as homology of (minimal resolution of ``M``) tensor ``N``."""
    if j < 0:
        raise ValueError("negative homological degree")
    ring = M.ring
    R = resolution(M)
    N = N.minimal
    w = N.rank
    if j > R.length or w == 0 or not R.twists[0]:
        return PresentedModule.from_relations(ring, (), ())
    nrel = list(N.relations.gens)

    def tw(i):
        return tuple(a + b for a in R.twists[i] for b in N.twists)

    here = tw(j)
    rels_here = _block_rels(nrel, len(R.twists[j]), w)
    if j == 0:
        cycles = list(full_module(ring, here).gens)
    else:
        cols = _tensor_cols(R.maps[j - 1], w)
        below = tw(j - 1)
        cycles = _preimage(ring, here, cols, below,
                           _block_rels(nrel, len(R.twists[j - 1]), w))
    bounds = list(rels_here)
    if j < R.length:
        bounds += _tensor_cols(R.maps[j], w)
    return subquotient(ring, here, cycles + rels_here, bounds)


def hom_module(N: PresentedModule, M: PresentedModule) -> PresentedModule:
    """``Hom_S(N, M)`` as the kernel of ``Hom(F_0, M) -> Hom(F_1, M)``."""
    ring = M.ring
    N = N.minimal
    M = M.minimal
    w = M.rank
    if N.rank == 0 or w == 0:
        return PresentedModule.from_relations(ring, (), ())
    mrel = list(M.relations.gens)
    src = tuple(t - a for a in N.twists for t in M.twists)
    rels_src = _block_rels(mrel, N.rank, w)
    nrels = list(N.relations.gens)
    if not nrels:
        cycles = list(full_module(ring, src).gens)
    else:
        bdeg = N.relations.degrees()
        tgt = tuple(t - b for b in bdeg for t in M.twists)
        cols = _tensor_cols(_transpose(nrels, N.rank), w)
        cycles = _preimage(ring, src, cols, tgt, _block_rels(mrel, len(nrels), w))
    return subquotient(ring, src, cycles + rels_src, rels_src)
