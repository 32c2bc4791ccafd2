"""Brute-force oracles that share no code path with the Ext pipeline.

* associated primes of monomial ideals by exhaustive colon search,
* local cohomology of monomial quotients from the multigraded Čech complex,
* graded pieces of homology of a complex by linear algebra over GF(p).
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set

from .ring import Exp, GradedRing

Monomials = Sequence[Exp]


def _minimalize(gens: Iterable[Exp]) -> List[Exp]:
    gens = sorted(set(gens), key=sum)
    out: List[Exp] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def monomial_exponents(polys) -> List[Exp]:
    """Exponent vectors of a list of monomials; raises on anything else."""
    out = []
    for f in polys:
        if len(f.terms) != 1:
            raise ValueError(f"{f!r} is not a monomial")
        out.append(next(iter(f.terms)))
    return out


def _in_ideal(m: Exp, gens: Monomials) -> bool:
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


def _colon_by_monomial(gens: Monomials, m: Exp) -> List[Exp]:
    return _minimalize(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in gens)


def monomial_ass_oracle(n: int, gens: Monomials) -> Set[FrozenSet[int]]:
    """``Ass(S/I)`` of a monomial ideal, as sets of variable indices.

    Searches every monomial ``m`` dividing the lcm of the generators with
    ``m`` outside ``I`` and keeps the colons ``(I : m)`` that are generated by
    variables.
    """
    gens = _minimalize(gens)
    if any(sum(g) == 0 for g in gens):
        return set()
    lcm = [max((g[i] for g in gens), default=0) for i in range(n)]
    out: Set[FrozenSet[int]] = set()
    for m in product(*(range(a + 1) for a in lcm)):
        if _in_ideal(m, gens):
            continue
        col = _colon_by_monomial(gens, m)
        if all(sum(g) == 1 for g in col):
            out.add(frozenset(g.index(1) for g in col))
    return out


def oracle_omega(n: int, gens: Monomials) -> int:
    ass = monomial_ass_oracle(n, gens)
    return n - max(len(a) for a in ass)


# -- linear algebra over GF(p) --------------------------------------------

def rank_mod_p(rows: List[List[int]], p: int) -> int:
    rows = [[a % p for a in r] for r in rows if any(a % p for a in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(a * inv) % p for a in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# -- Čech complex of a monomial quotient ----------------------------------

def cech_local_cohomology_dims(ring: GradedRing, gens: Monomials, i: int,
                               q_range: Iterable[int]) -> Dict[int, int]:
    """``dim_k H^i_m(S/I)_q`` from the Čech complex on the variables, multidegree by multidegree.

    In multidegree ``a`` the localization ``(S/I)_{x_F}`` is one-dimensional
    iff ``a_j >= 0`` off ``F`` and no generator divides ``x^a`` off ``F``; it is
    zero otherwise.  Local cohomology vanishes once some ``a_j`` reaches the
    largest exponent of ``x_j`` among the generators, which bounds the search.
    """
    n, w, p = ring.n, ring.weights, ring.p
    gens = _minimalize(gens)
    top = [max((g[j] for g in gens), default=0) for j in range(n)]
    subsets = {k: [frozenset(c) for c in combinations(range(n), k)] for k in range(n + 1)}

    def alive(a, F) -> bool:
        if any(a[j] < 0 for j in range(n) if j not in F):
            return False
        return not any(all(g[j] <= a[j] for j in range(n) if j not in F) for g in gens)

    def cohom(a) -> int:
        def basis(k):
            return [F for F in subsets.get(k, []) if alive(a, F)] if 0 <= k <= n else []

        def matrix(k):
            src, tgt = basis(k), basis(k + 1)
            rows = []
            for G in tgt:
                row = []
                for F in src:
                    if F <= G:
                        (j,) = G - F
                        sign = (-1) ** sum(1 for t in G if t < j)
                        row.append(sign % p)
                    else:
                        row.append(0)
                rows.append(row)
            return rows, len(src), len(tgt)

        dim_here = len(basis(i))
        r_out = rank_mod_p(matrix(i)[0], p) if basis(i) and basis(i + 1) else 0
        r_in = rank_mod_p(matrix(i - 1)[0], p) if basis(i - 1) and basis(i) else 0
        return dim_here - r_out - r_in

    out = {}
    for q in q_range:
        total = 0
        for a in _multidegrees(w, top, q):
            total += cohom(a)
        out[q] = total
    return out


def _multidegrees(w: Sequence[int], top: Sequence[int], q: int):
    """Integer vectors ``a`` of weighted degree ``q`` with ``a_j <= top_j`` for all ``j``."""
    n = len(w)
    hi = [max(t, 0) for t in top]
    lo = []
    for j in range(n):
        rest = sum(w[k] * hi[k] for k in range(n) if k != j)
        lo.append(-((rest - q) // w[j]))

    def rec(j, left, acc):
        if j == n - 1:
            if left % w[j] == 0 and lo[j] <= left // w[j] <= hi[j]:
                yield tuple(acc + [left // w[j]])
            return
        for a in range(lo[j], hi[j] + 1):
            yield from rec(j + 1, left - a * w[j], acc + [a])

    yield from rec(0, q, [])


# -- graded pieces of a resolution tensored with a module ------------------

def tensor_homology_dim(R, N, j: int, q: int) -> int:
    """``dim_k H_j(R (x) N)_q`` by Gaussian elimination on standard-monomial bases.

    ``R`` is a :class:`GradedResolution`; ``N`` a presented module.  With ``N``
    free of rank one this measures exactness of ``R`` itself.
    """
    from .groebner import graded_piece_basis
    from .ring import mono_mul

    p = R.ring.p
    rel = N.relations

    def basis(i):
        if i < 0 or i > R.length:
            return []
        out = []
        for k, t in enumerate(R.twists[i]):
            for c, e in graded_piece_basis(N, q - t):
                out.append((k, c, e))
        return out

    def image(i, b, target):
        k, c, e = b
        v = {}
        for (row, m), a in R.maps[i - 1][k].items():
            key = (row * N.rank + c, mono_mul(m, e))
            v[key] = (v.get(key, 0) + a) % p
        # reduce each target block modulo the relations of N
        blocks = {}
        for (idx, m), a in v.items():
            if a:
                blocks.setdefault(idx // N.rank, {})[(idx % N.rank, m)] = a
        pos = {(kk, cc, ee): n for n, (kk, cc, ee) in enumerate(target)}
        row_out = [0] * len(target)
        for blk, vec in blocks.items():
            for (cc, m), a in rel.reduce(vec).items():
                row_out[pos[(blk, cc, m)]] = a
        return row_out

    here = basis(j)
    if not here:
        return 0
    below, above = basis(j - 1), basis(j + 1)
    out_rank = rank_mod_p([image(j, b, below) for b in here], p) if below else 0
    in_rank = rank_mod_p([image(j + 1, b, here) for b in above], p) if above else 0
    return len(here) - out_rank - in_rank
