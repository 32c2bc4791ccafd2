"""Finitely presented graded modules ``coker(relations -> sum S(-twists))``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from .errors import ZeroModuleError  # noqa: F401  (re-exported)
from .groebner import Submodule, graded_piece_basis, ideal
from .ring import GradedRing, Polynomial, RawVec, Vector, vec_add_into, vec_mul_term


@dataclass(frozen=True, eq=False)
class PresentedModule:
    ring: GradedRing
    twists: Tuple[int, ...]
    relations: Submodule
    gen_names: Optional[Tuple[str, ...]] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(self.twists))
        if self.relations.twists != self.twists or self.relations.ring != self.ring:
            raise ValueError("relations live in a different free module")
        if self.gen_names is None:
            names = ("g",) if self.rank == 1 else tuple(f"g{i}" for i in range(self.rank))
            object.__setattr__(self, "gen_names", names)

    @classmethod
    def from_relations(cls, ring, twists, rels: Sequence, gen_names=None):
        twists = tuple(twists)
        return cls(ring, twists, Submodule(ring, twists, tuple(rels)), gen_names)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def is_zero(self) -> bool:
        return self.relations.is_full()

    def shift(self, k: int) -> "PresentedModule":
        """``M(-k)``: every generator degree goes up by ``k``."""
        tw = tuple(t + k for t in self.twists)
        return PresentedModule.from_relations(self.ring, tw, self.relations.gens, self.gen_names)

    def graded_piece_dim(self, q: int) -> int:
        return len(graded_piece_basis(self, q))

    @cached_property
    def minimal(self) -> "PresentedModule":
        return minimize_presentation(self)

    def __repr__(self):
        rels = ", ".join(repr(v) for v in self.relations.vectors())
        return f"PresentedModule({self.ring.describe()}, twists={list(self.twists)}, rels=[{rels}])"


def cyclic(ring: GradedRing, polys: Sequence[Polynomial], twist: int = 0) -> PresentedModule:
    """``S(-twist)/(polys)``."""
    I = ideal(ring, polys)
    return PresentedModule.from_relations(ring, (twist,), I.gens)


def free(ring: GradedRing, twists: Sequence[int]) -> PresentedModule:
    return PresentedModule.from_relations(ring, twists, ())


def direct_sum(*mods: PresentedModule) -> PresentedModule:
    ring = mods[0].ring
    twists: List[int] = []
    rels: List[RawVec] = []
    names: List[str] = []
    for k, M in enumerate(mods):
        off = len(twists)
        twists.extend(M.twists)
        names.extend(f"{n}_{k}" for n in M.gen_names)
        for g in M.relations.gens:
            rels.append({(c + off, e): a for (c, e), a in g.items()})
    return PresentedModule.from_relations(ring, twists, rels, tuple(names))


def minimize_presentation(M: PresentedModule) -> PresentedModule:
    """Drop redundant generators (relations with a unit entry) and redundant relations."""
    ring = M.ring
    p = ring.p
    z = ring.zero_exp
    twists = list(M.twists)
    rels = [dict(g) for g in M.relations.minimal_gens]
    names = list(M.gen_names)
    changed = True
    while changed:
        changed = False
        for ri, r in enumerate(rels):
            unit = [c for (c, e) in r if e == z]
            if not unit:
                continue
            c = min(unit)
            inv = pow(r[(c, z)], -1, p)
            # g_c = -inv * (r - r_c g_c); substitute into every other relation
            new_rels = []
            for sj, s in enumerate(rels):
                if sj == ri:
                    continue
                s = dict(s)
                part = {e: a for (k, e), a in s.items() if k == c}
                for e, a in part.items():
                    vec_add_into(s, vec_mul_term(r, (a * inv) % p, e, p), -1, p)
                if s:
                    new_rels.append(s)
            rels = new_rels
            keep = [k for k in range(len(twists)) if k != c]
            remap = {old: new for new, old in enumerate(keep)}
            rels = [{(remap[k], e): a for (k, e), a in s.items()} for s in rels]
            twists = [twists[k] for k in keep]
            names = [names[k] for k in keep]
            changed = True
            break
    tw = tuple(twists)
    sub = Submodule(ring, tw, tuple(rels))
    out = PresentedModule(ring, tw, Submodule(ring, tw, tuple(sub.minimal_gens)),
                          tuple(names) if names else ())
    return out


def vector(M: PresentedModule, polys: Sequence) -> Vector:
    return Vector.from_polys(M.ring, M.twists, polys)


def adjoin_redundant_variable(M: PresentedModule, name: str, f: Polynomial,
                              weight: Optional[int] = None) -> PresentedModule:
    """Re-present ``M`` over ``S[t]`` with the extra relations ``(t - f) g_i``.

    ``f`` must be homogeneous of the weight given to ``t`` (zero is allowed, then
    ``weight`` is required).
    """
    if weight is None:
        weight = f.degree()
        if weight is None:
            raise ValueError("f must be a nonzero homogeneous polynomial, or pass weight")
    elif f and f.degree() != weight:
        raise ValueError("f is not homogeneous of the weight of the new variable")
    ring = M.ring.extend(name, weight)

    def lift(v):
        return {(c, e + (0,)): a for (c, e), a in v.items()}

    rels = [lift(g) for g in M.relations.gens]
    p = ring.p
    t_exp = (0,) * M.ring.n + (1,)
    for i in range(M.rank):
        r = {(i, t_exp): 1}
        for e, a in f.terms.items():
            r[(i, e + (0,))] = (-a) % p
        rels.append(r)
    return PresentedModule.from_relations(ring, M.twists, rels, M.gen_names)
