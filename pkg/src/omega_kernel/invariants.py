"""Depth, dimension, codimension, the Ext-annihilator profile and omega."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import InternalInconsistency, ZeroModuleError
from .groebner import Submodule, annihilator, graded_piece_basis
from .module import PresentedModule
from .resolution import ext_module, projective_dimension, resolution


def _require_nonzero(M: PresentedModule) -> None:
    if M.is_zero():
        raise ZeroModuleError("zero module")


def ideal_dimension(I: Submodule) -> int:
    """Krull dimension of ``S/I`` read off the initial ideal; -1 for the unit ideal.

    The dimension is the size of the largest set of variables that contains
    the support of no leading monomial.
    """
    n = I.ring.n
    supports = []
    for _, e in I.leading_terms():
        supp = frozenset(i for i, a in enumerate(e) if a)
        if not supp:
            return -1
        supports.append(supp)
    for size in range(n, -1, -1):
        for A in combinations(range(n), size):
            A = frozenset(A)
            if not any(s <= A for s in supports):
                return size
    return 0


def ideal_codimension(I: Submodule) -> int:
    d = ideal_dimension(I)
    return I.ring.n - d if d >= 0 else I.ring.n + 1


def ext_nonvanishing(M: PresentedModule) -> List[int]:
    """The homological degrees ``j`` with ``Ext^j(M, S) != 0``."""
    pd = projective_dimension(M)
    return [j for j in range(pd + 1) if not ext_module(M, j).is_zero()]


def codimension(M: PresentedModule) -> int:
    """``min{j : Ext^j(M,S) != 0}``, checked against the initial ideal of ``ann M``."""
    _require_nonzero(M)
    via_ext = min(ext_nonvanishing(M))
    via_ann = ideal_codimension(annihilator(M))
    if via_ext != via_ann:
        raise InternalInconsistency(
            f"codimension mismatch: Ext says {via_ext}, annihilator says {via_ann}")
    return via_ext


def dimension_of(M: PresentedModule) -> int:
    return M.ring.n - codimension(M)


def depth_of(M: PresentedModule) -> int:
    _require_nonzero(M)
    return M.ring.n - projective_dimension(M)


@dataclass(frozen=True)
class ProfileEntry:
    e: int
    annihilator: Submodule = field(compare=False, repr=False)
    ext_nonzero: bool
    codim: int
    flag: bool


@dataclass(frozen=True)
class ExtAnnihilatorProfile:
    entries: Tuple[ProfileEntry, ...]

    @property
    def flags(self) -> List[int]:
        return [p.e for p in self.entries if p.flag]

    def __getitem__(self, e: int) -> ProfileEntry:
        return self.entries[e]


def ext_annihilator_profile(M: PresentedModule) -> ExtAnnihilatorProfile:
    """For each ``e <= pd M``: ``I_e = ann Ext^e(M,S)`` and whether ``codim I_e = e``.

    A codimension-``e`` prime is associated to ``M`` exactly when it contains
    ``I_e``, so the flagged ``e`` are the codimensions occurring in ``Ass M``.
    """
    _require_nonzero(M)
    out = []
    for e in range(projective_dimension(M) + 1):
        E = ext_module(M, e)
        I = annihilator(E)
        nonzero = not E.is_zero()
        c = ideal_codimension(I)
        if nonzero and c < e:
            raise InternalInconsistency(f"codim ann Ext^{e} = {c} < {e}")
        out.append(ProfileEntry(e, I, nonzero, c, nonzero and c == e))
    return ExtAnnihilatorProfile(tuple(out))


def omega_of(M: PresentedModule, profile: Optional[ExtAnnihilatorProfile] = None) -> int:
    """Smallest dimension of an associated prime, from the flagged codimensions."""
    profile = profile or ext_annihilator_profile(M)
    flags = profile.flags
    if not flags:
        raise InternalInconsistency("no associated prime detected on a nonzero module")
    return M.ring.n - max(flags)


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / prod_i (1 - t^{w_i})`` with a Laurent numerator ``{exponent: coeff}``."""

    numerator: Tuple[Tuple[int, int], ...]
    weights: Tuple[int, ...]

    def numerator_dict(self) -> Dict[int, int]:
        return dict(self.numerator)

    def vanishing_order_at_one(self) -> int:
        coeffs = self.numerator_dict()
        if not coeffs:
            raise ValueError("zero numerator")
        lo = min(coeffs)
        poly = [coeffs.get(lo + i, 0) for i in range(max(coeffs) - lo + 1)]
        order = 0
        while sum(poly) == 0:
            # synthetic division by (t - 1)
            q = []
            acc = 0
            for c in reversed(poly):
                acc += c
                q.append(acc)
            q.reverse()
            poly = q[1:]
            order += 1
        return order

    def pole_order(self) -> int:
        return len(self.weights) - self.vanishing_order_at_one()

    def coefficient(self, q: int) -> int:
        """Coefficient of ``t^q`` in the power series expansion."""
        num = self.numerator_dict()
        lo = min(num) if num else 0
        series = [0] * (q - lo + 1) if q >= lo else []
        for k, c in num.items():
            if k - lo < len(series):
                series[k - lo] += c
        for w in self.weights:
            for i in range(w, len(series)):
                series[i] += series[i - w]
        return series[q - lo] if series else 0


def hilbert_series(M: PresentedModule) -> HilbertSeries:
    _require_nonzero(M)
    num: Dict[int, int] = {}
    for (i, j), b in resolution(M).betti().items():
        num[j] = num.get(j, 0) + (-1) ** i * b
    num = {k: v for k, v in num.items() if v}
    return HilbertSeries(tuple(sorted(num.items())), M.ring.weights)


def local_cohomology_graded_dims(M: PresentedModule, i: int,
                                 q_range: Iterable[int]) -> Dict[int, int]:
    """``dim_k H^i_m(M)_q = dim_k Ext^{n-i}(M,S)_{-q-sigma}`` for each ``q``."""
    _require_nonzero(M)
    n, sigma = M.ring.n, M.ring.sigma
    j = n - i
    qs = list(q_range)
    if j < 0 or j > projective_dimension(M):
        return {q: 0 for q in qs}
    E = ext_module(M, j)
    return {q: len(graded_piece_basis(E, -q - sigma)) for q in qs}


@dataclass(frozen=True)
class InvariantReport:
    depth: int
    dim: int
    codim: int
    pd: int
    omega: int
    profile: ExtAnnihilatorProfile
    hilbert: HilbertSeries
    betti: Dict[Tuple[int, int], int]


def invariant_report(M: PresentedModule) -> InvariantReport:
    _require_nonzero(M)
    n = M.ring.n
    pd = projective_dimension(M)
    codim = codimension(M)
    profile = ext_annihilator_profile(M)
    omega = omega_of(M, profile)
    depth, dim = n - pd, n - codim
    if not depth <= omega <= dim:
        raise InternalInconsistency(f"depth {depth} <= omega {omega} <= dim {dim} fails")
    H = hilbert_series(M)
    if H.pole_order() != dim:
        raise InternalInconsistency(f"Hilbert pole order {H.pole_order()} != dim {dim}")
    return InvariantReport(depth, dim, codim, pd, omega, profile, H, resolution(M).betti())
