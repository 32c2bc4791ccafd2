"""Instance checks of the four-way depth/omega equivalence and the gap-one corollary."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InternalInconsistency, ZeroModuleError
from .groebner import colon
from .invariants import depth_of, dimension_of, ext_annihilator_profile, omega_of
from .module import PresentedModule
from .resolution import ext_module, hom_module, projective_dimension, tor_module

DUAL_CRITERION_NOTE = "Matlis-dual criterion certified via local duality from the Hom condition"


def _top(M: PresentedModule) -> int:
    if M.is_zero():
        raise ZeroModuleError("zero module")
    return projective_dimension(M)


def condition_depth_omega(M: PresentedModule) -> bool:
    _top(M)
    return depth_of(M) == omega_of(M)


def condition_h0(M: PresentedModule) -> bool:
    """``(0 :_M I_e) != 0`` for ``e = pd M``, which is equivalent to ``H^0_{I_e}(M) != 0``."""
    e = _top(M)
    I = ext_annihilator_profile(M)[e].annihilator
    rel = M.relations
    return not rel.contains_module(colon(rel, I))


def condition_hom(M: PresentedModule) -> bool:
    e = _top(M)
    return not hom_module(ext_module(M, e), M).is_zero()


def condition_tor(M: PresentedModule) -> bool:
    e = _top(M)
    return not tor_module(M, M, e).is_zero()


@dataclass(frozen=True)
class ConditionVerdict:
    e: int
    depth_equals_omega: bool
    h0_nonzero: bool
    hom_nonzero: bool
    tor_nonzero: bool

    @property
    def agree(self) -> bool:
        return len({self.depth_equals_omega, self.h0_nonzero,
                    self.hom_nonzero, self.tor_nonzero}) == 1

    def as_tuple(self):
        return (self.depth_equals_omega, self.h0_nonzero, self.hom_nonzero, self.tor_nonzero)


class EquivalenceFailure(InternalInconsistency):
    def __init__(self, verdict: ConditionVerdict):
        super().__init__(f"conditions disagree: {verdict.as_tuple()}")
        self.verdict = verdict


def evaluate_conditions(M: PresentedModule) -> ConditionVerdict:
    e = _top(M)
    return ConditionVerdict(e, condition_depth_omega(M), condition_h0(M),
                            condition_hom(M), condition_tor(M))


def check_equivalence(M: PresentedModule) -> ConditionVerdict:
    """Evaluate all four conditions; raise :class:`EquivalenceFailure` if they disagree."""
    v = evaluate_conditions(M)
    if not v.agree:
        raise EquivalenceFailure(v)
    return v


class GapVerdict(enum.Enum):
    CONFIRMED = "Confirmed"
    GAP_NOT_ONE = "GapNotOne"
    REFUTED = "Refuted"


@dataclass(frozen=True)
class GapResult:
    verdict: GapVerdict
    gap: int
    claim_cohomology_ring: bool

    @property
    def noteworthy(self) -> bool:
        """A refuted claimed cohomology ring needs a human look at the presentation."""
        return self.claim_cohomology_ring and self.verdict is GapVerdict.REFUTED


def check_gap_one(M: PresentedModule, claim_cohomology_ring: bool = False) -> GapResult:
    gap = dimension_of(M) - depth_of(M)
    if gap != 1:
        return GapResult(GapVerdict.GAP_NOT_ONE, gap, claim_cohomology_ring)
    ok = condition_depth_omega(M)
    return GapResult(GapVerdict.CONFIRMED if ok else GapVerdict.REFUTED, gap,
                     claim_cohomology_ring)
