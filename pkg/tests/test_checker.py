import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omega_kernel.checker import (
    EquivalenceFailure,
    GapVerdict,
    check_equivalence,
    check_gap_one,
    condition_depth_omega,
    condition_h0,
    condition_hom,
    condition_tor,
    evaluate_conditions,
)
from omega_kernel.errors import InternalInconsistency, ZeroModuleError
from omega_kernel.groebner import saturate
from omega_kernel.invariants import depth_of, ext_annihilator_profile
from omega_kernel.module import cyclic, direct_sum
from omega_kernel.resolution import projective_dimension
from omega_kernel.ring import ring_new

from helpers import random_homogeneous


def test_conditions_free(free_S):
    v = check_equivalence(free_S)
    assert v.e == 0 and v.as_tuple() == (True, True, True, True)


def test_conditions_x2_xy(x2_xy):
    assert check_equivalence(x2_xy).as_tuple() == (True, True, True, True)


def test_conditions_two_planes(two_planes):
    v = check_equivalence(two_planes)
    assert v.e == 3 and v.as_tuple() == (False, False, False, False) and v.agree


def test_conditions_principal(S2):
    x, _ = S2.gens()
    M = cyclic(S2, [x])
    assert condition_hom(M) and condition_tor(M) and condition_h0(M) and condition_depth_omega(M)


def test_zero_module_rejected(S2):
    with pytest.raises(ZeroModuleError):
        evaluate_conditions(cyclic(S2, [S2.one()]))


def test_equivalence_failure_is_internal():
    assert issubclass(EquivalenceFailure, InternalInconsistency)


def test_gap_one_examples(S2, two_planes, xy_xz):
    x, _ = S2.gens()
    z4 = check_gap_one(cyclic(S2, [x**2]), True)
    assert z4.verdict is GapVerdict.GAP_NOT_ONE and z4.gap == 0 and not z4.noteworthy
    planes = check_gap_one(two_planes)
    assert planes.verdict is GapVerdict.REFUTED and planes.gap == 1 and not planes.noteworthy
    assert check_gap_one(two_planes, True).noteworthy
    res = check_gap_one(xy_xz)
    assert res.verdict is GapVerdict.CONFIRMED and res.gap == 1


R3 = ring_new(["x", "y", "z"], [1, 1, 1], 2)


def random_module(rnd):
    def one():
        return cyclic(R3, [random_homogeneous(R3, rnd, rnd.randint(1, 3))
                           for _ in range(rnd.randint(1, 3))], rnd.randint(0, 1))
    return direct_sum(one(), one()) if rnd.random() < 0.3 else one()


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**9))
def test_single_colon_matches_saturation(seed):
    M = random_module(random.Random(seed))
    e = projective_dimension(M)
    I = ext_annihilator_profile(M)[e].annihilator
    rel = M.relations
    sat_nonzero = not rel.contains_module(saturate(rel, I))
    assert condition_h0(M) == sat_nonzero


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**9), st.integers(-2, 3))
def test_verdict_invariant_under_shift(seed, k):
    M = random_module(random.Random(seed))
    assert evaluate_conditions(M.shift(k)) == evaluate_conditions(M)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**9))
def test_depth_zero_forces_condition(seed):
    M = random_module(random.Random(seed))
    v = check_equivalence(M)
    if depth_of(M) == 0:
        assert v.depth_equals_omega
