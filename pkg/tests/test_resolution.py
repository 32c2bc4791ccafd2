import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omega_kernel.errors import ZeroModuleError
from omega_kernel.module import PresentedModule, cyclic, direct_sum, free
from omega_kernel.oracles import tensor_homology_dim
from omega_kernel.resolution import (
    GradedResolution,
    betti_table,
    ext_module,
    free_resolution,
    hom_module,
    minimize,
    projective_dimension,
    resolution,
    tor_module,
)
from omega_kernel.ring import GradedRing, Vector, ring_new, vec_add_into, vec_mul_term

from helpers import random_homogeneous


def residue_field(R):
    return cyclic(R, list(R.gens()))


def dims(M, qs):
    return [M.graded_piece_dim(q) for q in qs]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_koszul_ranks(n):
    R = ring_new([f"x{i}" for i in range(n)], [1] * n, 2)
    res = resolution(residue_field(R))
    assert res.ranks == [comb(n, i) for i in range(n + 1)]
    assert all(set(tw) == {i} for i, tw in enumerate(res.twists))
    assert not res.has_unit_entry()


def test_weighted_koszul_twists():
    R = ring_new(["x", "y"], [1, 3], 5)
    res = resolution(residue_field(R))
    assert sorted(res.twists[1]) == [1, 3]
    assert res.twists[2] == (4,)


def test_resolution_examples(S2, x2_xy, two_planes):
    assert resolution(free(S2, [0])).ranks == [1]
    assert betti_table(x2_xy) == {(0, 0): 1, (1, 2): 2, (2, 3): 1}
    assert resolution(two_planes).ranks == [1, 4, 4, 1]
    assert projective_dimension(two_planes) == 3
    with pytest.raises(ZeroModuleError):
        projective_dimension(cyclic(S2, [S2.one()]))


def _apply(cols, v, p):
    out = {}
    for (c, e), a in v.items():
        vec_add_into(out, vec_mul_term(cols[c], a, e, p), 1, p)
    return out


def assert_complex(R: GradedResolution):
    p = R.ring.p
    for i in range(1, R.length):
        for col in R.maps[i]:
            assert not _apply(R.maps[i - 1], col, p)


def test_minimize_non_minimal_complex():
    S = ring_new(["x", "y"], [1, 1], 3)
    z = (0, 0)
    x, y, xy, x2, x2y = (1, 0), (0, 1), (1, 1), (2, 0), (2, 1)
    # d2 columns: (y, -x, 0), (y, 0, -1), (0, x, -1); d3 = (1, -1, 1)
    d1 = ({(0, x2): 1}, {(0, xy): 1}, {(0, x2y): 1})
    d2 = ({(0, y): 1, (1, x): 2}, {(0, y): 1, (2, z): 2}, {(1, x): 1, (2, z): 2})
    d3 = ({(0, z): 1, (1, z): 2, (2, z): 1},)
    big = GradedResolution(S, ((0,), (2, 2, 3), (3, 3, 3), (3,)), (d1, d2, d3))
    assert_complex(big)
    small = minimize(big)
    assert small.ranks == [1, 2, 1]
    assert small.twists == ((0,), (2, 2), (3,))
    assert not small.has_unit_entry()
    assert_complex(small)


def test_minimize_padded_identity():
    S = ring_new(["x", "y"], [1, 1], 2)
    base = resolution(cyclic(S, [S.var("x")]))
    z = S.zero_exp
    padded = GradedResolution(S, ((0, 1), (1, 1)),
                              (({(0, (1, 0)): 1}, {(1, z): 1}),))
    assert_complex(padded)
    assert minimize(padded).twists == base.twists


R3 = GradedRing(("x", "y", "z"), (1, 1, 2), 3)
seeds = st.integers(0, 10**9)


def random_module(rnd, R=R3):
    if rnd.random() < 0.7:
        polys = [random_homogeneous(R, rnd, rnd.randint(1, 3)) for _ in range(rnd.randint(1, 3))]
        return cyclic(R, polys, rnd.randint(0, 1))
    tw = (0, rnd.randint(0, 1))
    rels = []
    for _ in range(rnd.randint(1, 3)):
        d = rnd.randint(2, 3)
        polys = [random_homogeneous(R, rnd, d - t, 2) if d - t > 0 else R.const(1) for t in tw]
        rels.append(Vector.from_polys(R, tw, polys).terms)
    return PresentedModule.from_relations(R, tw, rels)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_resolution_is_minimal_and_exact(seed):
    rnd = random.Random(seed)
    M = random_module(rnd)
    if M.is_zero():
        return
    res = free_resolution(M)
    assert not res.has_unit_entry()
    assert_complex(res)
    S = free(M.ring, [0])
    top = max(max(t) for t in res.twists if t) + 1
    for q in range(0, top + 1):
        assert tensor_homology_dim(res, S, 0, q) == M.graded_piece_dim(q)
        for j in range(1, res.length + 1):
            assert tensor_homology_dim(res, S, j, q) == 0


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(-2, 3))
def test_shift_moves_betti_numbers(seed, k):
    rnd = random.Random(seed)
    M = random_module(rnd)
    if M.is_zero():
        return
    assert betti_table(M.shift(k)) == {(i, j + k): b for (i, j), b in betti_table(M).items()}


def test_ext_examples(S2):
    x, y = S2.gens()
    M = cyclic(S2, [x])
    assert ext_module(M, 0).rank == 0 or ext_module(M, 0).is_zero()
    e1 = ext_module(M, 1)
    # Ext^1(S/(x), S) = S/(x)(1)
    assert dims(e1, range(-2, 4)) == [0, 1, 1, 1, 1, 1]
    k = residue_field(S2)
    assert ext_module(k, 1).is_zero() or ext_module(k, 1).rank == 0
    e2 = ext_module(k, 2)
    assert dims(e2, range(-3, 1)) == [0, 1, 0, 0]
    assert ext_module(free(S2, [1]), 0).twists == (-1,)


def test_tor_examples(S2):
    x, y = S2.gens()
    A, B = cyclic(S2, [x]), cyclic(S2, [y])
    t0 = tor_module(A, B, 0)
    assert dims(t0, range(0, 3)) == [1, 0, 0]
    assert tor_module(A, B, 1).rank == 0 or tor_module(A, B, 1).is_zero()
    t1 = tor_module(A, A, 1)
    assert dims(t1, range(0, 4)) == [0, 1, 1, 1]


def test_tor_with_residue_field_gives_betti(x2_xy, two_planes):
    for M in (x2_xy, two_planes):
        k = residue_field(M.ring)
        for (i, j), b in betti_table(M).items():
            assert tor_module(M, k, i).graded_piece_dim(j) == b


def test_hom_examples(S2):
    x, y = S2.gens()
    assert hom_module(cyclic(S2, [x]), free(S2, [0])).rank == 0 or \
        hom_module(cyclic(S2, [x]), free(S2, [0])).is_zero()
    M = cyclic(S2, [x**2, x * y])
    H = hom_module(free(S2, [0]), M)
    assert dims(H, range(0, 5)) == dims(M, range(0, 5))
    k = residue_field(S2)
    assert dims(hom_module(k, M), range(-1, 3)) == [0, 0, 1, 0]
    assert dims(hom_module(k, cyclic(S2, [x])), range(-1, 3)) == [0, 0, 0, 0]


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_socle_matches_top_tor(seed):
    rnd = random.Random(seed)
    M = random_module(rnd)
    if M.is_zero():
        return
    R = M.ring
    k = residue_field(R)
    n, sigma = R.n, R.sigma
    soc = hom_module(k, M)
    top = tor_module(M, k, n)
    for q in range(-2, 8):
        assert soc.graded_piece_dim(q) == top.graded_piece_dim(q + sigma)


def test_direct_sum_adds_betti(x2_xy, S2):
    k = residue_field(S2)
    a, b = betti_table(x2_xy), betti_table(k)
    expect = dict(a)
    for key, v in b.items():
        expect[key] = expect.get(key, 0) + v
    assert betti_table(direct_sum(x2_xy, k)) == expect
