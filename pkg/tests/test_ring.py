import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omega_kernel.ring import (
    FieldElement,
    GradedRing,
    Polynomial,
    Vector,
    element_degree,
    monomial_compare,
    mono_mul,
    ring_new,
)


def test_ring_new():
    R = ring_new(["x", "y"], [1, 1], 2)
    assert R.n == 2 and R.sigma == 2
    assert ring_new(["x", "y", "z"], [1, 1, 4], 2).sigma == 6


@pytest.mark.parametrize("names,weights,p", [
    (["x"], [1], 4),
    (["x"], [1], 1),
    (["x", "x"], [1, 1], 2),
    (["x"], [0], 2),
    (["x"], [-1], 3),
    ([], [], 2),
    (["x"], [1], 2**31 + 11),
])
def test_ring_new_errors(names, weights, p):
    with pytest.raises(ValueError):
        ring_new(names, weights, p)


def test_poly_mul_examples():
    R = ring_new(["x", "y"], [1, 1], 2)
    x, y = R.gens()
    assert (x + y) * (x + y) == x**2 + y**2
    assert (x + y) * R.one() == x + y
    F3 = ring_new(["x"], [1], 3)
    (x,) = F3.gens()
    assert (x + 1) * (x + 2) == x**2 + 2


def test_poly_mul_ring_mismatch():
    a = ring_new(["x"], [1], 2).var(0)
    b = ring_new(["x"], [1], 3).var(0)
    with pytest.raises(ValueError):
        a * b


def test_monomial_compare():
    R = ring_new(["x", "y"], [1, 1], 2)
    assert monomial_compare(R, (2, 1), (1, 2)) == "GT"
    assert monomial_compare(R, (1, 2), (1, 2)) == "EQ"
    W = ring_new(["x", "y"], [1, 4], 2)
    assert monomial_compare(W, (5, 0), (0, 1)) == "GT"
    assert monomial_compare(W, (0, 1), (5, 0)) == "LT"


def test_element_degree():
    R = ring_new(["x", "y"], [1, 1], 2)
    x, y = R.gens()
    assert element_degree(Vector.from_polys(R, [0], [x])) == 1
    assert element_degree(Vector.from_polys(R, [1, 0], [x, y**2])) == 2
    assert element_degree(Vector.from_polys(R, [0, 1], [x, x])) is None
    with pytest.raises(ValueError):
        element_degree(Vector(R, (0,), {}))


def test_exponent_overflow():
    with pytest.raises(OverflowError):
        mono_mul((2**31,), (2**31,))


primes = st.sampled_from([2, 3, 5, 7, 101, 65521, 2147483647])


@given(primes, st.integers(), st.integers(), st.integers())
def test_field_axioms(p, a, b, c):
    a, b, c = (FieldElement(v, p) for v in (a, b, c))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == FieldElement(0, p)
    assert 0 <= a.residue < p


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 97, 101])
def test_field_inverses(p):
    for r in range(1, p):
        a = FieldElement(r, p)
        assert a * a.inverse() == FieldElement(1, p)


exps = st.tuples(*(st.integers(0, 6) for _ in range(3)))
weights = st.tuples(*(st.integers(1, 4) for _ in range(3)))


@given(weights, exps, exps, exps)
def test_order_is_multiplicative(w, m, a, b):
    R = GradedRing(("x", "y", "z"), w, 2)
    if R.compare(a, b) < 0:
        assert R.compare(mono_mul(m, a), mono_mul(m, b)) < 0
    assert R.compare(a, a) == 0
    assert R.compare(a, (0, 0, 0)) >= 0


@given(weights, exps)
def test_descending_division_chain_terminates(w, m):
    R = GradedRing(("x", "y", "z"), w, 2)
    chain = [m]
    while any(chain[-1]):
        cur = list(chain[-1])
        i = max(k for k, a in enumerate(cur) if a)
        cur[i] -= 1
        assert R.compare(tuple(cur), chain[-1]) < 0
        chain.append(tuple(cur))
    assert len(chain) == sum(m) + 1


@settings(max_examples=50)
@given(st.lists(st.tuples(exps, st.integers(0, 4)), max_size=6), st.randoms())
def test_canonical_form_independent_of_order(terms, rnd):
    R = GradedRing(("x", "y", "z"), (1, 2, 3), 5)
    parts = [Polynomial(R, {e: c}) for e, c in terms]
    shuffled = parts[:]
    rnd.shuffle(shuffled)
    a = sum(parts, R.zero())
    b = sum(shuffled, R.zero())
    assert a == b
    assert list(a.terms.items()) == list(b.terms.items())
    assert all(c != 0 for c in a.terms.values())


@settings(max_examples=50)
@given(st.lists(exps, min_size=1, max_size=3), st.lists(exps, min_size=1, max_size=3))
def test_degree_additivity(fa, ga):
    R = GradedRing(("x", "y", "z"), (1, 2, 3), 3)
    f = Polynomial(R, {e: 1 for e in fa})
    g = Polynomial(R, {e: 2 for e in ga})
    if f.is_homogeneous() and g.is_homogeneous():
        assert (f * g).degree() == f.degree() + g.degree()
