"""Random generators and combinatorial monomial-ideal oracles shared by the tests."""

from itertools import product

from omega_kernel.groebner import monomials_of_degree
from omega_kernel.ring import Polynomial


def random_homogeneous(R, rnd, d, max_terms=3):
    mons = monomials_of_degree(R, d)
    picks = rnd.sample(mons, min(len(mons), rnd.randint(1, max_terms)))
    return Polynomial(R, {e: rnd.randint(1, R.p - 1) for e in picks})


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return sorted(out)


def mono_colon(I, m):
    return minimalize(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in I)


def mono_intersection(I, J):
    return minimalize(tuple(max(a, b) for a, b in zip(g, h)) for g, h in product(I, J))


def mono_colon_ideal(I, J):
    out = None
    for m in J:
        c = mono_colon(I, m)
        out = c if out is None else mono_intersection(out, c)
    return out


def exps_of(I):
    """Minimal monomial generators of a monomial Submodule (rank 1) read off its reduced basis."""
    out = []
    for g in I.groebner:
        assert len(g) == 1, "not a monomial ideal"
        ((_, e),) = g.keys()
        out.append(e)
    return sorted(out)
