"""Seeded random generators for property checks and the acceptance suite.

Every function takes a ``random.Random`` instance so runs are reproducible.
"""

from __future__ import annotations

from itertools import product

from .bounded import BoundedSubring, CUSP_RING
from .fields import RationalFunctionField
from .hahn import GammaExp, HahnElement
from .poly import XPoly


def random_tpoly_terms(rng, p, m, max_deg, nterms=None, nvars=None):
    """Raw term dict of a random polynomial in t1..t_nvars (default all m) of total degree <= max_deg."""
    nvars = m if nvars is None else nvars
    monos = [e for e in product(range(max_deg + 1), repeat=nvars) if sum(e) <= max_deg]
    if nterms is None:
        nterms = rng.randint(1, min(4, len(monos)))
    out = {}
    for e in rng.sample(monos, min(nterms, len(monos))):
        out[e + (0,) * (m - nvars)] = rng.randrange(1, p)
    return out


def random_ratfunc(rng, field, max_deg=4, allow_zero=True):
    """Random quotient of polynomials of degree <= max_deg."""
    if allow_zero and rng.random() < 0.05:
        return field.zero
    num = random_tpoly_terms(rng, field.p, field.m, max_deg)
    den = random_tpoly_terms(rng, field.p, field.m, max_deg)
    return field.fraction(num, den)


def random_tpoly(rng, field, max_deg=3, nvars=None):
    """Random nonzero polynomial element of the field."""
    return field.fraction(random_tpoly_terms(rng, field.p, field.m, max_deg, nvars=nvars), {(0,) * field.m: 1})


def random_coefficient(rng, field, max_deg=2, polynomial_bias=0.6):
    if rng.random() < polynomial_bias:
        return random_tpoly(rng, field, max_deg)
    return random_ratfunc(rng, field, max_deg, allow_zero=False)


def random_exponent(rng, nvars, max_deg):
    d = rng.randint(0, max_deg)
    exps = {}
    for _ in range(d):
        i = rng.randint(1, nvars)
        exps[i] = exps.get(i, 0) + 1
    return tuple(sorted(exps.items()))


def random_xpoly(rng, field, nvars=2, max_deg=4, nterms=None, coeff_deg=2):
    if nterms is None:
        nterms = rng.randint(0, 4)
    terms = {}
    for _ in range(nterms):
        terms[random_exponent(rng, nvars, max_deg)] = random_coefficient(rng, field, coeff_deg)
    return XPoly(field, terms)


def random_homogeneous(rng, field, degree, nvars=2, nterms=None, coeff_deg=2):
    if nterms is None:
        nterms = rng.randint(1, 3)
    terms = {}
    for _ in range(nterms):
        exps = {}
        for _ in range(degree):
            i = rng.randint(1, nvars)
            exps[i] = exps.get(i, 0) + 1
        terms[tuple(sorted(exps.items()))] = random_coefficient(rng, field, coeff_deg)
    return XPoly(field, terms)


def random_cusp_member(rng, field, n, max_deg=6):
    """Nonzero element of F_p[t_i^2, t_i^3] in t1..tn."""
    p = field.p
    while True:
        terms = {}
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.choice([0] + list(range(2, max_deg + 1))) for _ in range(n))
            terms[e + (0,) * (field.m - n)] = rng.randrange(1, p)
        b = field.fraction(terms, {(0,) * field.m: 1})
        if b and b in BoundedSubring(CUSP_RING, n):
            return b


def random_delta_exponent(rng, max_index, top=None, low=-4, high=4):
    """Random element of Delta, optionally with a prescribed top index."""
    top = rng.randint(1, max_index) if top is None else top
    vals = {i: rng.randint(low, high) for i in range(1, top) if rng.random() < 0.5}
    vals[top] = rng.randint(2, 5)
    return GammaExp(vals)


def random_a_element(rng, p, max_index, nterms=None, max_top=None):
    """Random nonzero element of A (support in Delta), top indices <= max_top."""
    max_top = max_index if max_top is None else max_top
    if nterms is None:
        nterms = rng.randint(1, 4)
    while True:
        terms = {}
        for _ in range(nterms):
            terms[random_delta_exponent(rng, max_top)] = rng.randrange(1, p)
        f = HahnElement(p, terms)
        if f:
            return f


def small_field(rng, primes=(2, 3, 5), max_m=2):
    return RationalFunctionField(rng.choice(primes), rng.randint(1, max_m))
