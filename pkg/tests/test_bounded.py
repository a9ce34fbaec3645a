import random

import pytest
from hypothesis import given, settings, strategies as st

from frobpoly.bounded import (
    CUSP_RING,
    POLY_RING,
    BoundedSubring,
    FlatD3Witness,
    FlatElement,
    c_membership,
    cusp_counterexample_check,
    d3_flat_decompose,
    find_c_bound,
    ladder_base,
    root_has_non_a_coefficients,
    subring_member,
)
from frobpoly.fields import RationalFunctionField, kp_independent, kp_recompose
from frobpoly.frobfactor import Obstruction, frobenius
from frobpoly.parsing import parse_xpoly
from frobpoly.poly import XPoly
from frobpoly.samplers import random_coefficient, random_cusp_member, random_ratfunc, random_tpoly


@pytest.fixture
def K():
    return RationalFunctionField(2, 3)


def test_membership_examples(K):
    cusp = BoundedSubring(CUSP_RING, 2)
    assert subring_member(cusp, K("t1^2*t2^3"))
    assert not subring_member(cusp, K("t1"))
    assert not subring_member(BoundedSubring(POLY_RING, 1), K("1/t1"))
    assert K("t1^3+t1^2") in BoundedSubring(CUSP_RING, 1)
    assert K("t2^2") not in BoundedSubring(POLY_RING, 1)


def test_subring_validation():
    with pytest.raises(ValueError):
        BoundedSubring("other", 1)
    with pytest.raises(ValueError):
        BoundedSubring(POLY_RING, 0)


def test_c_membership_examples(K):
    A = BoundedSubring(POLY_RING, 1)
    t1 = K.gen(1)
    lam = c_membership(A, [1 / t1], t1, t1)
    assert lam == (t1 ** 2,)
    assert t1 ** 2 * t1 == kp_recompose([1 / t1], lam)
    assert c_membership(A, [K.one], t1 ** 2, K.one) == (t1,)
    neg = c_membership(A, [K.one], t1, K.one)
    assert isinstance(neg, Obstruction) and not neg.inconclusive


def test_c_membership_rejects_zero_bound(K):
    with pytest.raises(ValueError):
        c_membership(BoundedSubring(POLY_RING, 1), [K.one], K.one, K.zero)


def test_c_membership_unique_solution_outside_a(K):
    A = BoundedSubring(CUSP_RING, 1)
    neg = c_membership(A, [K.one], K("t1^2"), K.one)
    assert isinstance(neg, Obstruction) and "outside A" in neg.reason


def test_c_membership_dependent_eps_search(K):
    A = BoundedSubring(POLY_RING, 1)
    t1 = K.gen(1)
    # [t1, t1^3] is dependent; the particular solution may carry 1/t1 terms
    lam = c_membership(A, [t1, t1 ** 3], t1 ** 3, K.one)
    assert not isinstance(lam, Obstruction)
    assert all(subring_member(A, x) for x in lam)
    assert kp_recompose([t1, t1 ** 3], lam) == t1 ** 3


def test_cusp_counterexample_examples(K):
    assert cusp_counterexample_check(1, K("t1^2"))
    assert cusp_counterexample_check(1, K("t1^3+t1^2"))
    assert cusp_counterexample_check(2, K("t1^2*t2^3"))


def test_cusp_counterexample_guards(K):
    with pytest.raises(ValueError):
        cusp_counterexample_check(1, K("t2^2"))
    with pytest.raises(ValueError):
        cusp_counterexample_check(1, K("t1"))
    with pytest.raises(ValueError):
        cusp_counterexample_check(3, K("t1^2"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cusp_counterexample_random(n):
    rng = random.Random(n)
    K = RationalFunctionField(rng.choice([2, 3]), n + 1)
    for _ in range(20):
        assert cusp_counterexample_check(n, random_cusp_member(rng, K, n))


def test_d3_flat_examples():
    K = RationalFunctionField(2, 2)
    A1 = BoundedSubring(POLY_RING, 1)
    f = FlatElement(parse_xpoly(K, 2, "t1^2*x1 + x2^2"), K.one, A1)
    w = d3_flat_decompose(f, [K.one], K.one)
    assert isinstance(w, FlatD3Witness)
    assert w.h.poly == parse_xpoly(K, 2, "x2")
    assert [g.poly for g in w.g] == [parse_xpoly(K, 2, "t1*x1")]
    assert w.recompose([K.one]) == f.poly
    w = d3_flat_decompose(FlatElement(parse_xpoly(K, 2, "x1^2"), K.one, A1), [], K.one)
    assert w.h.poly == parse_xpoly(K, 2, "x1") and w.g == ()
    A2 = BoundedSubring(CUSP_RING, 2)
    neg = d3_flat_decompose(FlatElement(parse_xpoly(K, 2, "t1^2*x1"), K.one, A2), [K.one], K.one)
    assert isinstance(neg, Obstruction) and neg.exponent == ((1, 1),)


def test_flat_element_certificate_checked():
    K = RationalFunctionField(2, 1)
    A = BoundedSubring(POLY_RING, 1)
    f = parse_xpoly(K, 1, "(1/t1)*x1")
    with pytest.raises(ValueError):
        FlatElement(f, K.one, A)
    assert FlatElement(f, K.gen(1), A).is_certified()


def test_ladder_base(K):
    assert ladder_base([K("t1^2")]) == K("t1^2")
    assert ladder_base([K("1/t1"), K("t1")]) == K("t1")
    assert ladder_base([K("(t1+1)/t2")]) == K("(t1+1)*t2")


def test_flat_root_has_non_a_coefficients():
    K = RationalFunctionField(2, 3)
    A = BoundedSubring(CUSP_RING, 3)
    g = parse_xpoly(K, 2, "t1^2*x1^2 + t2^2*x2^2")
    root, bad = root_has_non_a_coefficients(A, g)
    assert root == parse_xpoly(K, 2, "t1*x1 + t2*x2")
    assert sorted(map(str, bad)) == ["t1", "t2"]
    assert root_has_non_a_coefficients(A, parse_xpoly(K, 2, "x1")) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_poly_ring_constructed_members_recovered(seed):
    rng = random.Random(seed)
    K = RationalFunctionField(rng.choice([2, 3]), 2)
    A = BoundedSubring(POLY_RING, 2)
    eps = [random_coefficient(rng, K, 2) for _ in range(rng.randint(1, 2))]
    if not kp_independent(eps)[0]:
        return
    lams = [random_tpoly(rng, K, 2) for _ in eps]
    b = random_tpoly(rng, K, 2)
    a = kp_recompose(eps, lams) / b.frobenius()
    found = c_membership(A, eps, a, b)
    assert not isinstance(found, Obstruction)
    assert all(subring_member(A, x) for x in found)
    assert kp_recompose(eps, found) == b.frobenius() * a


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_flat_witnesses_recompose(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3])
    K = RationalFunctionField(p, 2)
    A = BoundedSubring(POLY_RING, 2)
    eps = [random_coefficient(rng, K, 1) for _ in range(rng.randint(1, 2))]
    b = ladder_base(eps)
    f = XPoly.zero(K)
    for e in eps:
        lam = random_tpoly(rng, K, 2)
        x = XPoly.var(K, rng.randint(1, 2))
        f = f + (x ** rng.randint(1, 3)).scalar_mul(e * (lam / b).frobenius())
    f = f + frobenius(XPoly.var(K, 1)).scalar_mul(random_tpoly(rng, K, 2))
    bound = K.one
    for _, c in f:
        bound = bound * c.denominator()
    flat = FlatElement(f, K(bound), A)
    w = d3_flat_decompose(flat, eps, b)
    assert isinstance(w, FlatD3Witness)
    assert w.recompose(eps) == f
    assert w.h.is_certified() and all(g.is_certified() for g in w.g)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_candidate_ladder_finds_bound(seed):
    rng = random.Random(seed)
    p, m = rng.choice([2, 3]), rng.randint(1, 2)
    K = RationalFunctionField(p, m)
    A = BoundedSubring(POLY_RING, m)
    eps = [random_coefficient(rng, K, 2) for _ in range(rng.randint(1, 3))]
    samples = []
    for _ in range(3):
        a = kp_recompose(eps, [random_ratfunc(rng, K, 2) for _ in eps])
        samples.append(a * K(a.denominator()).frobenius())
    found = find_c_bound(A, eps, samples)
    assert found is not None
    b, _ = found
    for s in samples:
        assert not isinstance(c_membership(A, eps, s, b), Obstruction)
