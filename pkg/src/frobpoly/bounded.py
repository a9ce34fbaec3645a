"""Bounded-coefficient subrings and the uniform-denominator conditions.

A is a subring of K = F_p(t1..tn) with fraction field K.  Two concrete
choices are supported: the polynomial ring F_p[t_i] and the cusp ring
F_p[t_i^2, t_i^3] (polynomials in which no variable appears to the first
power).  For these we decide whether  b^p * a  lies in  sum_j eps_j A^p,
verify the cusp counterexample, and restrict the (D3) decomposition to
elements with bounded coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .fields import in_kp_span, kp_independent, ppow_decompose
from .frobfactor import Obstruction, is_p_divisible, phi, sigma
from .linalg import kernel_basis
from .poly import XPoly

POLY_RING = "poly"
CUSP_RING = "cusp"


@dataclass(frozen=True)
class BoundedSubring:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in (POLY_RING, CUSP_RING):
            raise ValueError(f"unknown subring kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("need at least one t-variable")

    def __contains__(self, a):
        return subring_member(self, a)


def subring_member(A, a):
    if not a.is_polynomial():
        return False
    if any(v > A.n for v in a.variables()):
        return False
    if A.kind == CUSP_RING:
        return all(x != 1 for e in a.num for x in e)
    return True


def _search_space(field, n, max_deg):
    """Polynomials in t1..tn of total degree <= max_deg, as raw term dicts."""
    monos = [e for e in product(range(max_deg + 1), repeat=field.m)
             if sum(e) <= max_deg and all(x == 0 for x in e[n:])]
    for coeffs in product(range(field.p), repeat=len(monos)):
        yield {e: c for e, c in zip(monos, coeffs) if c}


def c_membership(A, eps, a, b, cap=4096, search_degree=2):
    """Decide whether b^p * a lies in sum_j eps_j A^p.

    Returns the tuple (lambda_1..lambda_s) of A-members with
    b^p * a == sum_j eps_j lambda_j^p, or an Obstruction.  When eps is
    dependent over K^p the solutions form an affine family and only a
    bounded search through it is made; failure there is reported as an
    inconclusive Obstruction.
    """
    if not b:
        raise ValueError("b must be nonzero")
    eps = list(eps)
    K = a.field
    target = b.frobenius() * a
    lam = in_kp_span(target, eps)
    if lam is None:
        return Obstruction("b^p a is not in sum eps_j K^p")
    if all(subring_member(A, x) for x in lam):
        return lam
    independent, _ = kp_independent(eps)
    if independent:
        return Obstruction("the unique solution has coefficients outside A")
    # affine family lam + kernel; search small polynomial multipliers
    decs = [ppow_decompose(e) for e in eps]
    keys = sorted({k for d in decs for k in d.entries})
    matrix = [[d[k] for d in decs] for k in keys]
    kernel = kernel_basis(matrix, len(eps), K.zero, K.one)
    common = K.one
    for x in lam:
        den = x.denominator()
        common = common * K(den) / K(den.gcd(common.numerator()))
    tried = 0
    candidates = list(_search_space(K, A.n, search_degree))
    for mus in product(candidates, repeat=len(kernel)):
        tried += 1
        if tried > cap:
            break
        sol = list(lam)
        for mu, v in zip(mus, kernel):
            if mu:
                scal = K(mu) / common
                sol = [s + scal * x for s, x in zip(sol, v)]
        if all(subring_member(A, x) for x in sol):
            return tuple(sol)
    return Obstruction("no A-valued solution found within the search cap", inconclusive=True)


def cusp_counterexample_check(n, b):
    """Check that t_{n+1}^p is not in b^{-p} A^p for the cusp ring A.

    b must be a nonzero cusp-ring element in t1..tn, living in a field with
    at least n+1 variables.
    """
    K = b.field
    if K.m < n + 1:
        raise ValueError(f"field needs at least {n + 1} t-variables")
    if not b or any(v > n for v in b.variables()):
        raise ValueError(f"b must be nonzero and use only t1..t{n}")
    A = BoundedSubring(CUSP_RING, n + 1)
    if not subring_member(A, b):
        raise ValueError("b is not in the cusp ring")
    s = K.gen(n + 1).frobenius()
    res = c_membership(A, [K.one], s, b)
    return isinstance(res, Obstruction) and not res.inconclusive


def ladder_base(eps):
    """Product of the distinct numerators and denominators of the nonzero eps."""
    if not eps:
        raise ValueError("empty eps")
    K = eps[0].field
    out = K.one
    seen = set()
    for e in eps:
        if not e:
            continue
        for part in (e.numerator(), e.denominator()):
            part = K(part)
            if not part.is_constant() and part not in seen:
                seen.add(part)
                out = out * part
    return out


def find_c_bound(A, eps, samples, max_power=6):
    """Smallest k such that b = delta^k works for every sample, as (b, k); None if k > max_power."""
    delta = ladder_base(eps) if eps else None
    K = samples[0].field if samples else None
    for k in range(max_power + 1):
        b = delta ** k if delta is not None else K.one
        if all(not isinstance(c_membership(A, eps, s, b), Obstruction) for s in samples):
            return b, k
    return None


@dataclass(frozen=True)
class FlatElement:
    """An x-polynomial with a certificate that bound * (every coefficient) lies in A."""

    poly: XPoly
    bound: object
    ring: BoundedSubring

    def __post_init__(self):
        if not self.bound:
            raise ValueError("bound must be nonzero")
        if not self.is_certified():
            raise ValueError("bound does not certify the coefficients")

    def is_certified(self):
        return all(subring_member(self.ring, self.bound * c) for _, c in self.poly)


@dataclass(frozen=True)
class FlatD3Witness:
    """f == sigma(h) + sum_j eps_j phi(g_j) with h, g_j bounded."""

    h: FlatElement
    g: tuple

    def recompose(self, eps):
        total = sigma(self.h.poly)
        for e, gj in zip(eps, self.g):
            total = total + phi(gj.poly).scalar_mul(e)
        return total


def d3_flat_decompose(f, eps, b):
    """(D3) inside the bounded subring using a uniform denominator b.

    Coefficients at exponents divisible by p go to h unchanged; every other
    coefficient c_e is written as sum_j eps_j (d_{j,e}/b)^p with d in A.
    Returns a FlatD3Witness or an Obstruction naming the offending
    exponent.
    """
    A = f.ring
    K = f.poly.field
    p = K.p
    b = K(b)
    eps = list(eps)
    h_terms = {}
    g_terms = [{} for _ in eps]
    binv = b.inverse()
    for e, c in sorted(f.poly.terms.items()):
        if is_p_divisible(e, p):
            h_terms[tuple((i, a // p) for i, a in e)] = c
            continue
        res = c_membership(A, eps, c, b)
        if isinstance(res, Obstruction):
            return Obstruction(res.reason, e, res.inconclusive)
        for j, d in enumerate(res):
            if d:
                g_terms[j][e] = d * binv
    h = FlatElement(XPoly._raw(K, h_terms), f.bound, A)
    g = tuple(FlatElement(XPoly._raw(K, t), b, A) for t in g_terms)
    return FlatD3Witness(h, g)


def root_has_non_a_coefficients(A, g):
    """For g in R^p, return (root, [coefficients of the root outside A]) or None if g is not a p-th power."""
    K = g.field
    p = K.p
    terms = {}
    for e, c in g.terms.items():
        r = c.pth_root()
        if r is None or not is_p_divisible(e, p):
            return None
        terms[tuple((i, a // p) for i, a in e)] = r
    root = XPoly._raw(K, terms)
    return root, [c for _, c in sorted(root.terms.items()) if not subring_member(A, c)]

