"""The standard Frobenius factorization on x-polynomials.

``phi`` raises coefficients to the p-th power and leaves monomials alone;
``sigma`` raises monomials to the p-th power and leaves coefficients
alone.  Their composite (in either order) is the Frobenius f -> f**p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fields import in_kp_span
from .poly import XPoly, mono_scale

INF = math.inf


@dataclass(frozen=True)
class Obstruction:
    """Why a decomposition does not exist.  Always falsy."""

    reason: str
    exponent: tuple | None = None
    inconclusive: bool = False

    def __bool__(self):
        return False

    def __str__(self):
        where = f" at x-exponent {self.exponent}" if self.exponent is not None else ""
        return f"{self.reason}{where}"


def phi(f):
    return XPoly._raw(f.field, {e: c.frobenius() for e, c in f.terms.items()})


def sigma(f):
    p = f.field.p
    return XPoly._raw(f.field, {mono_scale(e, p): c for e, c in f.terms.items()})


def sigma_power(f, r):
    p = f.field.p
    return XPoly._raw(f.field, {mono_scale(e, p ** r): c for e, c in f.terms.items()})


def frobenius(f):
    """f**p by plain ring multiplication."""
    return f ** f.field.p


def is_p_divisible(e, p):
    return all(a % p == 0 for _, a in e)


def sigma_preimage(f):
    """The unique g with sigma(g) == f, or None when some exponent is not divisible by p."""
    p = f.field.p
    terms = {}
    for e, c in f.terms.items():
        if not is_p_divisible(e, p):
            return None
        terms[tuple((i, a // p) for i, a in e)] = c
    return XPoly._raw(f.field, terms)


def level(f):
    """Largest r with f in the image of sigma^r; INF for constants (including 0)."""
    if f.is_constant():
        return INF
    r = 0
    while True:
        f = sigma_preimage(f)
        if f is None:
            return r
        r += 1


@dataclass(frozen=True)
class F4Witness:
    """h_1..h_s with f == sum_j eps_j * h_j**p."""

    h: tuple

    def recompose(self, eps, field):
        total = XPoly.zero(field)
        for e, hj in zip(eps, self.h):
            total = total + frobenius(hj).scalar_mul(e)
        return total


def span_coefficients(f, eps):
    """Write every coefficient of f in the k^p-span of eps.

    Returns ``(g_1..g_s)`` with f == sum_j eps_j * phi(g_j), or an
    Obstruction naming the first exponent whose coefficient is outside
    the span.
    """
    K = f.field
    eps = list(eps)
    parts = [{} for _ in eps]
    for e, c in sorted(f.terms.items()):
        lam = in_kp_span(c, eps)
        if lam is None:
            return Obstruction("coefficient not in the k^p-span of eps", e)
        for j, l in enumerate(lam):
            if l:
                parts[j][e] = l
    return tuple(XPoly._raw(K, t) for t in parts)


def f4_decompose(f, eps):
    """Decide f in im(sigma) intersect sum_j eps_j im(phi) and produce h_j.

    On success f == sum_j eps_j h_j**p.  Otherwise an Obstruction says
    whether an exponent was not divisible by p or a coefficient failed the
    span test.
    """
    p = f.field.p
    for e in sorted(f.terms):
        if not is_p_divisible(e, p):
            return Obstruction("exponent not divisible by p", e)
    g = span_coefficients(f, eps)
    if isinstance(g, Obstruction):
        return g
    return F4Witness(tuple(sigma_preimage(gj) for gj in g))


def pfac2_descend(x, eps):
    """Given sigma(x) in sum_j eps_j im(phi), find y_j with x == sum_j eps_j phi(y_j).

    Returns a tuple of y_j, or None when sigma(x) is not in that span.
    """
    w = f4_decompose(sigma(x), eps)
    if not w:
        return None
    # sigma(x) = sum eps_j h_j^p = sigma(sum eps_j phi(h_j)) and sigma is injective
    y = w.h
    total = XPoly.zero(x.field)
    for e, yj in zip(eps, y):
        total = total + phi(yj).scalar_mul(e)
    if total != x:
        raise AssertionError("descended witness does not recompose")
    return y
