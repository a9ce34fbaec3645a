"""Admissibility of the variable Hasse derivatives and what follows from it.

For the standard factorization the family D = {d_1, d_2, ...} of Hasse
derivatives in the x-variables is admissible; this module makes the
relevant statements computable: the (D3) decomposition, level through
derivatives, the kernel/image equality on enumerable slices, and the
decomposition of elements of level >= r.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .frobfactor import (
    INF,
    Obstruction,
    f4_decompose,
    is_p_divisible,
    level,
    phi,
    sigma,
    sigma_power,
    sigma_preimage,
    span_coefficients,
)
from .hasse import HasseDerivative, hasse_bracket
from .poly import XPoly, homogeneous_components


@dataclass(frozen=True)
class HasseFamily:
    """The derivatives d_1..d_n in the variables x1..xn."""

    nvars: int

    @property
    def members(self):
        return [HasseDerivative(i) for i in range(1, self.nvars + 1)]

    def check_d1(self, f, order):
        """Each member lowers the degree of homogeneous f by exactly ``order`` (or kills it)."""
        if not f.is_homogeneous():
            raise ValueError("check_d1 needs a homogeneous input")
        d = f.degree()
        for dd in self.members:
            g = dd(order, f)
            if g and (not g.is_homogeneous() or g.degree() != d - order):
                return False
        return True

    def check_d2(self, f, order):
        """Each member commutes with phi on f."""
        return all(dd(order, phi(f)) == phi(dd(order, f)) for dd in self.members)


def _vars_of(f, nvars=None):
    vs = f.variables()
    if nvars is not None:
        vs = sorted(set(vs) | set(range(1, nvars + 1)))
    return vs


@dataclass(frozen=True)
class D3Witness:
    """f == sigma(h) + sum_j eps_j * phi(g_j)."""

    h: XPoly
    g: tuple

    def recompose(self, eps):
        total = sigma(self.h)
        for e, gj in zip(eps, self.g):
            total = total + phi(gj).scalar_mul(e)
        return total


def d3_decompose(f, eps):
    """Split homogeneous f as sigma(h) + sum_j eps_j phi(g_j).

    Terms whose exponents are all divisible by p go to sigma(h); every
    other coefficient has to lie in the k^p-span of eps.  Returns a
    D3Witness or an Obstruction naming the first failing exponent.
    """
    if not f.is_homogeneous():
        raise ValueError("d3_decompose needs a homogeneous polynomial; split it first")
    p = f.field.p
    K = f.field
    divisible = {e: c for e, c in f.terms.items() if is_p_divisible(e, p)}
    rest = XPoly._raw(K, {e: c for e, c in f.terms.items() if e not in divisible})
    g = span_coefficients(rest, eps)
    if isinstance(g, Obstruction):
        return g
    return D3Witness(sigma_preimage(XPoly._raw(K, divisible)), g)


def d3_decompose_graded(f, eps):
    """d3_decompose on each homogeneous component, with the witnesses summed."""
    K = f.field
    eps = list(eps)
    h = XPoly.zero(K)
    g = [XPoly.zero(K) for _ in eps]
    for part in homogeneous_components(f).values():
        w = d3_decompose(part, eps)
        if isinstance(w, Obstruction):
            return w
        h = h + w.h
        g = [gj + wj for gj, wj in zip(g, w.g)]
    return D3Witness(h, tuple(g))


def d3_hypothesis(f, eps, nvars=None):
    """Whether d^[0](f) lies in sum_j eps_j im(phi) for every variable derivative."""
    return not any(
        isinstance(span_coefficients(hasse_bracket(i, 0, f), eps), Obstruction)
        for i in _vars_of(f, nvars)
    )


def sigma_commute_check(var, r, s, f):
    """d^[s](sigma^r f) == sigma^r(d^[s-r] f) if r <= s, else 0."""
    lhs = hasse_bracket(var, s, sigma_power(f, r))
    if r <= s:
        return lhs == sigma_power(hasse_bracket(var, s - r, f), r)
    return not lhs


def level_via_derivations(f):
    """Largest t with d_i^[r](f) == 0 for all variables i and all r < t.

    Once p^t exceeds every exponent all further brackets vanish, so if
    nothing survives up to there the level is infinite.
    """
    p = f.field.p
    vs = f.variables()
    top = f.max_exponent()
    t = 0
    while p ** t <= top:
        if any(hasse_bracket(i, t, f) for i in vs):
            return t
        t += 1
    return INF


def enumerate_polys(field, nvars, max_deg, coeffs):
    """All polynomials with monomials of degree <= max_deg and coefficients from coeffs."""
    monos = []
    for d in range(max_deg + 1):
        for combo in combinations_with_replacement(range(1, nvars + 1), d):
            exps = {}
            for i in combo:
                exps[i] = exps.get(i, 0) + 1
            monos.append(tuple(sorted(exps.items())))
    coeffs = [field(c) for c in coeffs]
    for choice in product(coeffs, repeat=len(monos)):
        yield XPoly._raw(field, {e: c for e, c in zip(monos, choice) if c})


def slice_size(nvars, max_deg, ncoeffs):
    from math import comb

    return ncoeffs ** comb(nvars + max_deg, max_deg)


def kernel_equals_sigma_check(field, nvars, max_deg, coeffs=None, cap=100_000):
    """Exhaustively compare the common kernel of the d_i^[0] with im(sigma).

    Runs over every polynomial with the given support and coefficient
    pool; refuses (ValueError) when there are more than ``cap`` of them.
    """
    if coeffs is None:
        coeffs = list(range(field.p))
    size = slice_size(nvars, max_deg, len(coeffs))
    if size > cap:
        raise ValueError(f"slice has {size} elements, over the cap of {cap}")
    for f in enumerate_polys(field, nvars, max_deg, coeffs):
        in_kernel = not any(hasse_bracket(i, 0, f) for i in range(1, nvars + 1))
        in_image = sigma_preimage(f) is not None
        if in_kernel != in_image:
            return False
    return True


@dataclass(frozen=True)
class LevelDerWitness:
    """f == sigma^(r+1)(c) + sum_j eps_j sigma^r(phi(b_j))."""

    c: XPoly
    b: tuple
    r: int

    def recompose(self, eps):
        total = sigma_power(self.c, self.r + 1)
        for e, bj in zip(eps, self.b):
            total = total + sigma_power(phi(bj), self.r).scalar_mul(e)
        return total


def levelder_decompose(f, eps, r):
    """Decompose f of level >= r whose d^[r]-images lie in sum_j eps_j R^p.

    Raises ValueError when r < 1 or level(f) < r.  Returns an Obstruction
    (reason "hypothesis failed") when some d_i^[r](f) is not in the span.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if level(f) < r:
        raise ValueError(f"level of input is {level(f)}, below r = {r}")
    eps = list(eps)
    for i in f.variables():
        w = f4_decompose(hasse_bracket(i, r, f), eps)
        if isinstance(w, Obstruction):
            return Obstruction(f"hypothesis failed: d_{i}^[{r}](f) not in sum eps_j R^p")
    y = f
    for _ in range(r):
        y = sigma_preimage(y)
    w = d3_decompose_graded(y, eps)
    if isinstance(w, Obstruction):
        raise AssertionError(f"admissibility violated on {y}: {w}")
    return LevelDerWitness(w.h, w.g, r)
