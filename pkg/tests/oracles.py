"""Brute-force oracles shared by the unit tests and the acceptance suite."""

from itertools import product

from frobpoly.admissible import enumerate_polys
from frobpoly.fields import RationalFunctionField
from frobpoly.frobfactor import frobenius, phi, sigma
from frobpoly.poly import XPoly


def f4_slice():
    """p = 2, one x-variable, coefficients in {0, 1, t, t+1, t^2}, exponents <= 4."""
    K = RationalFunctionField(2, 1)
    pool = [K(s) for s in ("0", "1", "t", "t+1", "t^2")]
    x = XPoly.var(K, 1)
    powers = [x ** k for k in range(5)]
    polys = []
    for coeffs in product(pool, repeat=5):
        f = XPoly.zero(K)
        for c, m in zip(coeffs, powers):
            if c:
                f = f + m.scalar_mul(c)
        polys.append(f)
    return K, polys


def brute_force_f4_set(K, eps):
    """All sum_j eps_j h_j^2 with h_j of x-degree <= 2 and coefficients in {0,1,t,t+1}.

    Slice coefficients have t-degree <= 2.  With eps among {1, t} the square
    roots needed have t-degree <= 1, so this witness pool is enough.
    """
    pool = [K(s) for s in ("0", "1", "t", "t+1")]
    x = XPoly.var(K, 1)
    hs = []
    for coeffs in product(pool, repeat=3):
        h = XPoly.zero(K)
        for k, c in enumerate(coeffs):
            if c:
                h = h + (x ** k).scalar_mul(c)
        hs.append(h)
    out = set()
    for choice in product(hs, repeat=len(eps)):
        f = XPoly.zero(K)
        for e, h in zip(eps, choice):
            f = f + frobenius(h).scalar_mul(e)
        out.add(f)
    return out


def d3_slice():
    """p = 2, two x-variables, homogeneous of degree 2, coefficients in {0, 1, t, t+1}."""
    K = RationalFunctionField(2, 1)
    polys = [f for f in enumerate_polys(K, 2, 2, ["0", "1", "t", "t+1"])
             if f.is_homogeneous() and f.degree() == 2]
    return K, polys


def brute_force_d3_set(K, eps):
    """sigma(h) + sum_j eps_j phi(g_j) with h of degree 1, g_j of degree 2.

    Slice coefficients have t-degree <= 1.  With eps among {1, t} the needed
    lambda are 0 or 1, and h takes slice coefficients, so these pools are enough.
    """
    def homogeneous(d, pool):
        return [f for f in enumerate_polys(K, 2, d, pool) if not f or (f.degree() == d and f.is_homogeneous())]

    out = set()
    for h in homogeneous(1, ["0", "1", "t", "t+1"]):
        for gs in product(homogeneous(2, ["0", "1"]), repeat=len(eps)):
            total = sigma(h)
            for e, g in zip(eps, gs):
                total = total + phi(g).scalar_mul(e)
            out.add(total)
    return out
