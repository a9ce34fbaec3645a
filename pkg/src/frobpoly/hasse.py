"""Hasse derivatives with respect to single x-variables.

The n-th Hasse derivative in x_i sends x_i^k to C(k, n) x_i^(k-n) and is
linear over the remaining variables and over the coefficient field.
Binomials mod p come from Lucas' theorem.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import XPoly


def binom_mod_p(k, n, p):
    """C(k, n) mod p as a product of digitwise binomials in base p."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if n > k:
        return 0
    result = 1
    while n:
        kd, nd = k % p, n % p
        if nd > kd:
            return 0
        # small digits: exact integer binomial is cheap
        result = result * _small_binom(kd, nd) % p
        k //= p
        n //= p
    return result


def _small_binom(k, n):
    out = 1
    for j in range(n):
        out = out * (k - j) // (j + 1)
    return out


def hasse_derive(var, n, f):
    """The n-th Hasse derivative of f with respect to x_var."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        return f
    p = f.field.p
    out = {}
    for e, c in f.terms.items():
        exps = dict(e)
        k = exps.get(var, 0)
        if k < n:
            continue
        b = binom_mod_p(k, n, p)
        if not b:
            continue
        if k == n:
            del exps[var]
        else:
            exps[var] = k - n
        mono = tuple(sorted(exps.items()))
        # distinct monomials stay distinct after the shift
        out[mono] = c * b if b != 1 else c
    return XPoly._raw(f.field, out)


def hasse_bracket(var, r, f):
    """The p^r-th Hasse derivative."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return hasse_derive(var, f.field.p ** r, f)


@dataclass(frozen=True)
class HasseDerivative:
    """Hasse derivation {d^n} in the variable x_var; homogeneous of degree -1."""

    var: int

    def __call__(self, n, f):
        return hasse_derive(self.var, n, f)

    def bracket(self, r, f):
        return hasse_bracket(self.var, r, f)

    degree = -1


def power_rule_expansion(n, k):
    """Formal expansion of d^k(X^n) as a polynomial in X and D_1..D_k.

    Built by the recursion d^k(X^n) = sum_{i+j=k} d^i(X^(n-1)) d^j(X) with
    d^0(X) = X and d^j(X) = D_j.  Returns ``{(deg_X, (a_1..a_k)): int}``
    with integer coefficients (no reduction mod p).
    """
    if n < 1:
        raise ValueError("n must be positive")
    kk = max(k, 1)
    memo = {}

    def expand(n, k):
        if (n, k) in memo:
            return memo[n, k]
        if k == 0:
            res = {(n, (0,) * kk): 1}
        elif n == 1:
            d = [0] * kk
            d[k - 1] = 1
            res = {(0, tuple(d)): 1}
        else:
            res = {}
            for i in range(k + 1):
                j = k - i
                for (dx, ds), c in expand(n - 1, i).items():
                    if j == 0:
                        key = (dx + 1, ds)
                    else:
                        d = list(ds)
                        d[j - 1] += 1
                        key = (dx, tuple(d))
                    res[key] = res.get(key, 0) + c
            res = {key: c for key, c in res.items() if c}
        memo[n, k] = res
        return res

    return expand(n, k)


def evaluate_expansion(expansion, x, derivs, p):
    """Substitute X = x and D_j = derivs[j-1] into a power-rule expansion."""
    total = XPoly.zero(x.field)
    for (dx, ds), c in expansion.items():
        if c % p == 0:
            continue
        term = x ** dx
        for d, a in zip(derivs, ds):
            if a:
                term = term * d ** a
        total = total + term.scalar_mul(c % p)
    return total
