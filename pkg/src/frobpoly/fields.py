"""Rational function fields k = F_p(t1, ..., tm).

Elements are reduced fractions num/den of sparse polynomials with the
denominator monic for the lex order, so two elements are equal exactly
when their stored representations are.

Besides field arithmetic this module holds the semilinear machinery over
k^p: every a in k is uniquely a sum  sum_e c_e^p * t^e  over residue
vectors e in [0, p)^m, and membership of a in  sum_j eps_j * k^p  becomes
an ordinary linear system over k in the coefficients c.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from . import tpoly as tp
from .linalg import rank_profile, solve
from .tpoly import TPoly, check_prime


class RationalFunctionField:
    """The field F_p(t1..tm); ``m = 0`` gives F_p itself."""

    def __init__(self, p, m):
        self.p = check_prime(p)
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"number of t-variables must be >= 0, got {m!r}")
        self.m = m
        self._one = {(0,) * m: 1}
        self.zero = RatFunc._raw(self, {}, self._one)
        self.one = RatFunc._raw(self, self._one, self._one)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        return hash((self.p, self.m))

    def __repr__(self):
        return f"RationalFunctionField(p={self.p}, m={self.m})"

    def gen(self, i):
        """The transcendental t_i, 1-based."""
        return self(TPoly.gen(self.p, self.m, i))

    def gens(self):
        return [self.gen(i) for i in range(1, self.m + 1)]

    def __call__(self, x, den=None):
        if isinstance(x, str):
            if den is not None:
                raise TypeError("den not allowed with a string")
            from .parsing import parse_field_element
            return parse_field_element(self, x)
        if den is None:
            if isinstance(x, RatFunc):
                if x.field != self:
                    raise ValueError("element of a different field")
                return x
            return RatFunc._raw(self, self._poly(x), self._one)
        num = self._poly(x)
        return self.fraction(num, self._poly(den))

    def _poly(self, x):
        if isinstance(x, RatFunc):
            if x.field != self:
                raise ValueError("element of a different field")
            if x.den != self._one:
                raise ValueError("expected a polynomial")
            return x.num
        if isinstance(x, TPoly):
            if (x.p, x.m) != (self.p, self.m):
                raise ValueError("polynomial from a different ring")
            return x.terms
        if isinstance(x, int) and not isinstance(x, bool):
            return {(0,) * self.m: x % self.p} if x % self.p else {}
        if isinstance(x, dict):
            return TPoly(self.p, self.m, x).terms
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def fraction(self, num, den):
        """Normalized num/den from raw term dicts."""
        p = self.p
        num = {e: c % p for e, c in num.items() if c % p}
        den = {e: c % p for e, c in den.items() if c % p}
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        if not tp.is_constant(den):
            g = tp.gcd(num, den, p)
            if not tp.is_constant(g):
                num, den = tp.exquo(num, g, p), tp.exquo(den, g, p)
        lc = den[max(den)]
        if lc != 1:
            inv = pow(lc, -1, p)
            num, den = tp.scale(num, inv, p), tp.scale(den, inv, p)
        return RatFunc._raw(self, num, den)


class RatFunc:
    """An element of F_p(t1..tm).  Immutable; build through the field."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _raw(cls, field, num, den):
        obj = cls.__new__(cls)
        obj.field, obj.num, obj.den, obj._hash = field, num, den, None
        return obj

    @property
    def p(self):
        return self.field.p

    def numerator(self):
        return TPoly._raw(self.field.p, self.field.m, self.num)

    def denominator(self):
        return TPoly._raw(self.field.p, self.field.m, self.den)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, TPoly)) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, K = self.p, self.field
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return K.fraction(tp.add(self.num, other.num, p), self.den)
        num = tp.add(tp.mul(self.num, other.den, p), tp.mul(other.num, self.den, p), p)
        return K.fraction(num, tp.mul(self.den, other.den, p))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(self.field, tp.neg(self.num, self.p), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, K = self.p, self.field
        if not self.num or not other.num:
            return K.zero
        # cross-cancel so the product of reduced fractions stays reduced
        g1 = tp.gcd(self.num, other.den, p)
        g2 = tp.gcd(other.num, self.den, p)
        n1, d2 = tp.exquo(self.num, g1, p), tp.exquo(other.den, g1, p)
        n2, d1 = tp.exquo(other.num, g2, p), tp.exquo(self.den, g2, p)
        num, den = tp.mul(n1, n2, p), tp.mul(d1, d2, p)
        lc = den[max(den)]
        if lc != 1:
            inv = pow(lc, -1, p)
            num, den = tp.scale(num, inv, p), tp.scale(den, inv, p)
        return RatFunc._raw(K, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        p = self.p
        lc = self.num[max(self.num)]
        inv = pow(lc, -1, p)
        return RatFunc._raw(self.field, tp.scale(self.den, inv, p), tp.scale(self.num, inv, p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return self.field.one
        if not self.num:
            return self
        p = self.p
        return RatFunc._raw(self.field, tp.power(self.num, k, p), tp.power(self.den, k, p))

    def frobenius(self):
        """self**p."""
        p = self.p
        return RatFunc._raw(self.field, tp.frobenius(self.num, p), tp.frobenius(self.den, p))

    def pth_root(self):
        """The unique r with r**p == self, or None if self is not in k^p."""
        p = self.p
        if any(a % p for e in self.num for a in e) or any(a % p for e in self.den for a in e):
            return None
        root = lambda f: {tuple(a // p for a in e): c for e, c in f.items()}
        return RatFunc._raw(self.field, root(self.num), root(self.den))

    def is_polynomial(self):
        return self.den == self.field._one

    def is_constant(self):
        return tp.is_constant(self.num) and self.is_polynomial()

    def variables(self):
        """1-based indices of t-variables occurring in num or den."""
        return {v + 1 for v in tp.support_vars(self.num) | tp.support_vars(self.den)}

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.field == other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, TPoly)) and not isinstance(other, bool):
            try:
                return self == self.field(other)
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __str__(self):
        n = tp.to_str(self.num)
        if self.is_polynomial():
            return n
        d = tp.to_str(self.den)
        if len(self.num) > 1:
            n = f"({n})"
        if len(self.den) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self}, p={self.p})"


# -- p-power decomposition ----------------------------------------------------

@dataclass(frozen=True)
class PPowerDecomposition:
    """Coefficients c_e with a = sum_e c_e^p * t^e, zero entries omitted."""

    field: RationalFunctionField
    entries: dict = dc_field(default_factory=dict)

    def __getitem__(self, e):
        return self.entries.get(tuple(e), self.field.zero)

    def recompose(self):
        K = self.field
        total = K.zero
        for e, c in self.entries.items():
            total = total + c.frobenius() * K(TPoly._raw(K.p, K.m, {e: 1}))
        return total


def residues(field):
    """All residue vectors in [0, p)^m, lexicographically."""
    return list(product(range(field.p), repeat=field.m))


def ppow_decompose(a):
    """Split a into p-th powers against the monomial basis of k over k^p.

    With a = n/d we have a = n*d^(p-1) / d^p; grouping the monomials of the
    numerator by their exponents mod p and taking p-th roots of each group
    gives the coefficients directly, since elements of F_p are fixed by
    Frobenius.
    """
    K = a.field
    p = K.p
    if not a.num:
        return PPowerDecomposition(K, {})
    numer = a.num
    if not a.is_polynomial():
        numer = tp.mul(a.num, tp.power(a.den, p - 1, p), p)
    groups = {}
    for e, c in numer.items():
        r = tuple(x % p for x in e)
        groups.setdefault(r, {})[tuple(x // p for x in e)] = c
    return PPowerDecomposition(K, {r: K.fraction(g, a.den) for r, g in groups.items()})


def _coordinate_rows(elements):
    """Decompose each element and line the coordinates up over a shared residue list."""
    decs = [ppow_decompose(x) for x in elements]
    keys = sorted({e for d in decs for e in d.entries})
    return decs, keys


def in_kp_span(a, eps):
    """Find lambda with a == sum_j eps[j] * lambda[j]**p, or return None.

    Returns a tuple of field elements (empty when eps is empty and a == 0).
    When eps is dependent over k^p any one solution is returned.
    """
    K = a.field
    eps = list(eps)
    decs, keys = _coordinate_rows([a, *eps])
    target, columns = decs[0], decs[1:]
    if not eps:
        return () if not a else None
    matrix = [[col[e] for col in columns] for e in keys]
    rhs = [target[e] for e in keys]
    sol = solve(matrix, rhs, K.zero)
    if sol is None:
        return None
    return tuple(sol)


def kp_independent(eps):
    """Whether eps is linearly independent over k^p.

    Returns ``(independent, basis)`` where ``basis`` lists the indices of a
    maximal independent subfamily chosen greedily in input order.
    """
    eps = list(eps)
    if not eps:
        return True, []
    K = eps[0].field
    decs, keys = _coordinate_rows(eps)
    rows = [[d[e] for e in keys] for d in decs]
    basis = rank_profile(rows, K.zero)
    return len(basis) == len(eps), basis


def kp_recompose(eps, lambdas):
    """sum_j eps[j] * lambdas[j]**p."""
    if len(eps) != len(lambdas):
        raise ValueError("eps and lambda lengths differ")
    total = None
    for e, lam in zip(eps, lambdas):
        term = e * lam.frobenius()
        total = term if total is None else total + term
    return total
