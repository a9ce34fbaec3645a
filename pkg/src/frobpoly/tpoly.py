"""Sparse multivariate polynomials over GF(p).

A polynomial in t1..tm is a dict mapping exponent tuples (length m) to
nonzero integers in 1..p-1.  The module-level helpers work on those raw
dicts; :class:`TPoly` wraps them with operators and printing.

Monomials are compared lexicographically as tuples, so ``max(f)`` is the
leading monomial of ``f``.
"""

from __future__ import annotations

import flint


def check_prime(p):
    """Return ``p`` if it is a prime >= 2, raise ValueError otherwise."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise ValueError(f"characteristic must be a prime >= 2, got {p!r}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"{p} is not prime")
        d += 1
    return p


# -- raw dict arithmetic ------------------------------------------------------

def add(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    out = dict(f)
    for e, c in g.items():
        c = (out.get(e, 0) + c) % p
        if c:
            out[e] = c
        else:
            out.pop(e, None)
    return out


def sub(f, g, p):
    out = dict(f)
    for e, c in g.items():
        c = (out.get(e, 0) - c) % p
        if c:
            out[e] = c
        else:
            out.pop(e, None)
    return out


def neg(f, p):
    return {e: p - c for e, c in f.items()}


def scale(f, c, p):
    c %= p
    if not c:
        return {}
    return {e: a * c % p for e, a in f.items()}


def mul(f, g, p):
    if not f or not g:
        return {}
    if len(f) == 1 and len(g) == 1:
        (e1, c1), = f.items()
        (e2, c2), = g.items()
        return {tuple(a + b for a, b in zip(e1, e2)): c1 * c2 % p}
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c % p for e, c in out.items() if c % p}


def power(f, k, p):
    """f**k for k >= 1."""
    if k < 1:
        raise ValueError("exponent must be positive")
    if not f:
        return {}
    result = one(len(next(iter(f))))
    base = f
    while True:
        # p-th powers are a relabelling of exponents
        if k % p == 0:
            base = {tuple(p * a for a in e): c for e, c in base.items()}
            k //= p
            continue
        result = mul(result, base, p)
        k -= 1
        if not k:
            return result


def frobenius(f, p):
    """f**p, which in characteristic p only rescales exponents."""
    return {tuple(p * a for a in e): c for e, c in f.items()}


def is_constant(f):
    return not f or (len(f) == 1 and not any(next(iter(f))))


def constant_value(f):
    """The constant term of a constant polynomial (0 for the zero polynomial)."""
    if not f:
        return 0
    return f[next(iter(f))]


def one(m):
    return {(0,) * m: 1}


def monic(f, p):
    if not f:
        return {}
    lc = f[max(f)]
    if lc == 1:
        return f
    return scale(f, pow(lc, -1, p), p)


def degree(f):
    return max((sum(e) for e in f), default=-1)


def support_vars(f):
    m = len(next(iter(f))) if f else 0
    return {v for v in range(m) if any(e[v] for e in f)}


def exquo(f, g, p):
    """Exact quotient f/g; raises ValueError if g does not divide f."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return {}
    lt_g = max(g)
    inv = pow(g[lt_g], -1, p)
    if len(g) == 1:
        out = {}
        for e, c in f.items():
            d = tuple(a - b for a, b in zip(e, lt_g))
            if min(d) < 0:
                raise ValueError("inexact division")
            out[d] = c * inv % p
        return out
    ctx = _flint_ctx(len(lt_g), p)
    try:
        return _from_flint(_to_flint(f, ctx) / _to_flint(g, ctx))
    except flint.DomainError as exc:
        raise ValueError("inexact division") from exc


def _flint_ctx(m, p):
    return flint.nmod_mpoly_ctx.get(tuple(f"t{i + 1}" for i in range(m)), modulus=p)


def _to_flint(f, ctx):
    return ctx.from_dict(f)


def _from_flint(h):
    return {tuple(int(a) for a in e): int(c) for e, c in h.to_dict().items() if int(c)}


def gcd(f, g, p):
    """Monic greatest common divisor (lex leading coefficient 1).

    Constant and monomial inputs are handled directly; everything else goes
    to FLINT's multivariate gcd over Z/pZ.
    """
    if not f:
        return monic(g, p)
    if not g:
        return monic(f, p)
    m = len(next(iter(f)))
    if is_constant(f) or is_constant(g):
        return one(m)
    if len(f) == 1 or len(g) == 1:
        if len(g) == 1:
            f, g = g, f
        low = next(iter(f))
        for e in g:
            low = tuple(min(a, b) for a, b in zip(low, e))
        return {low: 1}
    if not support_vars(f) & support_vars(g):
        return one(m)
    ctx = _flint_ctx(m, p)
    return monic(_from_flint(_to_flint(f, ctx).gcd(_to_flint(g, ctx))), p)


# -- printing -----------------------------------------------------------------

def monomial_str(e, prefix="t"):
    parts = []
    for i, a in enumerate(e):
        if a == 1:
            parts.append(f"{prefix}{i + 1}")
        elif a:
            parts.append(f"{prefix}{i + 1}^{a}")
    return "*".join(parts)


def to_str(f):
    if not f:
        return "0"
    out = []
    for e in sorted(f, key=lambda e: (sum(e), e), reverse=True):
        c = f[e]
        mono = monomial_str(e)
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return "+".join(out)


class TPoly:
    """Immutable polynomial in t1..tm over GF(p)."""

    __slots__ = ("p", "m", "terms", "_hash")

    def __init__(self, p, m, terms=None):
        self.p = p
        self.m = m
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != m or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for {m} variables")
            c %= p
            if c:
                clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, p, m, terms):
        obj = cls.__new__(cls)
        obj.p, obj.m, obj.terms, obj._hash = p, m, terms, None
        return obj

    @classmethod
    def constant(cls, p, m, c):
        return cls(p, m, {(0,) * m: c})

    @classmethod
    def gen(cls, p, m, i):
        """The variable t_i (1-based)."""
        if not 1 <= i <= m:
            raise ValueError(f"t{i} out of range for {m} variables")
        e = [0] * m
        e[i - 1] = 1
        return cls._raw(p, m, {tuple(e): 1})

    def _coerce(self, other):
        if isinstance(other, TPoly):
            if (other.p, other.m) != (self.p, self.m):
                raise ValueError("polynomials from different rings")
            return other.terms
        if isinstance(other, int):
            return {(0,) * self.m: other % self.p} if other % self.p else {}
        return NotImplemented

    def _wrap(self, terms):
        return TPoly._raw(self.p, self.m, terms)

    def __add__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return self._wrap(add(self.terms, g, self.p))

    __radd__ = __add__

    def __sub__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return self._wrap(sub(self.terms, g, self.p))

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return self._wrap(sub(g, self.terms, self.p))

    def __neg__(self):
        return self._wrap(neg(self.terms, self.p))

    def __mul__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return self._wrap(mul(self.terms, g, self.p))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k == 0:
            return self._wrap(one(self.m))
        return self._wrap(power(self.terms, k, self.p))

    def __eq__(self, other):
        g = self._coerce(other) if isinstance(other, (TPoly, int)) else NotImplemented
        if g is NotImplemented:
            return NotImplemented
        return self.terms == g

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return is_constant(self.terms)

    def degree(self):
        return degree(self.terms)

    def gcd(self, other):
        return self._wrap(gcd(self.terms, self._coerce(other), self.p))

    def exquo(self, other):
        return self._wrap(exquo(self.terms, self._coerce(other), self.p))

    def variables(self):
        """1-based indices of the variables that occur."""
        return {v + 1 for v in support_vars(self.terms)}

    def __str__(self):
        return to_str(self.terms)

    def __repr__(self):
        return f"TPoly({self}, p={self.p}, m={self.m})"
