"""Sparse graded polynomials in x-variables over F_p(t1..tm).

An x-monomial is a tuple of ``(index, exponent)`` pairs sorted by index,
with positive exponents only; ``()`` is the constant monomial.  Every
x-variable has degree 1, so the degree of a monomial is its exponent sum.
"""

from __future__ import annotations

from .fields import RatFunc


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for i, k in b:
        out[i] = out.get(i, 0) + k
    return tuple(sorted(out.items()))


def mono_degree(e):
    return sum(k for _, k in e)


def mono_scale(e, k):
    """Multiply every exponent by k."""
    return tuple((i, a * k) for i, a in e)


def mono_str(e):
    return "*".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in e)


class XPoly:
    """Immutable polynomial sum c_e x^e with nonzero coefficients in a field."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field, terms=None):
        self.field = field
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(sorted((int(i), int(a)) for i, a in e if a))
            if any(a < 0 or i < 1 for i, a in e):
                raise ValueError(f"bad x-monomial {e}")
            c = field(c)
            if c:
                clean[e] = clean[e] + c if e in clean else c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field, terms):
        obj = cls.__new__(cls)
        obj.field, obj.terms, obj._hash = field, terms, None
        return obj

    @classmethod
    def var(cls, field, i):
        return cls._raw(field, {((i, 1),): field.one})

    @classmethod
    def constant(cls, field, c):
        c = field(c)
        return cls._raw(field, {(): c} if c else {})

    @classmethod
    def zero(cls, field):
        return cls._raw(field, {})

    @classmethod
    def monomial(cls, field, e, c=1):
        return cls(field, {e: c})

    def _coerce(self, other):
        if isinstance(other, XPoly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, RatFunc) or (isinstance(other, int) and not isinstance(other, bool)):
            return XPoly.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out[e] + c if e in out else c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return XPoly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw(self.field, {e: -c for e, c in self.terms.items()})

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
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return XPoly._raw(self.field, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar only."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.is_constant() or not other:
            raise ValueError("can only divide an x-polynomial by a nonzero scalar")
        inv = other.constant_coefficient().inverse()
        return XPoly._raw(self.field, {e: c * inv for e, c in self.terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = XPoly.constant(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scalar_mul(self, a):
        a = self.field(a)
        if not a:
            return XPoly.zero(self.field)
        return XPoly._raw(self.field, {e: c * a for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.field == other.field and self.terms == other.terms
        if isinstance(other, (RatFunc, int)) and not isinstance(other, bool):
            return self == XPoly.constant(self.field, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def coefficient(self, e):
        return self.terms.get(tuple(e), self.field.zero)

    def constant_coefficient(self):
        return self.terms.get((), self.field.zero)

    def is_constant(self):
        return all(not e for e in self.terms)

    def degree(self):
        """Maximal term degree; -1 for the zero polynomial."""
        return max((mono_degree(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({mono_degree(e) for e in self.terms}) <= 1

    def variables(self):
        return sorted({i for e in self.terms for i, _ in e})

    def max_exponent(self):
        return max((a for e in self.terms for _, a in e), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (mono_degree(e), _dense_key(e)), reverse=True):
            c = self.terms[e]
            cs = str(c)
            if not e:
                parts.append(cs if len(c.num) == 1 else f"({cs})")
                continue
            if c == 1:
                parts.append(mono_str(e))
                continue
            if "+" in cs or (not c.is_polynomial() and len(c.num) > 1):
                cs = f"({cs})"
            parts.append(f"{cs}*{mono_str(e)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"XPoly({self})"


def _dense_key(e):
    # graded lex: compare exponent of x1 first, then x2, ...
    n = max((i for i, _ in e), default=0)
    d = dict(e)
    return tuple(d.get(i, 0) for i in range(1, n + 1))


def homogeneous_components(f):
    """Map degree -> homogeneous component; components sum to f."""
    out = {}
    for e, c in f.terms.items():
        out.setdefault(mono_degree(e), {})[e] = c
    return {d: XPoly._raw(f.field, t) for d, t in sorted(out.items())}


def in_positive_ideal(f):
    """Whether f lies in the ideal generated by the x-variables."""
    return () not in f.terms
