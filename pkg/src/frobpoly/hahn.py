"""Finitely supported Hahn series over F_p with exponents in a lex-ordered group.

Gamma is the group of finitely supported functions I -> Z on a finite
ordered index set I = {1..N}.  Comparison is decided at the largest index
where two exponents differ.  Delta (top value >= 2) and Gamma_+ (top value
>= 1) are submonoids; A is the ring of series supported in Delta.

Only finite supports are modelled, which covers every computation below:
products, truncated inverses and the valuation arguments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from math import comb

from .parsing import ParseError, parse


@total_ordering
class GammaExp:
    """Finitely supported function I -> Z, stored as sorted (index, value) pairs."""

    __slots__ = ("items",)

    def __init__(self, mapping=None):
        items = {}
        for i, v in (mapping or {}).items() if isinstance(mapping, dict) else (mapping or ()):
            if i < 1:
                raise ValueError("indices start at 1")
            items[i] = items.get(i, 0) + v
        self.items = tuple(sorted((i, v) for i, v in items.items() if v))

    @classmethod
    def delta(cls, i, k=1):
        return cls({i: k})

    @property
    def top_index(self):
        return self.items[-1][0] if self.items else None

    @property
    def top_value(self):
        return self.items[-1][1] if self.items else None

    def __getitem__(self, i):
        return dict(self.items).get(i, 0)

    def __add__(self, other):
        out = dict(self.items)
        for i, v in other.items:
            out[i] = out.get(i, 0) + v
        return GammaExp(out)

    def __neg__(self):
        g = GammaExp()
        g.items = tuple((i, -v) for i, v in self.items)
        return g

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return GammaExp({i: v * k for i, v in self.items})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GammaExp) and self.items == other.items

    def __lt__(self, other):
        d = other - self
        return bool(d.items) and d.top_value > 0

    def __hash__(self):
        return hash(self.items)

    def __bool__(self):
        return bool(self.items)

    def divisible_by(self, p):
        return all(v % p == 0 for _, v in self.items)

    def __floordiv__(self, p):
        return GammaExp({i: v // p for i, v in self.items})

    def __str__(self):
        if not self.items:
            return "0"
        out = ""
        for i, v in self.items:
            sign = "-" if v < 0 else ("+" if out else "")
            out += f"{sign}{abs(v)}g{i}"
        return out

    def __repr__(self):
        return f"GammaExp({self})"


def gamma_compare(a, b):
    """-1, 0 or 1 as a <, ==, > b."""
    if a == b:
        return 0
    return -1 if a < b else 1


def in_gamma_plus(g):
    return not g or g.top_value >= 1


def in_delta(g):
    return not g or g.top_value >= 2


_EXP_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*g(\d+)\s*")


def parse_gamma(text):
    """Parse ``"2g1-1g3"`` (meaning 2*delta_1 - delta_3); ``"0"`` is zero."""
    text = text.strip()
    if text in ("", "0"):
        return GammaExp()
    pos, out = 0, {}
    while pos < len(text):
        m = _EXP_TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad exponent literal {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(2)) if m.group(2) else 1
        i = int(m.group(3))
        if i < 1:
            raise ParseError("indices start at 1")
        out[i] = out.get(i, 0) + sign * k
        pos = m.end()
    return GammaExp(out)


class HahnElement:
    """Finite sum of c * t^gamma with c in F_p."""

    __slots__ = ("p", "terms")

    def __init__(self, p, terms=None):
        self.p = p
        clean = {}
        for g, c in (terms or {}).items():
            c = (clean.get(g, 0) + c) % p
            if c:
                clean[g] = c
            else:
                clean.pop(g, None)
        self.terms = clean

    @classmethod
    def monomial(cls, p, gamma, c=1):
        return cls(p, {gamma: c})

    @classmethod
    def one(cls, p):
        return cls(p, {GammaExp(): 1})

    def _coerce(self, other):
        if isinstance(other, HahnElement):
            if other.p != self.p:
                raise ValueError("different characteristics")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return HahnElement(self.p, {GammaExp(): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return HahnElement(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return HahnElement(self.p, {g: -c for g, c in self.terms.items()})

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
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                g = g1 + g2
                out[g] = out.get(g, 0) + c1 * c2
        return HahnElement(self.p, out)

    __rmul__ = __mul__

    def is_monomial(self):
        return len(self.terms) == 1

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials; use hahn_invert_truncated")
            (g, c), = self.terms.items()
            return HahnElement(self.p, {g * k: pow(c, k, self.p)})
        result = HahnElement.one(self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        """Exact division by a monomial."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            raise ZeroDivisionError("division by zero")
        return self * other ** -1

    def __eq__(self, other):
        other = self._coerce(other) if isinstance(other, (HahnElement, int)) else NotImplemented
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def support(self):
        return sorted(self.terms)

    def valuation(self):
        if not self.terms:
            raise ValueError("valuation of zero")
        return min(self.terms)

    def leading_coefficient(self):
        return self.terms[self.valuation()]

    def frobenius(self):
        return HahnElement(self.p, {g * self.p: c for g, c in self.terms.items()})

    def pth_root(self):
        """The unique r with r**p == self, or None."""
        if not all(g.divisible_by(self.p) for g in self.terms):
            return None
        return HahnElement(self.p, {g // self.p: c for g, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for g in sorted(self.terms):
            c = self.terms[g]
            if not g:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"t[{g}]")
            else:
                parts.append(f"{c}*t[{g}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"HahnElement({self}, p={self.p})"


def parse_hahn(p, text, max_index=None):
    """Parse e.g. ``"t[2g1] + 2*t[3g1-1g2]"``."""
    def make_var(tok):
        g = parse_gamma(tok[2:-1])
        if max_index is not None and g and g.top_index > max_index:
            raise ParseError(f"index {g.top_index} exceeds the index set size {max_index}")
        return HahnElement.monomial(p, g)

    return parse(text, r"t\[[^\]]*\]", lambda k: HahnElement(p, {GammaExp(): k}), make_var)


def a_member(f):
    """Whether every exponent in the support lies in Delta."""
    return all(in_delta(g) for g in f.terms)


@dataclass(frozen=True)
class TruncatedInverse:
    """Partial inverse S of g with the size of what was dropped.

    ``residual`` is g*S - 1; ``error_valuation`` is the valuation of
    g^{-1} - S (v(residual) - v(g)), None when the inverse is exact;
    ``term_valuations`` lists the valuations of the retained summands.
    """

    series: HahnElement
    residual: HahnElement
    error_valuation: GammaExp | None
    term_valuations: tuple


def _normalize(g):
    """Return (gamma, c^{-1}, u, w) with g = c t^gamma (1 + u + w).

    u collects the terms whose top index is at most that of gamma, w the
    terms above it; every exponent of u and w is positive.
    """
    if not g:
        raise ZeroDivisionError("inverse of zero")
    p = g.p
    gamma = g.valuation()
    scale = pow(g.terms[gamma], -1, p)
    i = gamma.top_index or 0
    low, high = {}, {}
    for e, c in g.terms.items():
        if e != gamma:
            (low if (e.top_index or 0) <= i else high)[e - gamma] = c * scale
    return gamma, scale, HahnElement(p, low), HahnElement(p, high)


def inverse_summands(g, terms):
    """The summands c^{-1} t^{-gamma} (-1)^(n+m) C(n+m, n) u^n w^m with n + m < terms.

    Their infinite sum over all (n, m) is g^{-1}.
    """
    if terms < 1:
        raise ValueError("need at least one term")
    p = g.p
    gamma, scale, u, w = _normalize(g)
    front = HahnElement.monomial(p, -gamma, scale)
    upow, wpow = [HahnElement.one(p)], [HahnElement.one(p)]
    for _ in range(terms - 1):
        upow.append(upow[-1] * u)
        wpow.append(wpow[-1] * w)
    out = []
    for k in range(terms):
        for n in range(k + 1):
            coeff = (-1) ** k * comb(k, n) % p
            summand = front * upow[n] * wpow[k - n] * coeff
            if summand:
                out.append(((n, k - n), summand))
    return out


def hahn_invert_truncated(g, terms):
    """Partial sum of g^{-1} made of its ``terms`` smallest geometric summands.

    Every term of w outranks every power of u, so a finite partial sum can
    only be accurate up to its last term when it is taken in valuation
    order: the powers u^0..u^(terms-1) when u != 0, else w^0..w^(terms-1).
    """
    if terms < 1:
        raise ValueError("need at least one term")
    p = g.p
    gamma, scale, u, w = _normalize(g)
    step = -(u if u else w)
    front = HahnElement.monomial(p, -gamma, scale)
    summand, total, vals = front, HahnElement(p), []
    for _ in range(terms):
        if not summand:
            break
        vals.append(summand.valuation())
        total = total + summand
        summand = summand * step
    residual = g * total - 1
    err = residual.valuation() - gamma if residual else None
    return TruncatedInverse(total, residual, err, tuple(vals))


def shift_into_a_check(g, delta, terms):
    """Check that t^delta g^{-1} is supported in Delta, summand by summand.

    Every summand of the inverse series with n + m < terms is shifted by
    t^delta and each of its exponents tested, which covers the partial sum
    as well.  Requires g a nonzero element of A and delta in Delta with top
    index strictly above the top index of v(g).
    """
    if not g:
        raise ValueError("g must be nonzero")
    if not a_member(g):
        raise ValueError("g must lie in A")
    if not delta or not in_delta(delta):
        raise ValueError("delta must be a nonzero element of Delta")
    gi = g.valuation().top_index or 0
    if delta.top_index <= gi:
        raise ValueError(f"top index of delta ({delta.top_index}) must exceed that of v(g) ({gi})")
    shift = HahnElement.monomial(g.p, delta)
    return all(a_member(shift * s) for _, s in inverse_summands(g, terms))


def aleph1_failure_check(b, j):
    """Check that t^(p delta_j) is not in b^{-p} A^p.

    If b^p t^(p delta_j) were a^p with a in A, then v(a) = v(b) + delta_j
    would lie in Delta; its top value is 1.
    """
    if not b:
        raise ValueError("b must be nonzero")
    if not a_member(b):
        raise ValueError("b must lie in A")
    bi = b.valuation().top_index or 0
    if j <= bi:
        raise ValueError(f"j = {j} must exceed the top index of v(b) ({bi})")
    target = b.frobenius() * HahnElement.monomial(b.p, GammaExp.delta(j, b.p))
    v = target.valuation()
    if not v.divisible_by(b.p):
        return True
    return not in_delta(v // b.p)


def aleph0_bound(p, indices, top):
    """b = t^(2 delta_top), a uniform denominator for {t^(p delta_i) : i in indices}."""
    if any(i >= top for i in indices):
        raise ValueError("top index must exceed every index in the set")
    return HahnElement.monomial(p, GammaExp.delta(top, 2))


def aleph0_check(S, b):
    """Whether b^p * s has a p-th root in A for every s in S."""
    for s in S:
        root = (b.frobenius() * s).pth_root()
        if root is None or not a_member(root):
            return False
    return True
