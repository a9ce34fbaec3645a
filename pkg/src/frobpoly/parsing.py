"""Text grammar shared by field elements, x-polynomials and Hahn series.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | VAR | '(' expr ')'

``**`` is accepted for ``^``.  What counts as a variable, and what a
variable or integer literal evaluates to, is supplied by the caller.
"""

from __future__ import annotations

import re


class ParseError(ValueError):
    pass


_OPS = r"\*\*|[-+*/^()]"


def tokenize(text, var_pattern):
    pattern = re.compile(rf"\s*(?:(?P<int>\d+)|(?P<var>{var_pattern})|(?P<op>{_OPS}))")
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = pattern.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at position {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        tok = m.group(kind)
        out.append((kind, "^" if tok == "**" else tok))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, make_int, make_var):
        self.tokens = tokens
        self.i = 0
        self.make_int = make_int
        self.make_var = make_var

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if tok[0] is None or (op is not None and tok[1] != op):
            raise ParseError(f"expected {op or 'more input'}, got {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[1] in ("*", "/"):
            _, op = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except ZeroDivisionError as exc:
                    raise ParseError("division by zero") from exc
        return value

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            paren = self.peek()[1] == "("
            if paren:
                self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, tok = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be an integer literal, got {tok!r}")
            if paren:
                self.take(")")
            k = sign * int(tok)
            try:
                return base ** k
            except ZeroDivisionError as exc:
                raise ParseError("negative power of zero") from exc
        return base

    def atom(self):
        kind, tok = self.take()
        if kind == "int":
            return self.make_int(int(tok))
        if kind == "var":
            return self.make_var(tok)
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected token {tok!r}")


def parse(text, var_pattern, make_int, make_var):
    tokens = tokenize(text, var_pattern)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(tokens, make_int, make_var)
    try:
        value = parser.expr()
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc
    if parser.i != len(tokens):
        raise ParseError(f"trailing input starting at {parser.peek()[1]!r}")
    return value


def _var_index(name, prefix, limit):
    idx = int(name[1:]) if len(name) > 1 else 1
    if not 1 <= idx <= limit:
        raise ParseError(f"{name} is out of range (have {prefix}1..{prefix}{limit})")
    return idx


def parse_field_element(field, text):
    """Parse an element of F_p(t1..tm); a bare ``t`` means ``t1``."""
    def make_var(name):
        return field.gen(_var_index(name, "t", field.m))

    return parse(text, r"t\d*", field, make_var)


def parse_xpoly(field, nvars, text):
    """Parse a polynomial in x1..x<nvars> with coefficients in ``field``."""
    from .poly import XPoly

    def make_var(name):
        if name[0] == "t":
            return XPoly.constant(field, field.gen(_var_index(name, "t", field.m)))
        return XPoly.var(field, _var_index(name, "x", nvars))

    return parse(text, r"[tx]\d*", lambda k: XPoly.constant(field, k), make_var)


def max_var_index(text, prefix):
    """Largest index of ``<prefix>N`` variables in text (bare prefix counts as 1)."""
    best = 0
    for m in re.finditer(rf"(?<![A-Za-z\[]){prefix}(\d*)", text):
        best = max(best, int(m.group(1)) if m.group(1) else 1)
    return best
