"""Parsing of binary-form expressions in the variables s and t.

Grammar (explicit '*' required, '^' takes a nonnegative integer):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' integer)?
    atom   := number | 's' | 't' | '(' expr ')'
    number := digits | digits '/' digits | digits '.' digits

Numeric literals are exact: '0.25' is the rational 1/4, never a float.
Polynomials are built over (s, t) and converted to a BinaryForm at the end,
so homogeneity is a property of the whole expression, not of its parse.
"""

from __future__ import annotations

from .binary_forms import BinaryForm
from .curves import CurveError, CurveParam
from .rationals import ONE, QQ, ZERO


class SyntaxError(Exception):
    """Malformed expression; `position` is the 0-based offset of the issue."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class NotHomogeneous(Exception):
    pass


# polynomials in s,t as {(s_exp, t_exp): coefficient}


def _p_add(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, ZERO) + c
        if v == 0:
            out.pop(e, None)
        else:
            out[e] = v
    return out


def _p_neg(a):
    return {e: -c for e, c in a.items()}


def _p_mul(a, b):
    out = {}
    for (i, j), c in a.items():
        for (k, l), d in b.items():
            e = (i + k, j + l)
            v = out.get(e, ZERO) + c * d
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
    return out


def _p_pow(a, n):
    out = {(0, 0): ONE}
    for _ in range(n):
        out = _p_mul(out, a)
    return out


class _Scanner:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def skip_space(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_space()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def take(self):
        ch = self.peek()
        self.pos += len(ch)
        return ch

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SyntaxError("expected digits", start)
        return self.src[start : self.pos]


def _parse_number(sc: _Scanner):
    whole = sc.digits()
    if sc.pos < len(sc.src) and sc.src[sc.pos] == ".":
        sc.pos += 1
        frac = sc.digits()
        return QQ(int(whole + frac), 10 ** len(frac))
    if sc.peek() == "/":
        sc.take()
        sc.skip_space()
        denom_at = sc.pos
        denom = sc.digits()
        if int(denom) == 0:
            raise SyntaxError("zero denominator", denom_at)
        return QQ(int(whole), int(denom))
    return QQ(int(whole))


def _parse_atom(sc: _Scanner):
    ch = sc.peek()
    if ch == "(":
        sc.take()
        inner = _parse_expr(sc)
        if sc.peek() != ")":
            raise SyntaxError("expected ')'", sc.pos)
        sc.take()
        return inner
    if ch == "s":
        sc.take()
        return {(1, 0): ONE}
    if ch == "t":
        sc.take()
        return {(0, 1): ONE}
    if ch.isdigit():
        return {(0, 0): _parse_number(sc)}
    raise SyntaxError(
        f"expected a number, 's', 't', or '(', found {ch!r}" if ch else "unexpected end of input",
        sc.pos,
    )


def _parse_factor(sc: _Scanner):
    base = _parse_atom(sc)
    if sc.peek() == "^":
        sc.take()
        sc.skip_space()
        exp_at = sc.pos
        if not (sc.pos < len(sc.src) and sc.src[sc.pos].isdigit()):
            raise SyntaxError("'^' requires a nonnegative integer", exp_at)
        n = int(sc.digits())
        base = _p_pow(base, n)
    return base


def _parse_term(sc: _Scanner):
    out = _parse_factor(sc)
    while sc.peek() == "*":
        sc.take()
        out = _p_mul(out, _parse_factor(sc))
    return out


def _parse_expr(sc: _Scanner):
    ch = sc.peek()
    if ch in ("+", "-"):
        sc.take()
        out = _parse_term(sc)
        if ch == "-":
            out = _p_neg(out)
    else:
        out = _parse_term(sc)
    while True:
        ch = sc.peek()
        if ch not in ("+", "-"):
            return out
        sc.take()
        term = _parse_term(sc)
        out = _p_add(out, _p_neg(term) if ch == "-" else term)


def parse_polynomial(src: str) -> dict:
    """Exact sparse polynomial in s,t; raises SyntaxError on bad input."""
    sc = _Scanner(src)
    out = _parse_expr(sc)
    if sc.peek() != "":
        raise SyntaxError(f"unexpected {sc.peek()!r}", sc.pos)
    return out


def parse_form(src: str) -> BinaryForm:
    """Parse one homogeneous binary form. The zero polynomial parses to the
    degree-0 zero form (the caller supplies the intended degree context)."""
    poly = parse_polynomial(src)
    if not poly:
        return BinaryForm([ZERO])
    degrees = {i + j for i, j in poly}
    if len(degrees) != 1:
        raise NotHomogeneous(
            f"terms of degrees {sorted(degrees)} in {src!r}"
        )
    n = degrees.pop()
    coeffs = [ZERO] * (n + 1)
    for (i, j), c in poly.items():
        coeffs[j] = c
    return BinaryForm(coeffs)


def parse_curve(fx: str, fy: str, fz: str) -> CurveParam:
    """Parse the three coordinate expressions into a validated curve."""
    forms = [parse_form(src) for src in (fx, fy, fz)]
    degrees = {f.degree for f in forms if not f.is_zero()}
    if len(degrees) == 1:
        n = degrees.pop()
        forms = [
            BinaryForm.zero(n) if f.is_zero() else f for f in forms
        ]
    return CurveParam(*forms)
