"""Sparse multivariate polynomials over the exact rationals.

Polynomials are dicts mapping exponent tuples to nonzero rational
coefficients, tagged with the ring (a tuple of variable names). This module
also carries the exact linear algebra and resultant machinery built directly
on polynomial arithmetic: fraction-free (Bareiss) determinants, Sylvester
resultants for small degrees and the subresultant PRS above them.
"""

from __future__ import annotations

from math import gcd as _int_gcd

from .orders import GrevLex
from .rationals import ONE, QQ, ZERO, is_integer, numerator, denominator


class Ring:
    """An ordered tuple of variable names; polynomials remember their ring."""

    __slots__ = ("names", "index", "_grevlex")

    def __init__(self, names):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.index = {n: i for i, n in enumerate(self.names)}
        self._grevlex = GrevLex(len(self.names))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def var(self, i) -> "MultiPoly":
        if isinstance(i, str):
            i = self.index[i]
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return MultiPoly(self, {exps: ONE})

    def gens(self):
        return tuple(self.var(i) for i in range(self.nvars))

    @property
    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    @property
    def one(self) -> "MultiPoly":
        return self.const(ONE)

    def const(self, c) -> "MultiPoly":
        c = QQ(c)
        if c == 0:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.nvars: c})

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms  # exponent tuple -> nonzero coefficient

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def from_terms(ring: Ring, items) -> "MultiPoly":
        terms = {}
        for exps, c in items:
            c = QQ(c)
            if c == 0:
                continue
            acc = terms.get(exps)
            c = c if acc is None else acc + c
            if c == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = c
        return MultiPoly(ring, terms)

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(exps) for exps in self.terms}
        return len(degs) <= 1

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention here."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(exps[i] for exps in self.terms)

    def involves(self, i: int) -> bool:
        return any(exps[i] for exps in self.terms)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise ValueError("mixed rings")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            acc = terms.get(exps)
            s = c if acc is None else acc + c
            if s == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return MultiPoly(self.ring, terms)

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = QQ(other)
            if c == 0:
                return self.ring.zero
            return MultiPoly(self.ring, {e: cc * c for e, cc in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                acc = terms.get(exps)
                s = ca * cb if acc is None else acc + ca * cb
                if s == 0:
                    terms.pop(exps, None)
                else:
                    terms[exps] = s
        return MultiPoly(self.ring, terms)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if not (isinstance(other, int) or type(other) is type(ONE)):
                return NotImplemented
            other = self.ring.const(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    # -- leading data (grevlex of the ring, unless an order is given) ----------

    def leading_exps(self, order=None) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        order = order or self.ring._grevlex
        return max(self.terms, key=order.key)

    def leading_coeff(self, order=None):
        return self.terms[self.leading_exps(order)]

    # -- normalization ----------------------------------------------------------

    def primitive(self) -> "MultiPoly":
        """Integer-primitive scalar multiple with positive leading coefficient."""
        if not self.terms:
            return self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = _int_gcd(num_gcd, abs(numerator(c)))
            d = denominator(c)
            den_lcm = den_lcm // _int_gcd(den_lcm, d) * d
        scale = QQ(den_lcm, num_gcd)
        if self.leading_coeff() < 0:
            scale = -scale
        return MultiPoly(self.ring, {e: c * scale for e, c in self.terms.items()})

    def monic(self, order=None) -> "MultiPoly":
        if not self.terms:
            return self
        lc = self.leading_coeff(order)
        if lc == 1:
            return self
        inv = 1 / QQ(lc)
        return MultiPoly(self.ring, {e: c * inv for e, c in self.terms.items()})

    # -- substitution and evaluation -------------------------------------------

    def substitute(self, target_ring: Ring, images) -> "MultiPoly":
        """Ring map sending variable i to images[i] (polynomials over target)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        powers = [{} for _ in images]

        def power(i, e):
            cache = powers[i]
            got = cache.get(e)
            if got is None:
                got = images[i] ** e
                cache[e] = got
            return got

        acc = target_ring.zero
        for exps, c in self.terms.items():
            part = target_ring.const(c)
            for i, e in enumerate(exps):
                if e:
                    part = part * power(i, e)
            acc = acc + part
        return acc

    def eval_rational(self, point) -> "QQ":
        """Evaluate at a tuple of rationals."""
        total = ZERO
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def dehomogenize(self, i: int, target_ring: Ring) -> "MultiPoly":
        """Set variable i to 1; target ring must list the other names in order."""
        terms: dict = {}
        for exps, c in self.terms.items():
            cut = exps[:i] + exps[i + 1 :]
            acc = terms.get(cut)
            s = c if acc is None else acc + c
            if s == 0:
                terms.pop(cut, None)
            else:
                terms[cut] = s
        return MultiPoly(target_ring, terms)

    def rename(self, target_ring: Ring, index_map) -> "MultiPoly":
        """Move to target ring; index_map[i] is the target slot of variable i."""
        terms = {}
        width = target_ring.nvars
        for exps, c in self.terms.items():
            out = [0] * width
            for i, e in enumerate(exps):
                if e:
                    out[index_map[i]] = e
            terms[tuple(out)] = c
        return MultiPoly(target_ring, terms)

    def partial(self, i: int) -> "MultiPoly":
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e:
                cut = exps[:i] + (e - 1,) + exps[i + 1 :]
                terms[cut] = c * e
        return MultiPoly(self.ring, terms)

    # -- exact division -----------------------------------------------------------

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient when `other` divides self exactly; raises otherwise."""
        if not isinstance(other, MultiPoly):
            c = QQ(other)
            return MultiPoly(self.ring, {e: cc / c for e, cc in self.terms.items()})
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        order = self.ring._grevlex
        lead_d = other.leading_exps(order)
        lc_d = other.terms[lead_d]
        rem = dict(self.terms)
        out = {}
        while rem:
            lead_r = max(rem, key=order.key)
            q_exps = tuple(a - b for a, b in zip(lead_r, lead_d))
            if any(e < 0 for e in q_exps):
                raise ArithmeticError("not an exact division")
            q_c = rem[lead_r] / lc_d
            out[q_exps] = q_c
            for e_d, c_d in other.terms.items():
                exps = tuple(a + b for a, b in zip(q_exps, e_d))
                acc = rem.get(exps)
                s = -q_c * c_d if acc is None else acc - q_c * c_d
                if s == 0:
                    rem.pop(exps, None)
                else:
                    rem[exps] = s
        return MultiPoly(self.ring, out)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ArithmeticError:
            return False

    # -- printing -----------------------------------------------------------------

    def __repr__(self):
        return self.format()

    def format(self) -> str:
        if not self.terms:
            return "0"
        order = self.ring._grevlex
        parts = []
        for exps in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"{self.ring.names[i]}^{e}" if e > 1 else self.ring.names[i]
                for i, e in enumerate(exps)
                if e
            )
            if mono:
                if c == 1:
                    body = mono
                elif c == -1:
                    body = f"-{mono}"
                else:
                    body = f"{c}*{mono}"
            else:
                body = str(c)
            if parts and not body.startswith("-"):
                parts.append("+")
            parts.append(body)
        out = []
        for p in parts:
            if p.startswith("-") and out:
                out.append("- " + p[1:])
            else:
                out.append(p)
        return " ".join(out).replace("+ -", "- ")


def homogenize(p: MultiPoly, target_ring: Ring, slot: int) -> MultiPoly:
    """Homogenize into `target_ring`, whose variable at `slot` is the new one
    and whose other variables are p's in order."""
    d = p.total_degree()
    terms = {}
    for exps, c in p.terms.items():
        h = d - sum(exps)
        out = exps[:slot] + (h,) + exps[slot:]
        terms[out] = c
    return MultiPoly(target_ring, terms)


# -- exact matrix determinants ------------------------------------------------


def det_bareiss(rows) -> MultiPoly:
    """Fraction-free determinant of a square matrix of polynomials."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    m = [list(r) for r in rows]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot is None:
                return ring.zero
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = ring.zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


# -- resultants -----------------------------------------------------------------
#
# Univariate-in-one-variable resultants over a polynomial coefficient ring.
# Coefficient vectors are dense lists (index = degree) of MultiPoly.


def _coeff_vector(p: MultiPoly, var: int):
    """Dense coefficients of p in variable `var`, over the same ring."""
    d = p.degree_in(var)
    if p.is_zero():
        return []
    out = [p.ring.zero for _ in range(d + 1)]
    for exps, c in p.terms.items():
        e = exps[var]
        cut = exps[:var] + (0,) + exps[var + 1 :]
        out[e] = out[e] + MultiPoly(p.ring, {cut: c})
    while out and out[-1].is_zero():
        out.pop()
    return out


def _vec_deg(v) -> int:
    return len(v) - 1


def _vec_scale(v, c: MultiPoly):
    return [x * c for x in v]


def _vec_sub(a, b):
    n = max(len(a), len(b))
    ring = (a or b)[0].ring
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ring.zero
        y = b[i] if i < len(b) else ring.zero
        out.append(x - y)
    while out and out[-1].is_zero():
        out.pop()
    return out


def _vec_shift(v, k: int):
    if not v:
        return v
    return [v[0].ring.zero] * k + v


def _pseudo_rem(a, b):
    """lc(b)^(deg a - deg b + 1) * a mod b, all exact."""
    da, db = _vec_deg(a), _vec_deg(b)
    lc_b = b[-1]
    r = list(a)
    for _ in range(da - db + 1):
        if not r:
            break
        if _vec_deg(r) < db:
            r = _vec_scale(r, lc_b)
            continue
        lead = r[-1]
        r = _vec_sub(_vec_scale(r, lc_b), _vec_shift(_vec_scale(b, lead), _vec_deg(r) - db))
    return r


def _resultant_prs(a, b, ring: Ring) -> MultiPoly:
    """Subresultant PRS; exact up to sign (callers normalize)."""
    if not a or not b:
        return ring.zero
    if _vec_deg(a) < _vec_deg(b):
        a, b = b, a
    if _vec_deg(b) == 0:
        return b[0] ** _vec_deg(a)
    g = ring.one
    h = ring.one
    while _vec_deg(b) > 0:
        d = _vec_deg(a) - _vec_deg(b)
        r = _pseudo_rem(a, b)
        if not r:
            return ring.zero
        divisor = g * h**d
        a, b = b, [x.exact_div(divisor) for x in r]
        g = a[-1]
        if d > 0:
            h = (g**d).exact_div(h ** (d - 1)) if d > 1 else g
    da = _vec_deg(a)
    if da == 0:
        return b[0]
    res = b[0] ** da
    if da > 1:
        res = res.exact_div(h ** (da - 1))
    return res


def _resultant_sylvester(a, b, ring: Ring) -> MultiPoly:
    m, n = _vec_deg(a), _vec_deg(b)
    if m < 0 or n < 0:
        return ring.zero
    if m == 0 and n == 0:
        return ring.one
    size = m + n
    rows = []
    for i in range(n):
        row = [ring.zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [ring.zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return det_bareiss(rows)


def resultant(f: MultiPoly, g: MultiPoly, var, method=None) -> MultiPoly:
    """Resultant of f and g with respect to one variable.

    The result lives in the same ring with that variable absent from every
    term. Sylvester determinant below degree 9, subresultant PRS above; the
    PRS branch is canonical only up to sign, so callers that print or compare
    should normalize (every caller in this package does).
    """
    if isinstance(var, str):
        var = f.ring.index[var]
    f._check(g)
    a = _coeff_vector(f, var)
    b = _coeff_vector(g, var)
    if method is None:
        method = "sylvester" if max(_vec_deg(a), _vec_deg(b)) <= 8 else "prs"
    if method == "sylvester":
        return _resultant_sylvester(a, b, f.ring)
    return _resultant_prs(a, b, f.ring)
