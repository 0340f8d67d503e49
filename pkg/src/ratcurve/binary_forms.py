"""Homogeneous forms in two parameters (s, t) with exact coefficients.

A form of degree n is a dense list of n+1 rationals, entry p holding the
coefficient of s^(n-p) t^p. The chart trick used throughout: factor out the
pure powers of s and t, and what remains has nonzero first and last
coefficients, so its roots in the projective line all live in the t/s chart
and univariate gcd/squarefree algorithms apply without loss.
"""

from __future__ import annotations

from .rationals import ONE, QQ, ZERO


# -- dense univariate helpers over the rationals --------------------------------


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _u_deg(c: list) -> int:
    return len(c) - 1


def _u_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def _u_divmod(a: list, b: list):
    if not b:
        raise ZeroDivisionError
    r = list(a)
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    inv = 1 / QQ(b[-1])
    while len(r) >= len(b):
        c = r[-1] * inv
        k = len(r) - len(b)
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] = r[k + j] - c * y
        _trim(r)
        if not r:
            break
    return _trim(q), r


def _u_monic(a: list) -> list:
    if not a:
        return a
    inv = 1 / QQ(a[-1])
    return [x * inv for x in a]


def _u_gcd(a: list, b: list) -> list:
    a, b = list(a), list(b)
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    return _u_monic(a)


def _u_derivative(a: list) -> list:
    return _trim([a[i] * i for i in range(1, len(a))])


def _u_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ZERO
        y = b[i] if i < len(b) else ZERO
        out.append(x - y)
    return _trim(out)


def _u_squarefree_yun(f: list):
    """Yun's algorithm: [(squarefree factor, multiplicity)], factors monic."""
    if _u_deg(f) < 1:
        return []
    fp = _u_derivative(f)
    a = _u_gcd(f, fp)
    b, _ = _u_divmod(f, a)
    c, _ = _u_divmod(fp, a)
    d = _u_sub(c, _u_derivative(b))
    out = []
    i = 1
    while _u_deg(b) > 0:
        a = _u_gcd(b, d)
        if _u_deg(a) > 0:
            out.append((a, i))
        b, _ = _u_divmod(b, a)
        c, _ = _u_divmod(d, a)
        d = _u_sub(c, _u_derivative(b))
        i += 1
    return out


# -- binary forms ------------------------------------------------------------------


class BinaryForm:
    """Exact homogeneous form in two variables of a fixed degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [QQ(c) for c in coeffs]
        if not cs:
            raise ValueError("a form needs at least one coefficient")
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @staticmethod
    def zero(degree: int) -> "BinaryForm":
        return BinaryForm([ZERO] * (degree + 1))

    @staticmethod
    def linear(a, b) -> "BinaryForm":
        """The linear form vanishing at the projective point (a : b)."""
        return BinaryForm([QQ(b), -QQ(a)])

    @staticmethod
    def from_univariate(coeffs: list, degree: int, t_shift: int = 0) -> "BinaryForm":
        """Rebuild t^t_shift * sum(c_i s^(d-i) t^i) padded with s to `degree`.

        Entry p of a form's coefficient tuple sits on s^(deg-p) t^p, so a
        multiplication by t shifts indices up and the s padding is implicit
        in the target degree.
        """
        out = [ZERO] * (degree + 1)
        for i, c in enumerate(coeffs):
            out[i + t_shift] = QQ(c)
        return BinaryForm(out)

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "BinaryForm":
        return BinaryForm([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [ZERO] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinaryForm(out)
        c = QQ(other)
        return BinaryForm([c * x for x in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BinaryForm":
        result = BinaryForm([ONE])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, s, t):
        s, t = QQ(s), QQ(t)
        total = ZERO
        n = self.degree
        for p, c in enumerate(self.coeffs):
            if c != 0:
                total = total + c * s ** (n - p) * t**p
        return total

    def derivative_s(self) -> "BinaryForm":
        n = self.degree
        if n == 0:
            return BinaryForm([ZERO])
        return BinaryForm([self.coeffs[p] * (n - p) for p in range(n)])

    def derivative_t(self) -> "BinaryForm":
        n = self.degree
        if n == 0:
            return BinaryForm([ZERO])
        return BinaryForm([self.coeffs[p] * p for p in range(1, n + 1)])

    # -- chart decomposition -------------------------------------------------------

    def split(self):
        """(a, b, core): self = s^a * t^b * core, core with nonzero ends.

        A zero coefficient on t^degree means every term carries an s, so
        trailing zeros count the s power; leading zeros count the t power.
        The zero form returns (0, 0, []).
        """
        if self.is_zero():
            return 0, 0, []
        cs = list(self.coeffs)
        a = 0
        while cs and cs[-1] == 0:
            cs.pop()
            a += 1
        b = 0
        while cs and cs[0] == 0:
            cs.pop(0)
            b += 1
        # core index i corresponds to s^(core_deg - i) t^i
        return a, b, cs

    def normalized(self) -> "BinaryForm":
        """Integer-primitive with positive first nonzero coefficient."""
        if self.is_zero():
            return self
        from math import gcd

        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            num_gcd = gcd(num_gcd, abs(int(c.numerator)))
            d = int(c.denominator)
            den_lcm = den_lcm // gcd(den_lcm, d) * d
        scale = QQ(den_lcm, num_gcd)
        first = next(c for c in self.coeffs if c != 0)
        if first < 0:
            scale = -scale
        return BinaryForm([c * scale for c in self.coeffs])

    def exact_div(self, other: "BinaryForm") -> "BinaryForm":
        """Quotient form when `other` divides self exactly."""
        if other.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return BinaryForm.zero(self.degree - other.degree)
        a1, b1, core1 = self.split()
        a2, b2, core2 = other.split()
        if a2 > a1 or b2 > b1:
            raise ArithmeticError("not an exact division")
        q, r = _u_divmod(core1, core2)
        if r:
            raise ArithmeticError("not an exact division")
        deg_q = self.degree - other.degree
        return BinaryForm.from_univariate(q, deg_q, t_shift=b1 - b2)

    def divides(self, other: "BinaryForm") -> bool:
        try:
            other.exact_div(self)
            return True
        except ArithmeticError:
            return False

    def __repr__(self):
        names = ("s", "t")
        n = self.degree
        parts = []
        for p, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = []
            if n - p:
                mono.append(f"s^{n - p}" if n - p > 1 else "s")
            if p:
                mono.append(f"t^{p}" if p > 1 else "t")
            m = "*".join(mono)
            if m:
                if c == 1:
                    parts.append(m)
                elif c == -1:
                    parts.append(f"-{m}")
                else:
                    parts.append(f"{c}*{m}")
            else:
                parts.append(str(c))
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Greatest common divisor, normalized primitive."""
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    a1, b1, core1 = f.split()
    a2, b2, core2 = g.split()
    core = _u_gcd(core1, core2)
    a, b = min(a1, a2), min(b1, b2)
    deg = a + b + _u_deg(core)
    return BinaryForm.from_univariate(core, deg, t_shift=b).normalized()


def gcd_many(forms) -> BinaryForm:
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise ValueError("gcd of all-zero family")
    acc = forms[0].normalized()
    for f in forms[1:]:
        if acc.degree == 0:
            break
        acc = binary_gcd(acc, f)
    return acc


def squarefree_decomposition(f: BinaryForm):
    """[(factor, multiplicity)] with factors normalized, product recovering
    f up to a rational scalar. Pure s and t powers come out as factors too."""
    if f.is_zero():
        raise ValueError("zero form")
    a, b, core = f.split()
    out = []
    if a:
        out.append((BinaryForm([ONE, ZERO]), a))  # the form s
    if b:
        out.append((BinaryForm([ZERO, ONE]), b))  # the form t
    deg_core = _u_deg(core)
    if deg_core > 0:
        for part, mult in _u_squarefree_yun(core):
            form = BinaryForm.from_univariate(part, _u_deg(part)).normalized()
            out.append((form, mult))
    return out


def squarefree_part(f: BinaryForm) -> BinaryForm:
    acc = BinaryForm([ONE])
    for factor, _ in squarefree_decomposition(f):
        acc = acc * factor
    return acc.normalized()
