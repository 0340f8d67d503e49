"""Degree-n maps P^1 -> P^2 and the validity checks the pipeline relies on.

A parameterization is three binary forms of one degree with no common
factor. Generic one-to-one behavior (away from finitely many parameters) is
decided exactly: for each pair of coordinates the two-point form
(f_u(s,t) f_v(u,v) - f_v(s,t) f_u(u,v)) / (sv - tu) is a biform whose common
zero locus with its siblings off the diagonal marks identified parameter
pairs; the map fails to be generically injective only when the three share
a common factor, which is detected by specializing one point at more values
than the shared-factor degree bound allows.
"""

from __future__ import annotations

from .binary_forms import BinaryForm, binary_gcd, gcd_many, squarefree_decomposition
from .rationals import ONE, QQ, ZERO


class CurveError(Exception):
    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


class CurveParam:
    """A validated rational plane curve parameterization."""

    __slots__ = ("forms", "degree")

    def __init__(self, f0: BinaryForm, f1: BinaryForm, f2: BinaryForm):
        forms = (f0, f1, f2)
        degs = {f.degree for f in forms if not f.is_zero()}
        if not degs or len(degs) != 1 or any(f.is_zero() for f in forms):
            # a zero coordinate is fine only if the other two share its degree
            nz = [f for f in forms if not f.is_zero()]
            if len(nz) < 2 or len({f.degree for f in nz}) != 1:
                raise CurveError("DegreeMismatch", "coordinates must share one degree")
        n = max(f.degree for f in forms if not f.is_zero())
        if n < 3:
            raise CurveError("DegreeTooSmall", f"degree {n} < 3")
        g = gcd_many([f for f in forms if not f.is_zero()])
        if g.degree > 0:
            raise CurveError(
                "CommonFactor", f"coordinates share the factor {g}"
            )
        self.forms = forms
        self.degree = n

    def evaluate(self, s, t):
        return tuple(f.evaluate(s, t) for f in self.forms)

    def coefficient_rows(self):
        """Rows a[u][p], u = 0..2, p = 0..n, padding zero coordinates."""
        n = self.degree
        rows = []
        for f in self.forms:
            c = list(f.coeffs) + [ZERO] * (n + 1 - len(f.coeffs))
            rows.append(tuple(c))
        return tuple(rows)


def cross_form(f: BinaryForm, g: BinaryForm):
    """(f(s,t) g(u,v) - g(s,t) f(u,v)) / (sv - tu) as a matrix Q[i][j] of
    coefficients of s^(n-1-i) t^i u^(n-1-j) v^j. The quotient is exact: the
    numerator vanishes on the diagonal, and sv - tu is irreducible."""
    n = max(f.degree, g.degree)
    fc = list(f.coeffs) + [ZERO] * (n + 1 - len(f.coeffs))
    gc = list(g.coeffs) + [ZERO] * (n + 1 - len(g.coeffs))

    def N(p, q):
        return fc[p] * gc[q] - gc[p] * fc[q]

    # N[p][q] on s^(n-p) t^p u^(n-q) v^q; matching exponents in
    # N = Q * (sv - tu) gives N(p, q) = Q[p][q-1] - Q[p-1][q]
    Q = [[ZERO] * n for _ in range(n)]
    for p in range(n):
        for q in range(1, n + 1):
            prev = Q[p - 1][q] if (p >= 1 and q < n) else ZERO
            Q[p][q - 1] = N(p, q) + prev
    # divisibility is a theorem; still, verify the product reconstructs N
    def q_at(p, q):
        return Q[p][q] if 0 <= p < n and 0 <= q < n else ZERO

    for p in range(n + 1):
        for q in range(n + 1):
            if N(p, q) != q_at(p, q - 1) - q_at(p - 1, q):
                raise ArithmeticError("diagonal division failed")
    return Q


def _specialize_u(Q, u, v):
    """Plug (u, v) into the second point of a cross-form matrix: a binary
    form in (s, t) of degree n-1."""
    n = len(Q)
    pw_u = [ONE]
    pw_v = [ONE]
    for _ in range(n - 1):
        pw_u.append(pw_u[-1] * u)
        pw_v.append(pw_v[-1] * v)
    coeffs = []
    for i in range(n):
        acc = ZERO
        for j in range(n):
            acc = acc + Q[i][j] * pw_u[n - 1 - j] * pw_v[j]
        coeffs.append(acc)
    return BinaryForm(coeffs)


def is_generically_injective(curve: CurveParam) -> bool:
    """Exact yes/no, no genericity assumptions.

    For a fixed second point (u:v), the common roots in (s:t) of the three
    cross-forms are exactly the other parameters hitting the same image
    point. A many-to-one map identifies partners with every (u:v), so every
    specialization leaves a nonconstant gcd; a birational map has at most
    (n-1)(n-2) parameters landing on singular points, so among any
    (n-1)(n-2) + 1 sampled values one must yield a constant gcd.
    """
    n = curve.degree
    f0, f1, f2 = curve.forms
    crosses = [cross_form(f0, f1), cross_form(f0, f2), cross_form(f1, f2)]
    budget = (n - 1) * (n - 2) + 1
    val = 0
    tried = 0
    while tried < budget:
        u, v = QQ(val), ONE
        val += 1
        specs = [_specialize_u(Q, u, v) for Q in crosses]
        specs = [f for f in specs if not f.is_zero()]
        if not specs:
            continue  # degenerate sample, does not count against the budget
        tried += 1
        if gcd_many(specs).degree == 0:
            return True
    return False


def validate_proper(curve: CurveParam) -> None:
    """Raise NotProper when the parameterization is a nontrivial cover of
    its image."""
    if not is_generically_injective(curve):
        raise CurveError(
            "NotProper", "parameterization traverses its image multiple times"
        )


def preimage_divisor_profile(form: BinaryForm):
    """Root multiplicity profile of a binary form with rational
    coefficients, counting the roots at s=0 and t=0."""
    mults = []
    for factor, m in squarefree_decomposition(form):
        mults.extend([m] * factor.degree)
    return tuple(sorted(mults, reverse=True))
