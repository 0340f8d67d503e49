"""Certified numeric root isolation for exact univariate polynomials.

Simultaneous (Aberth-Ehrlich) iteration at controlled precision, restarted
at higher precision until every root carries a certified isolating disc:
with n pairwise disjoint discs each containing at least one root of a
squarefree degree-n polynomial, every disc holds exactly one root and every
root lies in some disc. Realness and conjugate pairing are then decided
rigorously from disc geometry, and rational roots are recognized from the
enclosures, verified exactly and deflated, so exact and numeric data never
disagree.
"""

from __future__ import annotations

import mpmath

from .rationals import QQ, ZERO, denominator, numerator


class RootIsolationError(Exception):
    pass


def _to_mpf(q):
    return mpmath.mpf(int(numerator(q))) / mpmath.mpf(int(denominator(q)))


def _poly_eval(coeffs, x):
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _initial_points(n, radius):
    """Deterministic start on a circle; the fixed angle offset avoids the
    real-axis symmetry trap."""
    pts = []
    for k in range(n):
        theta = mpmath.mpf(2) * mpmath.pi * k / n + mpmath.mpf("0.3761263890318")
        pts.append(radius * mpmath.mpc(mpmath.cos(theta), mpmath.sin(theta)))
    return pts


def _aberth(coeffs_q, prec, max_iter=500):
    """Approximate all roots of a squarefree rational polynomial at `prec`
    working bits. No certificates here."""
    deg = len(coeffs_q) - 1
    with mpmath.workprec(prec):
        coeffs = [_to_mpf(c) for c in coeffs_q]
        dcoeffs = [coeffs[i] * i for i in range(1, len(coeffs))]
        lead = coeffs[-1]
        radius = 1 + max(abs(c / lead) for c in coeffs[:-1])
        z = _initial_points(deg, radius)
        tol = mpmath.mpf(2) ** (-(prec - 8))
        for _ in range(max_iter):
            moved = mpmath.mpf(0)
            for i in range(deg):
                p = _poly_eval(coeffs, z[i])
                dp = _poly_eval(dcoeffs, z[i])
                if dp == 0:
                    z[i] = z[i] + tol
                    moved = max(moved, tol)
                    continue
                newton = p / dp
                s = mpmath.mpc(0)
                for j in range(deg):
                    if j != i:
                        d = z[i] - z[j]
                        if d == 0:
                            d = mpmath.mpc(tol)
                        s += 1 / d
                denom = 1 - newton * s
                step = newton if denom == 0 else newton / denom
                z[i] = z[i] - step
                moved = max(moved, abs(step))
            scale = max(max(abs(w) for w in z), mpmath.mpf(1))
            if moved < tol * scale:
                break
        return z


class IsolatedRoot:
    """One certified root. Either `rational` is set (exact value), or
    `center`/`radius` describe an isolating disc at `prec` bits together
    with a definite `is_real` flag."""

    __slots__ = ("center", "radius", "prec", "rational", "is_real")

    def __init__(self, center, radius, prec, rational=None, is_real=None):
        self.center = center
        self.radius = radius
        self.prec = prec
        self.rational = rational
        self.is_real = is_real if rational is None else True

    def approx(self):
        if self.rational is not None:
            return mpmath.mpc(_to_mpf(self.rational))
        return self.center

    def __repr__(self):
        if self.rational is not None:
            return f"IsolatedRoot({self.rational})"
        tag = "real" if self.is_real else "nonreal"
        return f"IsolatedRoot({mpmath.nstr(self.center, 12)}, r<{mpmath.nstr(self.radius, 3)}, {tag})"


def _eval_exact(coeffs_q, value):
    acc = ZERO
    for c in reversed(coeffs_q):
        acc = acc * value + c
    return acc


def _deflate_exact(coeffs_q, root):
    out = []
    acc = ZERO
    for c in reversed(coeffs_q):
        acc = acc * root + c
        out.append(acc)
    if out[-1] != 0:
        raise ArithmeticError("deflation by a non-root")
    rev = out[:-1]
    rev.reverse()
    return rev


def _try_rational(coeffs_q, center, radius):
    """Continued-fraction convergents of the real part, accepted only on
    exact verification. Caller must hold the right working precision."""
    if abs(mpmath.im(center)) > radius:
        return None
    x = mpmath.re(center)
    a = int(mpmath.floor(x))
    h_prev, h = 1, a
    k_prev, k = 0, 1
    frac = x - a
    for _ in range(200):
        cand = QQ(h, k)
        delta = abs(_to_mpf(cand) - x)
        if delta <= radius * 4 and _eval_exact(coeffs_q, cand) == 0:
            return cand
        if frac == 0 or k > 10**60:
            break
        inv = 1 / frac
        a = int(mpmath.floor(inv))
        frac = inv - a
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return None


def _certify(coeffs_q, z, prec):
    """Try to certify the approximations: disjoint inclusion discs plus a
    definite real/nonreal verdict per root. Returns list of
    (center, radius, is_real) or None when certification fails at this
    precision."""
    deg = len(coeffs_q) - 1
    with mpmath.workprec(prec):
        coeffs = [_to_mpf(c) for c in coeffs_q]
        dcoeffs = [coeffs[i] * i for i in range(1, len(coeffs))]
        radii = []
        # inflate against floating-point rounding; a zero radius only means
        # the residual underflowed at working precision
        inflate = 1 + mpmath.mpf(2) ** (-prec + 32)
        for w in z:
            p = _poly_eval(coeffs, w)
            dp = _poly_eval(dcoeffs, w)
            if dp == 0:
                return None
            floor_r = mpmath.mpf(2) ** (-prec + 16) * max(mpmath.mpf(1), abs(w))
            radii.append(max(deg * abs(p / dp) * inflate, floor_r))
        for i in range(deg):
            for j in range(i + 1, deg):
                if abs(z[i] - z[j]) <= radii[i] + radii[j]:
                    return None
        out = []
        for i in range(deg):
            im = mpmath.im(z[i])
            if abs(im) > radii[i]:
                out.append((z[i], radii[i], False))
                continue
            # recenter on the axis: a disc centered on the real line holding
            # exactly one root of a real polynomial holds a real root
            c2 = mpmath.mpc(mpmath.re(z[i]), 0)
            r2 = radii[i] + abs(im)
            for j in range(deg):
                if j != i and abs(c2 - z[j]) <= r2 + radii[j]:
                    return None
            out.append((z[i], radii[i], True))
        return out


def isolate_roots(coeffs_q, start_prec: int = 256, max_prec: int = 8192):
    """Certified isolation of all roots of a squarefree polynomial with
    rational coefficients (dense ascending list). Rational roots come back
    exact; the rest carry pairwise disjoint discs and definite realness."""
    coeffs_q = [QQ(c) for c in coeffs_q]
    while coeffs_q and coeffs_q[-1] == 0:
        coeffs_q.pop()
    if not coeffs_q:
        raise RootIsolationError("zero polynomial")
    exact = []
    prec = start_prec
    while True:
        deg = len(coeffs_q) - 1
        if deg == 0:
            return exact
        if deg == 1:
            exact.append(
                IsolatedRoot(None, None, prec, rational=-coeffs_q[0] / coeffs_q[1])
            )
            return exact
        z = _aberth(coeffs_q, prec)
        with mpmath.workprec(prec):
            cert = _certify(coeffs_q, z, prec)
            if cert is not None:
                deflated = False
                for center, radius, is_real in cert:
                    if not is_real:
                        continue
                    q = _try_rational(coeffs_q, center, radius)
                    if q is not None:
                        exact.append(IsolatedRoot(None, None, prec, rational=q))
                        coeffs_q = _deflate_exact(coeffs_q, q)
                        deflated = True
                        break
                if deflated:
                    continue
                return exact + [
                    IsolatedRoot(c, r, prec, is_real=flag) for c, r, flag in cert
                ]
        prec *= 2
        if prec > max_prec:
            raise RootIsolationError(
                f"could not certify isolation below {max_prec} bits"
            )


def conjugate_partner(roots, i):
    """Index j with root_j certifiably equal to the conjugate of root_i.

    The conjugate of root_i is itself a root and lies in the mirrored disc;
    if that disc meets exactly one isolating disc, the match is rigorous
    (every root lies in exactly one disc). Rational roots partner with
    themselves."""
    a = roots[i]
    if a.rational is not None or a.is_real:
        return i
    with mpmath.workprec(a.prec):
        mirror = mpmath.conj(a.center)
        hits = []
        for j, b in enumerate(roots):
            if b.rational is not None:
                continue
            if abs(mirror - b.center) <= a.radius + b.radius:
                hits.append(j)
        if len(hits) == 1:
            return hits[0]
    raise RootIsolationError("conjugate pairing ambiguous at this precision")
