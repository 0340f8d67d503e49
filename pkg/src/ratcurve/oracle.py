"""Independent verification oracle: implicit equation by linear algebra.

The implicit equation of a properly parameterized degree-n plane curve is
the unique (up to scale) ternary form F of degree n with F(f0, f1, f2)
identically zero. That uniqueness turns implicitization into a nullspace
problem over the rationals: one matrix whose columns are lexicographic
degree-n monomials in the plane coordinates and whose rows are coefficients
of the composed binary forms. No elimination theory is involved, so the
result cross-checks the Groebner-based pipeline from an unrelated direction.
"""

from __future__ import annotations

from .binary_forms import BinaryForm
from .curves import CurveParam
from .points import AlgebraicPointGroup, RationalPoint
from .polynomials import MultiPoly
from .rationals import ONE, QQ, ZERO
from .secant import plane_ring


class OracleError(Exception):
    pass


def _degree_monomials(degree: int):
    """Exponent triples (e0, e1, e2) summing to degree, deterministic order."""
    out = []
    for e0 in range(degree, -1, -1):
        for e1 in range(degree - e0, -1, -1):
            out.append((e0, e1, degree - e0 - e1))
    return out


def _nullspace(rows, ncols):
    """Basis of the right nullspace of an exact matrix, reduced echelon
    parameterization (free columns in ascending order)."""
    work = [list(r) for r in rows]
    nrows = len(work)
    piv_of_col = [-1] * ncols
    rank = 0
    for col in range(ncols):
        sel = next((r for r in range(rank, nrows) if work[r][col] != 0), None)
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        pv = work[rank][col]
        work[rank] = [x / pv for x in work[rank]]
        for r in range(nrows):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        piv_of_col[col] = rank
        rank += 1
    basis = []
    for col in range(ncols):
        if piv_of_col[col] != -1:
            continue
        vec = [ZERO] * ncols
        vec[col] = ONE
        for c2 in range(ncols):
            r = piv_of_col[c2]
            if r != -1 and work[r][col] != 0:
                vec[c2] = -work[r][col]
        basis.append(vec)
    return basis


def compose_with_curve(form: MultiPoly, curve: CurveParam) -> BinaryForm:
    """form(f0, f1, f2) as a binary form; zero exactly when form vanishes on
    the image curve (for homogeneous input)."""
    n = curve.degree
    fs = curve.forms
    deg = form.total_degree()
    # cache powers of each coordinate form
    powers = []
    for f in fs:
        cache = [BinaryForm.from_univariate([ONE], 0)]
        for _ in range(deg):
            cache.append(cache[-1] * f)
        powers.append(cache)
    acc = BinaryForm.zero(deg * n)
    for e, c in form.terms.items():
        term = powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]
        scaled = BinaryForm([c * x for x in term.coeffs])
        acc = acc + scaled
    return acc


def implicitize(curve: CurveParam) -> MultiPoly:
    """The implicit equation of the image curve: primitive integer
    coefficients, deterministic sign, degree n. Raises OracleError when the
    degree-n equation is not unique (the parameterization was not proper)."""
    n = curve.degree
    monos = _degree_monomials(n)
    ring = plane_ring()
    cols = []
    for e in monos:
        composed = compose_with_curve(MultiPoly(ring, {e: ONE}), curve)
        cols.append(composed.coeffs)
    height = n * n + 1
    rows = [[cols[j][i] for j in range(len(monos))] for i in range(height)]
    basis = _nullspace(rows, len(monos))
    if len(basis) == 0:
        raise OracleError("no degree-n equation vanishes on the curve")
    if len(basis) > 1:
        raise OracleError(
            "implicit equation is not unique: parameterization is not proper"
        )
    terms = {e: c for e, c in zip(monos, basis[0]) if c != 0}
    result = MultiPoly(ring, terms).primitive()
    if result.total_degree() != n or not result.is_homogeneous():
        raise OracleError("implicit equation has the wrong degree")
    if not compose_with_curve(result, curve).is_zero():
        raise OracleError("implicit equation fails to vanish on the curve")
    return result


def _partial(form: MultiPoly, var: int) -> MultiPoly:
    terms = {}
    for e, c in form.terms.items():
        if e[var] == 0:
            continue
        ne = list(e)
        ne[var] -= 1
        terms[tuple(ne)] = c * QQ(e[var])
    return MultiPoly(form.ring, terms)


def _partials_of_order(form: MultiPoly, order: int):
    """One representative per mixed partial of the given order (they
    commute, so a sorted variable multiset keys each one)."""
    current = {(): form}
    for _ in range(order):
        nxt = {}
        for key, g in current.items():
            for v in range(form.ring.nvars):
                nk = tuple(sorted(key + (v,)))
                if nk not in nxt:
                    nxt[nk] = _partial(g, v)
        current = nxt
    return list(current.values())


def verify_singular(form: MultiPoly, point, multiplicity: int) -> bool:
    """True when every partial derivative of order < multiplicity vanishes at
    the point (exact evaluation; groups check all conjugates at once)."""
    for order in range(multiplicity):
        for g in _partials_of_order(form, order):
            if g.is_zero():
                continue
            if isinstance(point, RationalPoint):
                if _eval_rational(g, point.coords) != 0:
                    return False
            elif isinstance(point, AlgebraicPointGroup):
                if not point.vanishes(g):
                    return False
            else:
                raise TypeError(f"unsupported point type {type(point)!r}")
    return True


def _eval_rational(g: MultiPoly, coords):
    acc = ZERO
    for e, c in g.terms.items():
        term = c
        for v, ev in zip(coords, e):
            for _ in range(ev):
                term = term * v
        acc = acc + term
    return acc
