"""Solving reduced zero-dimensional ideals into certified points.

Points are anchored to the chart of their first nonzero coordinate and
normalized there. Inside a chart the solver finds a separating linear
functional u (deterministic candidate sequence), the squarefree annihilator
h of u on the quotient algebra, and per-coordinate polynomials c_j with
x_j = c_j(u): conjugate points travel together as one group keyed by h.
Rational roots of h split off as exact points; the rest keep certified
enclosures. Exact predicates on groups work modulo h and split the group
by gcd when a predicate separates conjugates.
"""

from __future__ import annotations

import mpmath

from .binary_forms import _trim, _u_derivative, _u_divmod, _u_gcd, _u_monic, _u_mul
from .factor import irreducible_factors_squarefree
from .ideals import Ideal
from .polynomials import MultiPoly, Ring
from .rationals import ONE, QQ, ZERO, denominator, numerator
from .roots import isolate_roots
from .zerodim import NotZeroDimensional, dehomogenize_ideal, hilbert_data, minimal_polynomial, quotient_basis


class NotReduced(Exception):
    pass


class SolveError(Exception):
    pass


def _u_add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ZERO
        y = b[i] if i < len(b) else ZERO
        out.append(x + y)
    return _trim(out)


def _u_mod(a, m):
    _, r = _u_divmod(list(a), list(m))
    return r


def _u_eval_q(poly, q):
    acc = ZERO
    for c in reversed(poly):
        acc = acc * q + c
    return acc


def _q_to_mpf(q):
    return mpmath.mpf(int(numerator(q))) / mpmath.mpf(int(denominator(q)))


def _u_eval_c(poly, z):
    acc = mpmath.mpc(0)
    for c in reversed(poly):
        acc = acc * z + _q_to_mpf(c)
    return acc


class RationalPoint:
    """Exact projective point, first nonzero coordinate scaled to 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = [QQ(c) for c in coords]
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise ValueError("zero vector")
        self.coords = tuple(c / lead for c in coords)

    @property
    def count(self) -> int:
        return 1

    def approx_points(self):
        return [tuple(mpmath.mpc(_q_to_mpf(c)) for c in self.coords)]

    def sort_key(self):
        return (0, tuple(str(c) for c in self.coords))

    def __repr__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def __eq__(self, other):
        return isinstance(other, RationalPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)


class AlgebraicPointGroup:
    """deg(h) conjugate points sharing a chart: coordinates are polynomials
    in a separating value u annihilated by the squarefree h.

    Coordinates j < chart vanish, coordinate `chart` is 1, and coordinate
    chart+1+s is coord_polys[s] evaluated at u.
    """

    __slots__ = ("dim", "chart", "minpoly", "coord_polys", "roots")

    def __init__(self, dim, chart, minpoly, coord_polys, roots=None):
        self.dim = dim  # ambient P^dim
        self.chart = chart
        self.minpoly = tuple(_u_monic(list(minpoly)))
        self.coord_polys = tuple(tuple(c) for c in coord_polys)
        if roots is None:
            roots = isolate_roots(list(self.minpoly))
        self.roots = tuple(roots)

    @property
    def count(self) -> int:
        return len(self.minpoly) - 1

    def coordinate_poly(self, j):
        """Coordinate j as a dense polynomial in u."""
        if j < self.chart:
            return []
        if j == self.chart:
            return [ONE]
        return list(self.coord_polys[j - self.chart - 1])

    def evaluate_mod(self, poly: MultiPoly):
        """poly(point) as a polynomial in u reduced mod h; the empty list iff
        poly vanishes at every point of the group."""
        h = list(self.minpoly)
        acc = []
        for e, c in poly.terms.items():
            term = [QQ(c)]
            for j, ej in enumerate(e):
                if ej == 0:
                    continue
                base = self.coordinate_poly(j)
                if not base:
                    term = []
                    break
                for _ in range(ej):
                    term = _u_mod(_u_mul(term, base), h)
                    if not term:
                        break
                if not term:
                    break
            if term:
                acc = _u_add(acc, term)
        return _u_mod(acc, h)

    def vanishes(self, poly: MultiPoly) -> bool:
        return not self.evaluate_mod(poly)

    def split_by(self, poly: MultiPoly):
        """Partition into (vanishing subgroup, nonvanishing subgroup); either
        may be None. Conjugate points with different verdicts separate here."""
        val = self.evaluate_mod(poly)
        if not val:
            return self, None
        g = _u_gcd(val, list(self.minpoly))
        if len(g) <= 1:
            return None, self
        cof, rem = _u_divmod(list(self.minpoly), g)
        if rem:
            raise ArithmeticError("gcd split left a remainder")
        return self._restrict(g), self._restrict(cof)

    def _restrict(self, new_h):
        new_coords = [_u_mod(list(c), new_h) for c in self.coord_polys]
        return AlgebraicPointGroup(self.dim, self.chart, new_h, new_coords)

    def approx_points(self):
        out = []
        for r in self.roots:
            u = mpmath.mpc(_q_to_mpf(r.rational)) if r.rational is not None else r.center
            coords = []
            for j in range(self.dim + 1):
                cp = self.coordinate_poly(j)
                coords.append(_u_eval_c(cp, u) if cp else mpmath.mpc(0))
            out.append(tuple(coords))
        return out

    def sort_key(self):
        return (1, self.chart, self.count, tuple(str(c) for c in self.minpoly))

    def __repr__(self):
        return (
            f"AlgebraicPointGroup(chart={self.chart}, deg={self.count}, "
            f"h={[str(c) for c in self.minpoly]})"
        )


def _separating_functionals(ring: Ring):
    """Deterministic candidates: last variable, then geometrically weighted
    sums of all variables."""
    m = ring.nvars
    yield ring.var(m - 1)
    for c in range(2, 67):
        acc = ring.zero
        w = 1
        for j in range(m):
            acc = acc + ring.const(w) * ring.var(j)
            w *= c
        yield acc
    raise SolveError("no separating functional found")


def _nf_vector(affine: Ideal, positions, p: MultiPoly):
    vec = [ZERO] * len(positions)
    nf = affine.normal_form(p)
    for e, c in nf.terms.items():
        vec[positions[e]] = c
    return nf, vec


def _coordinates_from_powers(u_powers, targets):
    """Solve V a = t for each target vector t, where column p of V holds the
    quotient-basis coordinates of u^p. Returns dense u-polynomials."""
    dim = len(u_powers[0])
    n_unk = len(u_powers)
    sols = []
    for target in targets:
        aug = [[u_powers[p][r] for p in range(n_unk)] + [target[r]] for r in range(dim)]
        piv_cols = []
        row = 0
        for col in range(n_unk):
            sel = next((r for r in range(row, dim) if aug[r][col] != 0), None)
            if sel is None:
                continue
            aug[row], aug[sel] = aug[sel], aug[row]
            pv = aug[row][col]
            aug[row] = [x / pv for x in aug[row]]
            for r in range(dim):
                if r != row and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
            piv_cols.append(col)
            row += 1
        if any(aug[r][n_unk] != 0 for r in range(row, dim)):
            raise SolveError("u powers do not span the quotient algebra")
        sol = [ZERO] * n_unk
        for r, col in enumerate(piv_cols):
            sol[col] = aug[r][n_unk]
        sols.append(_trim(sol))
    return sols


def _solve_affine(affine: Ideal):
    """All points of a reduced zero-dimensional affine ideal:
    (list of exact rational coordinate tuples,
     list of (squarefree minpoly, per-variable u-polynomials))."""
    ring = affine.ring
    qb = quotient_basis(affine)
    dim = len(qb)
    if dim == 0:
        return [], []
    h = None
    u = None
    for u in _separating_functionals(ring):
        h = minimal_polynomial(affine, u, qb)
        if len(h) - 1 == dim:
            break
    if h is None or len(h) - 1 != dim:
        raise SolveError("no separating functional found")
    if len(_u_gcd(list(h), _u_derivative(list(h)))) > 1:
        raise NotReduced("separating value has a repeated root")
    positions = {e: i for i, e in enumerate(qb)}
    u_powers = []
    p = ring.one
    for _ in range(dim):
        nf, vec = _nf_vector(affine, positions, p)
        u_powers.append(vec)
        p = nf * u
    targets = [_nf_vector(affine, positions, ring.var(j))[1] for j in range(ring.nvars)]
    coord_polys = _coordinates_from_powers(u_powers, targets)

    roots = isolate_roots(list(h))
    rational_pts = []
    h_alg = list(h)
    for r in roots:
        if r.rational is None:
            continue
        coords = tuple(_u_eval_q(cp, r.rational) for cp in coord_polys)
        rational_pts.append(coords)
        h_alg, rem = _u_divmod(h_alg, [-r.rational, ONE])
        if rem:
            raise ArithmeticError("rational root deflation left a remainder")
    groups = []
    if len(h_alg) > 1:
        for fac in irreducible_factors_squarefree(h_alg):
            if len(fac) == 2:
                root = -fac[0]
                rational_pts.append(
                    tuple(_u_eval_q(cp, root) for cp in coord_polys)
                )
                continue
            groups.append((fac, [_u_mod(cp, fac) for cp in coord_polys]))
    return rational_pts, groups


def solve_points(ideal: Ideal):
    """All geometric points of a reduced zero-dimensional projective scheme:
    rational points exact, the rest grouped by conjugacy with certified
    enclosures, in a deterministic order. Raises NotReduced when the point
    count disagrees with the projective degree."""
    hd = hilbert_data(ideal)
    if hd.proj_dim < 0:
        return []
    if hd.proj_dim != 0:
        raise NotZeroDimensional(f"projective dimension {hd.proj_dim}")
    ring = ideal.ring
    k = ring.nvars - 1
    out = []
    total = 0
    for chart in range(k + 1):
        if chart == k:
            # the only candidate with all earlier coordinates zero: (0:...:0:1)
            if all(_unit_vector_value(g, chart) == 0 for g in ideal.gens):
                coords = [ZERO] * (k + 1)
                coords[chart] = ONE
                out.append(RationalPoint(coords))
                total += 1
            continue
        pinned = Ideal(ring, list(ideal.gens) + [ring.var(j) for j in range(chart)])
        aff = dehomogenize_ideal(pinned, chart)
        if aff.is_unit():
            continue
        rational_pts, groups = _solve_affine(aff)
        # affine variable order is ring.names without the chart name
        for coords in rational_pts:
            point = [ZERO] * (k + 1)
            point[chart] = ONE
            for j in range(k + 1):
                if j != chart:
                    point[j] = coords[j if j < chart else j - 1]
            out.append(RationalPoint(point))
            total += 1
        for h_alg, coord_polys in groups:
            tail = [coord_polys[j - 1] for j in range(chart + 1, k + 1)]
            grp = AlgebraicPointGroup(k, chart, h_alg, tail)
            out.append(grp)
            total += grp.count
    if total != hd.degree:
        raise NotReduced(
            f"found {total} geometric points on a scheme of degree {hd.degree}"
        )
    out.sort(key=lambda p: p.sort_key())
    return out


def _unit_vector_value(g: MultiPoly, chart: int):
    """g evaluated at the chart-th standard basis vector."""
    acc = ZERO
    for e, c in g.terms.items():
        if all(ej == 0 for j, ej in enumerate(e) if j != chart):
            acc = acc + c
    return acc


def _charpoly(rows):
    """Characteristic polynomial of an exact square matrix, dense ascending,
    monic, by the Faddeev-LeVerrier recurrence."""
    d = len(rows)
    work = None
    cs = []
    for k in range(1, d + 1):
        if k == 1:
            mk = [row[:] for row in rows]
        else:
            # M_k = M (M_{k-1} + c_{k-1} I)
            shifted = [
                [work[i][j] + (cs[-1] if i == j else ZERO) for j in range(d)]
                for i in range(d)
            ]
            mk = [
                [
                    sum((rows[i][l] * shifted[l][j] for l in range(d)), ZERO)
                    for j in range(d)
                ]
                for i in range(d)
            ]
        tr = sum((mk[i][i] for i in range(d)), ZERO)
        ck = -tr / QQ(k)
        cs.append(ck)
        work = mk
    dense = [None] * (d + 1)
    dense[d] = ONE
    for k, ck in enumerate(cs, start=1):
        dense[d - k] = ck
    return dense


def _mult_matrix_mod(h, val):
    """Matrix (rows) of multiplication by val on the basis 1, w, ..., w^{d-1}
    of Q[w]/h."""
    d = len(h) - 1
    rows = [[ZERO] * d for _ in range(d)]
    power = [ONE]
    for j in range(d):
        prod = _u_mod(_u_mul(list(val), power), list(h))
        for i, c in enumerate(prod):
            rows[i][j] = c
        power = _u_mod(_u_mul(power, [ZERO, ONE]), list(h))
    return rows


def value_charpoly(group: AlgebraicPointGroup, poly: MultiPoly):
    """Product over the group of (T - poly(P)) as a dense ascending monic
    polynomial: the characteristic polynomial of multiplication by poly's
    value on Q[w]/h. Exact."""
    val = group.evaluate_mod(poly)
    return _charpoly(_mult_matrix_mod(list(group.minpoly), val))


def _separating_on_reduced(affine: Ideal):
    """(u, h, qb) with u separating on the reduced affine scheme: the
    annihilator h of u is squarefree of degree equal to the point count."""
    qb = quotient_basis(affine)
    dim = len(qb)
    for u in _separating_functionals(affine.ring):
        h = minimal_polynomial(affine, u, qb)
        if len(h) - 1 == dim:
            return u, h, qb
    raise SolveError("no separating functional found")


def _mult_matrix_on_quotient(affine: Ideal, qb, u: MultiPoly):
    positions = {e: i for i, e in enumerate(qb)}
    d = len(qb)
    rows = [[ZERO] * d for _ in range(d)]
    ring = affine.ring
    for j, e in enumerate(qb):
        b = MultiPoly(ring, {e: ONE})
        nf = affine.normal_form(b * u)
        for mono, c in nf.terms.items():
            rows[positions[mono]][j] = c
    return rows


def _compose_univariate(coeffs, inner: MultiPoly):
    """coeffs[0] + coeffs[1]*inner + ... as a polynomial in inner's ring."""
    ring = inner.ring
    acc = ring.zero
    power = ring.one
    for c in coeffs:
        acc = acc + power * ring.const(c)
        power = power * inner
    return acc


def _lift_linear(u_affine: MultiPoly, full_ring: Ring, chart: int) -> MultiPoly:
    """Reinterpret a linear form in the chart's affine variables inside the
    full homogeneous ring (the dropped chart variable gets no term)."""
    terms = {}
    k = full_ring.nvars
    for e, c in u_affine.terms.items():
        new_e = [0] * k
        for j, ej in enumerate(e):
            if ej:
                proj = j if j < chart else j + 1
                new_e[proj] = ej
        terms[tuple(new_e)] = c
    return MultiPoly(full_ring, terms)


def _peel_lengths(group: AlgebraicPointGroup, sep_form: MultiPoly, cpoly, base=0):
    """Split a group by local length, peeling its charpoly factor. cpoly is
    the characteristic polynomial of the separating value on the full
    (possibly non-reduced) chart algebra; its roots at the group's points
    appear with their local lengths as multiplicities."""
    q = value_charpoly(group, sep_form)
    m = 0
    rest = list(cpoly)
    while True:
        quo, rem = _u_divmod(list(rest), list(q))
        if rem:
            break
        rest = quo
        m += 1
    if m == 0:
        raise ArithmeticError("group points missing from the chart algebra")
    overshoot = _u_gcd(rest, q)
    if len(overshoot) <= 1:
        return [(group, base + m)]
    longer, exact = group.split_by(_compose_univariate(overshoot, sep_form))
    out = []
    if exact is not None:
        out.append((exact, base + m))
    if longer is not None:
        out.extend(_peel_lengths(longer, sep_form, rest, base + m))
    return out


def local_lengths(ideal: Ideal, solved):
    """Local length of the (possibly non-reduced) zero-dimensional scheme at
    every point of its support. `solved` is solve_points of the radical.
    Groups may split when conjugate points of the squarefree key happen to
    carry different lengths. Returns [(point-or-group, length), ...] in the
    order of `solved` (split pieces in peel order)."""
    from .zerodim import local_length as rational_local_length

    out = []
    chart_cache = {}
    for p in solved:
        if isinstance(p, RationalPoint):
            out.append((p, rational_local_length(ideal, p.coords)))
            continue
        chart = p.chart
        if chart not in chart_cache:
            aff = dehomogenize_ideal(ideal, chart)
            qb_full = quotient_basis(aff)
            from .zerodim import radical_zero_dim_affine

            reduced = radical_zero_dim_affine(aff)
            u, _, _ = _separating_on_reduced(reduced)
            cpoly = _charpoly(_mult_matrix_on_quotient(aff, qb_full, u))
            chart_cache[chart] = (u, cpoly)
        u, cpoly = chart_cache[chart]
        sep_form = _lift_linear(u, ideal.ring, chart)
        out.extend(_peel_lengths(p, sep_form, cpoly))
    return out


def orbit_ideal_affine(group: AlgebraicPointGroup, aff_ring: Ring):
    """Generators of the radical vanishing ideal of the group's points in its
    anchor chart (the affine ring without the chart variable), found by
    kernel linear algebra in degrees up to the group size."""
    d = group.count
    k = group.dim
    h = list(group.minpoly)
    # coordinate value of each affine variable as a u-polynomial
    coord_vals = []
    for j_aff in range(k):
        proj = j_aff if j_aff < group.chart else j_aff + 1
        coord_vals.append(group.coordinate_poly(proj))

    monos = _monomials_up_to(k, d)
    images = []
    for e in monos:
        val = [ONE]
        for j, ej in enumerate(e):
            for _ in range(ej):
                val = _u_mod(_u_mul(val, coord_vals[j]), h) if coord_vals[j] else []
                if not val:
                    break
            if not val:
                break
        images.append(val)
    # nullspace of the d x len(monos) evaluation matrix
    rows = [[img[r] if r < len(img) else ZERO for img in images] for r in range(d)]
    ncols = len(monos)
    piv_of_col = [-1] * ncols
    rank = 0
    for col in range(ncols):
        sel = next((r for r in range(rank, d) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(d):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        piv_of_col[col] = rank
        rank += 1
    gens = []
    for col in range(ncols):
        if piv_of_col[col] != -1:
            continue
        # free column: monomial col minus pivot combination
        terms = {monos[col]: ONE}
        for c2 in range(ncols):
            r = piv_of_col[c2]
            if r != -1 and rows[r][col] != 0:
                terms[monos[c2]] = -rows[r][col]
        gens.append(MultiPoly(aff_ring, terms))
    return gens


def _monomials_up_to(nvars: int, max_deg: int):
    out = []

    def rec(prefix, remaining, slot):
        if slot == nvars:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slot + 1)

    rec([], max_deg, 0)
    # fixed deterministic order: by total degree then lexicographic
    out.sort(key=lambda e: (sum(e), e))
    return out
