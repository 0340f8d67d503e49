"""Dimension, degree and radical machinery for the schemes in play.

Hilbert data comes from the initial ideal: the numerator of the Hilbert
series of a monomial ideal satisfies N(I + (p)) = N(I) - t^deg(p) N(I : p),
which with memoization and a most-frequent-variable pivot handles the
staircases appearing here comfortably. Radicals of zero-dimensional ideals
use squarefree parts of per-variable minimal polynomials on affine charts
(an ideal containing a squarefree univariate polynomial in every variable is
radical), with minimal polynomials computed by exact linear algebra on the
quotient basis rather than by elimination.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .binary_forms import _u_squarefree_yun
from .ideals import Ideal, colon, intersect_many, saturate
from .orders import GrevLex
from .polynomials import MultiPoly, Ring, homogenize
from .rationals import ONE, QQ, ZERO


class NotZeroDimensional(Exception):
    pass


# -- Hilbert series of monomial ideals -------------------------------------------


def _minimalize_monomials(gens):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(m, g)) for m in out):
            out.append(g)
    return tuple(out)


@lru_cache(maxsize=200000)
def _hilbert_numerator(gens: tuple) -> tuple:
    """Numerator of HS(R/I) over (1-t)^nvars, as a tuple of coefficients
    (index = degree). `gens` must be minimalized monomials."""
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()
    if len(gens) == 1:
        d = sum(gens[0])
        out = [0] * (d + 1)
        out[0] = 1
        out[d] = -1
        return tuple(out)
    # pairwise coprime supports: product of (1 - t^deg)
    supports = [tuple(i for i, e in enumerate(g) if e) for g in gens]
    flat = [i for s in supports for i in s]
    if len(flat) == len(set(flat)):
        poly = [1]
        for g in gens:
            d = sum(g)
            nxt = [0] * (len(poly) + d)
            for i, c in enumerate(poly):
                nxt[i] += c
                nxt[i + d] -= c
            poly = nxt
        while poly and poly[-1] == 0:
            poly.pop()
        return tuple(poly)
    # pivot on the most frequent variable
    nvars = len(gens[0])
    counts = [0] * nvars
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    v = max(range(nvars), key=lambda i: counts[i])
    e = min(g[v] for g in gens if g[v])
    pivot = tuple(e if i == v else 0 for i in range(nvars))
    # I + (pivot)
    plus = _minimalize_monomials(gens + (pivot,))
    # I : pivot
    quot = _minimalize_monomials(
        tuple(tuple(max(0, x - p) for x, p in zip(g, pivot)) for g in gens)
    )
    np_ = _hilbert_numerator(plus)
    nq = _hilbert_numerator(quot)
    out = [0] * max(len(np_), len(nq) + e)
    for i, c in enumerate(np_):
        out[i] += c
    for i, c in enumerate(nq):
        out[i + e] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _divide_one_minus_t(poly: list):
    """poly / (1-t) when exact (poly(1) == 0), else None."""
    if sum(poly) != 0:
        return None
    out = []
    acc = 0
    for c in poly[:-1]:
        acc += c
        out.append(acc)
    while out and out[-1] == 0:
        out.pop()
    return out


class HilbertData:
    """Projective dimension, degree and Hilbert polynomial of R/I."""

    __slots__ = ("proj_dim", "degree", "hp_coeffs")

    def __init__(self, proj_dim: int, degree: int, hp_coeffs: tuple):
        self.proj_dim = proj_dim  # -1 for the empty projective scheme
        self.degree = degree
        self.hp_coeffs = hp_coeffs  # ascending, exact rationals

    def hp_str(self) -> str:
        if not self.hp_coeffs:
            return "0"
        names = {0: "", 1: "*d"}
        parts = []
        for i in range(len(self.hp_coeffs) - 1, -1, -1):
            c = self.hp_coeffs[i]
            if c == 0:
                continue
            suffix = names.get(i, f"*d^{i}")
            parts.append(f"{c}{suffix}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self):
        return f"HilbertData(dim={self.proj_dim}, deg={self.degree}, HP={self.hp_str()})"


def hilbert_data(ideal: Ideal) -> HilbertData:
    if not ideal.is_homogeneous():
        raise ValueError("Hilbert data needs a homogeneous ideal")
    gb = ideal.groebner()
    nvars = ideal.ring.nvars
    if not gb:
        leads: tuple = ()
    else:
        leads = tuple(g.leading_exps() for g in gb)
    num = list(_hilbert_numerator(_minimalize_monomials(leads)))
    if not num:
        return HilbertData(-1, 0, ())
    c = 0
    while True:
        q = _divide_one_minus_t(num)
        if q is None:
            break
        num = q
        c += 1
        if not num:
            break
    cone_dim = nvars - c
    if cone_dim <= 0:
        return HilbertData(-1, 0, ())
    degree = sum(num)
    r = cone_dim
    # HP(d) = sum_j num[j] * C(d - j + r - 1, r - 1)
    hp = [ZERO] * r
    for j, cj in enumerate(num):
        if cj == 0:
            continue
        # expand prod_{i=1}^{r-1} (d - j + i) / (r-1)!
        poly = [ONE]
        for i in range(1, r):
            shift = QQ(i - j)
            poly = [ZERO] + poly  # multiply by d
            for idx in range(len(poly) - 1):
                poly[idx] = poly[idx] + shift * poly[idx + 1]
        fact = 1
        for i in range(2, r):
            fact *= i
        for idx, coeff in enumerate(poly):
            hp[idx] = hp[idx] + QQ(cj) * coeff / fact
    while hp and hp[-1] == 0:
        hp.pop()
    return HilbertData(cone_dim - 1, degree, tuple(hp))


def is_irrelevant(ideal: Ideal) -> bool:
    """True when the projective scheme cut by the ideal is empty."""
    return hilbert_data(ideal).proj_dim < 0


def projective_degree(ideal: Ideal) -> int:
    return hilbert_data(ideal).degree


# -- affine zero-dimensional structure --------------------------------------------


def quotient_basis(ideal: Ideal):
    """Standard monomials of the grevlex initial ideal; raises when the
    affine quotient is not finite-dimensional."""
    gb = ideal.groebner()
    if not gb:
        raise NotZeroDimensional("zero ideal")
    leads = [g.leading_exps() for g in gb]
    n = ideal.ring.nvars
    if len(leads) == 1 and sum(leads[0]) == 0:
        return []
    bounds = [None] * n
    for e in leads:
        nz = [i for i in range(n) if e[i]]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
    if any(b is None for b in bounds):
        raise NotZeroDimensional("no pure power in some variable")
    out = []
    stack = [(0,) * n]
    seen = {(0,) * n}
    while stack:
        m = stack.pop()
        if any(all(x >= y for x, y in zip(m, lead)) for lead in leads):
            continue
        out.append(m)
        for i in range(n):
            if m[i] + 1 < bounds[i] + 1:
                nxt = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    out.sort(key=lambda e: (sum(e), e))
    return out


def _nf_vector(ideal: Ideal, p: MultiPoly, positions: dict):
    v = [ZERO] * len(positions)
    nf = ideal.normal_form(p)
    for e, c in nf.terms.items():
        v[positions[e]] = c
    return v, nf


def minimal_polynomial(ideal: Ideal, p: MultiPoly, qbasis=None):
    """Monic minimal polynomial of p acting on the finite quotient algebra,
    as a dense coefficient list (ascending)."""
    qb = quotient_basis(ideal) if qbasis is None else qbasis
    positions = {e: i for i, e in enumerate(qb)}
    dim = len(qb)
    # rows: echelonized vectors of 1, p, p^2, ... with tracking coefficients
    pivots = {}  # column -> (vector, combo)
    power = ideal.ring.one
    combos = []
    m = 0
    while True:
        vec, power_nf = _nf_vector(ideal, power, positions)
        combo = [ZERO] * (dim + 2)
        combo[m] = ONE
        # eliminate
        for col in range(dim):
            if vec[col] == 0:
                continue
            hit = pivots.get(col)
            if hit is None:
                continue
            pv, pc = hit
            f = vec[col] / pv[col]
            for i in range(col, dim):
                vec[i] = vec[i] - f * pv[i]
            for i in range(len(combo)):
                combo[i] = combo[i] - f * pc[i]
        lead_col = next((i for i in range(dim) if vec[i] != 0), None)
        if lead_col is None:
            # dependency: combo gives the minimal polynomial
            coeffs = combo[: m + 1]
            inv = 1 / coeffs[m]
            return [c * inv for c in coeffs]
        pivots[lead_col] = (vec, combo)
        m += 1
        if m > dim:
            raise RuntimeError("minimal polynomial exceeded quotient dimension")
        power = ideal.normal_form(power_nf * p)


def radical_zero_dim_affine(ideal: Ideal) -> Ideal:
    """Seidenberg: adjoin the squarefree part of each variable's minimal
    polynomial."""
    qb = quotient_basis(ideal)
    ring = ideal.ring
    extra = []
    for i in range(ring.nvars):
        mp = minimal_polynomial(ideal, ring.var(i), qb)
        if len(mp) <= 1:
            continue
        sq = [ONE]
        for factor, _ in _u_squarefree_yun(mp):
            out = [ZERO] * (len(sq) + len(factor) - 1)
            for a, ca in enumerate(sq):
                for b, cb in enumerate(factor):
                    out[a + b] = out[a + b] + ca * cb
            sq = out
        if len(sq) == len(mp):
            continue  # already squarefree
        poly = MultiPoly.from_terms(
            ring,
            [
                (tuple(d if j == i else 0 for j in range(ring.nvars)), c)
                for d, c in enumerate(sq)
            ],
        )
        extra.append(poly)
    if not extra:
        return ideal
    return Ideal(ring, list(ideal.gens) + extra)


# -- projective points: radical and lengths ----------------------------------------


def _chart_ring(ring: Ring, i: int) -> Ring:
    return Ring(ring.names[:i] + ring.names[i + 1 :])


def dehomogenize_ideal(ideal: Ideal, chart: int) -> Ideal:
    cr = _chart_ring(ideal.ring, chart)
    return Ideal(cr, [g.dehomogenize(chart, cr) for g in ideal.gens])


def _rehomogenize(affine: Ideal, full_ring: Ring, chart: int) -> Ideal:
    """Homogenize a grevlex basis; valid for the projective closure because
    grevlex is degree-compatible."""
    gb = affine.groebner()
    return Ideal(full_ring, [homogenize(g, full_ring, chart) for g in gb])


def irrelevant_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, list(ring.gens()))


def radical_projective_points(ideal: Ideal) -> Ideal:
    """Radical of a homogeneous ideal whose projective locus is finite.

    Chart by chart: dehomogenize, take the affine radical, rehomogenize.
    When one chart carries the full degree it alone answers; otherwise the
    answer is the intersection over all charts (every point is visible in
    some chart, and the irrelevant component never survives any chart).
    """
    ring = ideal.ring
    hd = hilbert_data(ideal)
    if hd.proj_dim < 0:
        return irrelevant_ideal(ring)
    if hd.proj_dim != 0:
        raise NotZeroDimensional(f"projective dimension {hd.proj_dim}")
    total = hd.degree
    parts = []
    for chart in range(ring.nvars):
        aff = dehomogenize_ideal(ideal, chart)
        if aff.is_unit():
            continue
        qb = quotient_basis(aff)
        rad = radical_zero_dim_affine(aff)
        reh = _rehomogenize(rad, ring, chart)
        if len(qb) == total:
            return Ideal(ring, reh.groebner())
        parts.append(reh)
    if not parts:
        return irrelevant_ideal(ring)
    out = intersect_many(parts)
    return Ideal(ring, out.groebner())


def point_ideal(ring: Ring, coords) -> Ideal:
    """Homogeneous ideal of a single rational projective point."""
    coords = [QQ(c) for c in coords]
    if len(coords) != ring.nvars or all(c == 0 for c in coords):
        raise ValueError("bad point")
    gens = []
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            g = coords[j] * ring.var(i) - coords[i] * ring.var(j)
            if not g.is_zero():
                gens.append(g)
    return Ideal(ring, gens)


def local_length(ideal: Ideal, coords) -> int:
    """Length of the component of the finite scheme at a rational point:
    the drop in degree after saturating the point away."""
    hd = hilbert_data(ideal)
    if hd.proj_dim < 0:
        return 0
    if hd.proj_dim != 0:
        raise NotZeroDimensional(f"projective dimension {hd.proj_dim}")
    mp = point_ideal(ideal.ring, coords)
    sat = saturate(ideal, mp)
    rest = hilbert_data(sat)
    remaining = 0 if rest.proj_dim < 0 else rest.degree
    return hd.degree - remaining


def is_curvilinear_at(ideal: Ideal, coords) -> bool:
    """Embedding dimension at the point is at most one: adding the squared
    maximal ideal leaves local length at most 2."""
    mp = point_ideal(ideal.ring, coords)
    sq = Ideal(ideal.ring, [a * b for a in mp.gens for b in mp.gens])
    return local_length(ideal + sq, coords) <= 2


def colon_degree_chain(ideal: Ideal, divisor):
    """Degrees of the successive colons of a finite scheme, until they
    stabilize (the stabilized value repeats once at the end).

    `divisor` is what each step colons by: an Ideal, a polynomial, or the
    coordinates of a rational point (meaning its vanishing ideal).
    """
    if isinstance(divisor, Ideal):
        mp = divisor
    elif isinstance(divisor, MultiPoly):
        mp = Ideal(ideal.ring, [divisor])
    else:
        mp = point_ideal(ideal.ring, divisor)
    current = ideal
    hd = hilbert_data(current)
    if hd.proj_dim > 0:
        raise NotZeroDimensional(f"projective dimension {hd.proj_dim}")
    chain = [0 if hd.proj_dim < 0 else hd.degree]
    while True:
        current = colon(current, mp)
        hd = hilbert_data(current)
        deg = 0 if hd.proj_dim < 0 else hd.degree
        chain.append(deg)
        if deg == chain[-2]:
            return chain
