"""End-to-end singularity analysis of a parameterized plane rational curve.

The analysis is organized as lazy stages over one exact object: the schemes
of contracted degree-k divisors on the parameter line. Everything a caller
can ask for — how many singular points of each multiplicity, where they are,
how the preimage parameters split into branches, the A-type of each double
point, reality of each point — is derived from those schemes along three
independent routes that must agree:

  * orbit route: solve the divisor schemes into Galois orbits and read
    profiles, norms, and lengths off each orbit;
  * stratum route: intersect with coincidence strata and count by ideal
    degrees, with a downward subtraction recursion;
  * plane route: project the secant spans to the plane and peel the
    multiplicity filtration by ideal quotients.

Route disagreements raise InternalInconsistency: they mean a bug, not bad
input. Checks that depend on an open conjecture are reported per point as a
verification status instead of raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import mpmath

from .binary_forms import (
    BinaryForm,
    _u_divmod,
    binary_gcd,
    squarefree_decomposition,
    squarefree_part,
)
from .curves import CurveParam, validate_proper
from .fieldpoly import fp_deg, fp_squarefree_decomposition, fp_trim
from .ideals import Ideal, colon, intersect_many, saturate
from .numeric import (
    AmbiguousCluster,
    classify_clusters,
    cluster_preimages,
    fubini_study,
)
from .oracle import compose_with_curve, implicitize, verify_singular
from .partitions import Partition, merges, partitions_of, sub_profile_count
from .points import (
    AlgebraicPointGroup,
    RationalPoint,
    _mult_matrix_mod,
    _u_add,
    local_lengths,
    orbit_ideal_affine,
    solve_points,
)
from .polynomials import MultiPoly, Ring, homogenize
from .rationals import ONE, QQ, ZERO
from .secant import (
    conic_polynomial,
    contracted_divisors_ideal,
    contracted_spans_ideal,
    plane_image_ideal,
    plane_ring,
    preimage_form_gcd,
    stratum_ideal,
)
from .zerodim import (
    dehomogenize_ideal,
    irrelevant_ideal,
    is_curvilinear_at,
    is_irrelevant,
    local_length,
    point_ideal,
    projective_degree,
    quotient_basis,
    radical_projective_points,
)


class InternalInconsistency(Exception):
    """Two independent routes disagreed; indicates a bug, never bad input."""


class NegativeCount(Exception):
    pass


class GlobalDeltaMismatch(Exception):
    pass


class DivisibilityFailure(Exception):
    pass


VERIFIED = "verified"


@dataclass
class AnalysisOptions:
    precision_bits: int = 256
    cluster_tol: float = 1e-8
    stratum_cache: str | None = None
    oracle: bool = True


@dataclass
class DivisorOrbit:
    """One Galois orbit of contracted degree-`level` divisors."""

    level: int
    point: object  # RationalPoint | AlgebraicPointGroup in the divisor space
    count: int
    profile: Partition  # root multiplicities of each divisor in the orbit
    norm_form: BinaryForm  # product of the divisor forms over the orbit
    induced: bool  # is each divisor part of a higher-multiplicity preimage
    scheme_length: int | None  # local length of the level-2 scheme (level 2)


@dataclass
class RealityInfo:
    approx: tuple  # one plane point, complex coordinates
    kind: str  # real_on_curve | acnode | hidden | nonreal


@dataclass
class SingularPoint:
    """One Galois orbit of singular points of the plane curve."""

    multiplicity: int
    point: object  # RationalPoint | AlgebraicPointGroup in the plane
    count: int
    branch_profile: Partition
    delta_invariant: int
    delta_exact: bool
    a_type: str | None
    on_conic: bool | None
    verification: str
    flags: list = field(default_factory=list)
    reality: list | None = None
    orbit: DivisorOrbit | None = None
    pair_orbits: list = field(default_factory=list)

    def locations(self):
        return self.point.approx_points()


@dataclass
class MultiplicityFiltration:
    at_least: dict  # k -> radical plane ideal of points of multiplicity >= k
    exact: dict  # k -> radical plane ideal of points of multiplicity == k
    counts: dict  # k -> number of geometric points of multiplicity == k


@dataclass
class CuspidalSummary:
    cuspidal: bool
    ordinary_only: bool
    cusp_count: int


# -- small exact helpers -----------------------------------------------------------


def _det_qq(rows):
    m = [list(r) for r in rows]
    n = len(m)
    det = ONE
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = det * m[c][c]
        lead = m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / lead
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def _interpolate(xs, ys):
    """Dense coefficients of the unique polynomial through (xs, ys), Newton
    divided differences."""
    n = len(xs)
    coef = [QQ(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[-1]]
    for i in range(n - 2, -1, -1):
        shifted = [ZERO] + poly
        scaled = [-xs[i] * c for c in poly]
        poly = _u_add(shifted, scaled)
        poly = _u_add(poly, [coef[i]])
    return poly


def _norm_form(point, level) -> BinaryForm:
    """Product over the orbit of the degree-`level` forms the points stand
    for; rational over Q by symmetry, computed by interpolating field norms."""
    if isinstance(point, RationalPoint):
        return BinaryForm(list(point.coords))
    h = list(point.minpoly)
    d = point.count
    degree = level * d
    xs = []
    ys = []
    for j in range(degree + 1):
        tau = QQ(j)
        val = []
        power = ONE
        for i in range(level + 1):
            cp = point.coordinate_poly(i)
            if cp:
                val = _u_add(val, [c * power for c in cp])
            power = power * tau
        val = _u_divmod(val, h)[1] if val else []
        ys.append(_det_qq(_mult_matrix_mod(h, val)) if val else ZERO)
        xs.append(tau)
    coeffs = _interpolate(xs, ys)
    return BinaryForm.from_univariate(coeffs, degree)


def _profile_of_form(g: BinaryForm) -> Partition:
    parts = []
    for factor, mult in squarefree_decomposition(g):
        parts.extend([mult] * factor.degree)
    return Partition(parts)


def _orbit_profile(group: AlgebraicPointGroup, level: int) -> Partition:
    """Root-multiplicity profile shared by every divisor in the orbit, read
    from a squarefree decomposition over the orbit's number field."""
    h = list(group.minpoly)
    taupoly = fp_trim([group.coordinate_poly(i) for i in range(level + 1)])
    parts = []
    finite_degree = len(taupoly) - 1
    if finite_degree < level:
        parts.append(level - finite_degree)  # root where the form's top binary coefficient vanishes
    for part, mult in fp_squarefree_decomposition(taupoly, h):
        parts.extend([mult] * fp_deg(part))
    profile = Partition(parts)
    if profile.size != level:
        raise InternalInconsistency(
            f"orbit profile {profile} does not sum to the level {level}"
        )
    return profile


def _proportional(a: BinaryForm, b: BinaryForm) -> bool:
    return a.normalized() == b.normalized()


def _chart_of(point) -> int:
    if isinstance(point, RationalPoint):
        return next(i for i, c in enumerate(point.coords) if c != 0)
    return point.chart


def _plane_point_generators(point, ring: Ring):
    """Homogeneous generators cutting the orbit (plus possibly part of its
    chart hyperplane, excluded separately by the chart guard)."""
    if isinstance(point, RationalPoint):
        return point_ideal(ring, point.coords).gens
    from .zerodim import _chart_ring

    aff_ring = _chart_ring(ring, point.chart)
    gens = orbit_ideal_affine(point, aff_ring)
    return tuple(homogenize(g, ring, point.chart) for g in gens)


class CurveAnalysis:
    """Lazy exact analysis of the singular points of one proper curve."""

    def __init__(self, curve: CurveParam, options: AnalysisOptions | None = None):
        validate_proper(curve)
        self.curve = curve
        self.options = options or AnalysisOptions()
        self._memo = {}

    def _cached(self, key, fn):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    # -- divisor-side schemes ------------------------------------------------------

    def divisor_scheme(self, k: int) -> Ideal:
        """Ideal of contracted degree-k divisors (not saturated, possibly
        non-reduced)."""
        return self._cached(
            ("scheme", k), lambda: contracted_divisors_ideal(self.curve, k)
        )

    def top_multiplicity(self) -> int:
        def scan():
            for k in range(self.curve.degree - 1, 1, -1):
                if not is_irrelevant(self.divisor_scheme(k)):
                    return k
            raise InternalInconsistency(
                "no singular point found; impossible for degree >= 3"
            )

        return self._cached("top", scan)

    def divisor_support(self, k: int) -> Ideal:
        return self._cached(
            ("support", k),
            lambda: radical_projective_points(self.divisor_scheme(k)),
        )

    def spans_ideal(self, k: int) -> Ideal:
        """Union of the secant spans through the supported divisors, in the
        coordinates of the carrier rational normal curve."""
        return self._cached(
            ("spans", k),
            lambda: contracted_spans_ideal(self.divisor_support(k), self.curve.degree),
        )

    # -- preimage forms -------------------------------------------------------------

    def preimage_form(self, k: int) -> BinaryForm:
        """Binary form whose roots are the parameters over singular points of
        multiplicity >= k; constant above the top multiplicity."""

        def build():
            if k > self.top_multiplicity():
                return BinaryForm([ONE])
            form = preimage_form_gcd(self.spans_ideal(k), self.curve.degree)
            higher = self.preimage_form(k + 1)
            if not higher.divides(form):
                raise DivisibilityFailure(
                    f"preimage form at level {k + 1} does not divide level {k}"
                )
            return form

        return self._cached(("preimage", k), build)

    def preimage_forms(self) -> dict:
        return {
            k: self.preimage_form(k) for k in range(2, self.top_multiplicity() + 1)
        }

    # -- orbit route ------------------------------------------------------------------

    def divisor_orbits(self, k: int) -> list:
        return self._cached(("orbits", k), lambda: self._build_orbits(k))

    def _build_orbits(self, k: int):
        support = self.divisor_support(k)
        if is_irrelevant(support):
            return []
        solved = solve_points(support)
        lengths = {}
        if k == 2:
            measured = local_lengths(self.divisor_scheme(2), solved)
            if len(measured) != len(solved):
                raise InternalInconsistency(
                    "a Galois orbit split while measuring local lengths"
                )
            for p, (piece, length) in zip(solved, measured):
                if piece.count != p.count:
                    raise InternalInconsistency(
                        "a Galois orbit split while measuring local lengths"
                    )
                lengths[id(p)] = length
        next_support = squarefree_part(self.preimage_form(k + 1))
        orbits = []
        for p in solved:
            norm = _norm_form(p, k)
            sqf_norm = squarefree_part(norm)
            if sqf_norm.divides(next_support):
                induced = True
            elif binary_gcd(sqf_norm, next_support).degree == 0:
                induced = False
            else:
                raise InternalInconsistency(
                    "orbit neither fully inside nor fully outside the "
                    "next-level preimage support"
                )
            if isinstance(p, RationalPoint):
                profile = _profile_of_form(BinaryForm(list(p.coords)))
            else:
                profile = _orbit_profile(p, k)
            orbits.append(
                DivisorOrbit(
                    level=k,
                    point=p,
                    count=p.count,
                    profile=profile,
                    norm_form=norm,
                    induced=induced,
                    scheme_length=lengths.get(id(p)),
                )
            )
        if k == 2:
            expected = comb(self.curve.degree - 1, 2)
            total = sum(o.scheme_length * o.count for o in orbits)
            if projective_degree(self.divisor_scheme(2)) != expected:
                raise InternalInconsistency(
                    "double-divisor scheme degree differs from the binomial bound"
                )
            if total != expected:
                raise InternalInconsistency(
                    "local lengths of the double-divisor scheme do not sum "
                    "to its degree"
                )
        return orbits

    # -- stratum route (counts by coincidence profile) ---------------------------------

    def _stratum(self, k: int, lam: Partition) -> Ideal:
        return self._cached(
            ("stratum", k, lam),
            lambda: stratum_ideal(k, lam, self.options.stratum_cache),
        )

    def raw_profile_counts(self) -> dict:
        """(level, profile) -> number of supported divisors with exactly that
        root profile (induced or not), by stratum intersections."""

        def build():
            out = {}
            for k in range(2, self.top_multiplicity() + 1):
                support = self.divisor_support(k)
                empty = is_irrelevant(support)
                for lam in partitions_of(k):
                    if empty:
                        out[(k, lam)] = 0
                        continue
                    meet = radical_projective_points(support + self._stratum(k, lam))
                    if is_irrelevant(meet):
                        out[(k, lam)] = 0
                        continue
                    covers = merges(lam)
                    if covers:
                        finer = intersect_many(
                            [self._stratum(k, mu) for mu in covers]
                        )
                        meet = saturate(meet, finer)
                    out[(k, lam)] = (
                        0 if is_irrelevant(meet) else projective_degree(meet)
                    )
            return out

        return self._cached("raw_counts", build)

    def exact_profile_counts(self) -> dict:
        """(level, profile) -> number of singular points of that exact
        multiplicity and branch profile: the raw counts minus what higher
        multiplicities induce."""

        def build():
            raw = self.raw_profile_counts()
            top = self.top_multiplicity()
            exact = {}
            for k in range(top, 1, -1):
                for sigma in partitions_of(k):
                    value = raw[(k, sigma)]
                    for kk in range(k + 1, top + 1):
                        for lam in partitions_of(kk):
                            c = exact.get((kk, lam), 0)
                            if c:
                                value -= c * sub_profile_count(lam, sigma)
                    if value < 0:
                        raise NegativeCount(
                            f"subtraction drove the count at level {k}, "
                            f"profile {sigma} to {value}"
                        )
                    exact[(k, sigma)] = value
            self._cross_check_profiles(raw, exact)
            return exact

        return self._cached("exact_counts", build)

    def _cross_check_profiles(self, raw, exact):
        for k in range(2, self.top_multiplicity() + 1):
            orbits = self.divisor_orbits(k)
            for lam in partitions_of(k):
                all_count = sum(o.count for o in orbits if o.profile == lam)
                non_induced = sum(
                    o.count for o in orbits if o.profile == lam and not o.induced
                )
                if all_count != raw[(k, lam)]:
                    raise InternalInconsistency(
                        f"orbit route counts {all_count} divisors at level {k} "
                        f"profile {lam}, stratum route counts {raw[(k, lam)]}"
                    )
                if non_induced != exact[(k, lam)]:
                    raise InternalInconsistency(
                        f"orbit route counts {non_induced} exact points at "
                        f"level {k} profile {lam}, recursion gives "
                        f"{exact[(k, lam)]}"
                    )

    # -- plane route -----------------------------------------------------------------

    def multiplicity_filtration(self) -> MultiplicityFiltration:
        def build():
            top = self.top_multiplicity()
            at_least = {}
            for k in range(2, top + 1):
                image = plane_image_ideal(self.curve, self.spans_ideal(k))
                at_least[k] = radical_projective_points(image)
            at_least[top + 1] = irrelevant_ideal(plane_ring())
            exact = {}
            counts = {}
            for k in range(2, top + 1):
                exact[k] = colon(at_least[k], at_least[k + 1])
                counts[k] = (
                    0 if is_irrelevant(exact[k]) else projective_degree(exact[k])
                )
            return MultiplicityFiltration(at_least, exact, counts)

        return self._cached("filtration", build)

    def singular_ideal(self) -> Ideal:
        """Radical plane ideal of all singular points."""
        return self.multiplicity_filtration().at_least[2]

    def multiplicity_counts(self) -> dict:
        """k -> number of singular points of multiplicity exactly k, from the
        plane route, cross-checked against the orbit route."""

        def build():
            counts = dict(self.multiplicity_filtration().counts)
            for k, n_k in counts.items():
                orbit_count = sum(
                    o.count for o in self.divisor_orbits(k) if not o.induced
                )
                if orbit_count != n_k:
                    raise InternalInconsistency(
                        f"plane route counts {n_k} points of multiplicity {k}, "
                        f"orbit route counts {orbit_count}"
                    )
            return counts

        return self._cached("counts", build)

    # -- assembling per-point records ---------------------------------------------------

    def _matches(self, orbit: DivisorOrbit, plane_point) -> bool:
        sqf_norm = squarefree_part(orbit.norm_form)
        chart = _chart_of(plane_point)
        chart_form = self.curve.forms[chart]
        if binary_gcd(sqf_norm, chart_form).degree != 0:
            return False
        tested = 0
        for q in _plane_point_generators(plane_point, plane_ring()):
            pulled = compose_with_curve(q, self.curve)
            if pulled.is_zero():
                continue
            tested += 1
            if not sqf_norm.divides(pulled):
                return False
        if tested == 0:
            raise InternalInconsistency(
                "all generators of a plane point pull back to zero"
            )
        return True

    def singular_points(self) -> list:
        return self._cached("records", self._build_records)

    def _build_records(self):
        filtration = self.multiplicity_filtration()
        counts = self.multiplicity_counts()
        top = self.top_multiplicity()
        records = []
        matched_orbits = {}
        for k in range(top, 1, -1):
            if counts.get(k, 0) == 0:
                continue
            plane_points = solve_points(filtration.exact[k])
            exact_orbits = [o for o in self.divisor_orbits(k) if not o.induced]
            if sum(p.count for p in plane_points) != sum(
                o.count for o in exact_orbits
            ):
                raise InternalInconsistency(
                    f"point and divisor counts disagree at multiplicity {k}"
                )
            used = set()
            for p in plane_points:
                hits = [
                    i
                    for i, o in enumerate(exact_orbits)
                    if i not in used and self._matches(o, p)
                ]
                if len(hits) != 1:
                    raise InternalInconsistency(
                        f"{len(hits)} divisor orbits project onto one plane "
                        f"point of multiplicity {k}"
                    )
                used.add(hits[0])
                orbit = exact_orbits[hits[0]]
                if orbit.count != p.count:
                    raise InternalInconsistency(
                        "matched orbit and plane point have different sizes"
                    )
                rec = SingularPoint(
                    multiplicity=k,
                    point=p,
                    count=p.count,
                    branch_profile=orbit.profile,
                    delta_invariant=0,
                    delta_exact=(k == 2),
                    a_type=None,
                    on_conic=None,
                    verification=VERIFIED,
                    orbit=orbit,
                )
                records.append(rec)
                matched_orbits[id(orbit)] = rec
            if len(used) != len(exact_orbits):
                raise InternalInconsistency(
                    f"unmatched divisor orbits at multiplicity {k}"
                )
        self._attach_pair_orbits(records, matched_orbits)
        self._attach_delta(records)
        self._classify_doubles(records)
        records.sort(key=lambda r: (-r.multiplicity, r.point.sort_key()))
        return records

    def _attach_pair_orbits(self, records, matched_orbits):
        """Every level-2 orbit belongs to exactly one singular point: its own
        double point if not induced, a higher-multiplicity point otherwise."""
        higher = [r for r in records if r.multiplicity >= 3]
        for orbit in self.divisor_orbits(2):
            if not orbit.induced:
                rec = matched_orbits.get(id(orbit))
                if rec is None:
                    raise InternalInconsistency(
                        "non-induced double orbit missing from the records"
                    )
                rec.pair_orbits.append(orbit)
                continue
            hits = [r for r in higher if self._matches(orbit, r.point)]
            if len(hits) != 1:
                raise InternalInconsistency(
                    f"induced double orbit projects onto {len(hits)} "
                    "higher-multiplicity points"
                )
            hits[0].pair_orbits.append(orbit)

    def _attach_delta(self, records):
        total = 0
        for rec in records:
            weighted = sum(o.scheme_length * o.count for o in rec.pair_orbits)
            if weighted % rec.count:
                raise InternalInconsistency(
                    "delta weight is not constant across a Galois orbit"
                )
            rec.delta_invariant = weighted // rec.count
            total += weighted
            if rec.multiplicity >= 3:
                rec.flags.append(
                    "delta is heuristic at multiplicity >= 3 (validated only "
                    "through the global sum)"
                )
        expected = comb(self.curve.degree - 1, 2)
        if total != expected:
            raise GlobalDeltaMismatch(
                f"delta invariants sum to {total}, expected {expected}"
            )

    def _classify_doubles(self, records):
        doubles = [r for r in records if r.multiplicity == 2]
        if not doubles:
            return
        mixed = any(r.multiplicity >= 3 for r in records)
        pull, image, product_ok = self._verification_data()
        for rec in doubles:
            orbit = rec.orbit
            m = orbit.scheme_length
            rec.on_conic = orbit.profile == Partition((2,))
            rec.a_type = f"A_{2 * m}" if rec.on_conic else f"A_{2 * m - 1}"
            rec.delta_invariant = m
            problems = []
            if not product_ok:
                if not (orbit.norm_form ** m).divides(pull):
                    problems.append("divisor shape of the projected pencil")
            if not self._projected_length_ok(image, rec.point, m):
                problems.append("projected scheme length")
            elif not self._projected_curvilinear_ok(image, rec.point):
                problems.append("projected scheme curvilinearity")
            if problems:
                rec.verification = "inconclusive (" + "; ".join(problems) + ")"
            elif mixed:
                rec.flags.append(
                    "classified under the double-point hypothesis; curve has "
                    "higher-multiplicity points"
                )

    def _verification_data(self):
        def build():
            n = self.curve.degree
            spans = contracted_spans_ideal(self.divisor_scheme(2), n)
            pull = preimage_form_gcd(spans, n)
            image = plane_image_ideal(self.curve, spans)
            product = BinaryForm([ONE])
            for orbit in self.divisor_orbits(2):
                product = product * orbit.norm_form ** orbit.scheme_length
            product_ok = _proportional(pull, product)
            return pull, image, product_ok

        return self._cached("verification", build)

    def _projected_length_ok(self, image: Ideal, point, m: int) -> bool:
        if isinstance(point, RationalPoint):
            return local_length(image, point.coords) == m
        measured = local_lengths(image, [point])
        return (
            len(measured) == 1
            and measured[0][0].count == point.count
            and measured[0][1] == m
        )

    def _projected_curvilinear_ok(self, image: Ideal, point) -> bool:
        if isinstance(point, RationalPoint):
            return is_curvilinear_at(image, point.coords)
        from .zerodim import _chart_ring

        aff = dehomogenize_ideal(image, point.chart)
        gens = orbit_ideal_affine(point, aff.ring)
        squares = [a * b for i, a in enumerate(gens) for b in gens[i:]]
        thick = aff + Ideal(aff.ring, squares)
        return len(quotient_basis(thick)) <= 2 * point.count

    # -- curve-level summaries ---------------------------------------------------------

    def cuspidal_summary(self) -> CuspidalSummary:
        def build():
            support = self.divisor_support(2)
            conic = conic_polynomial(support.ring)
            cuspidal = support.contains(conic)
            reduced = projective_degree(self.divisor_scheme(2)) == projective_degree(
                support
            )
            meet = radical_projective_points(
                support + Ideal(support.ring, [conic])
            )
            on_conic = 0 if is_irrelevant(meet) else projective_degree(meet)
            ordinary = reduced and on_conic == 0
            return CuspidalSummary(cuspidal, ordinary, on_conic)

        return self._cached("cuspidal", build)

    def clebsch_equality(self) -> bool:
        counts = self.multiplicity_counts()
        lhs = comb(self.curve.degree - 1, 2)
        rhs = sum(n_k * comb(k, 2) for k, n_k in counts.items())
        return lhs == rhs

    def has_infinitely_near_points(self) -> bool:
        return not self.clebsch_equality()

    # -- numeric reality stage -----------------------------------------------------------

    def reality(self) -> list:
        """Singular point records with reality classifications attached."""
        return self._cached("reality", self._attach_reality)

    def _attach_reality(self):
        records = self.singular_points()
        expected = []
        for rec in records:
            expected.extend([len(rec.branch_profile)] * rec.count)
        roots, clusters, centers = cluster_preimages(
            self.curve,
            self.preimage_form(2),
            expected,
            precision_bits=self.options.precision_bits,
            cluster_tol=self.options.cluster_tol,
        )
        kinds = classify_clusters(roots, clusters)
        with mpmath.workprec(self.options.precision_bits):
            targets = []
            for rec in records:
                rec.reality = [None] * rec.count
                for idx, ap in enumerate(rec.point.approx_points()):
                    targets.append((rec, idx, ap))
            tol = mpmath.mpf(self.options.cluster_tol)
            taken = set()
            for center, info, cluster in zip(centers, kinds, clusters):
                dists = [
                    (fubini_study(center, ap), j)
                    for j, (_, _, ap) in enumerate(targets)
                ]
                dists.sort(key=lambda t: t[0])
                best, j = dists[0]
                if best > tol or j in taken:
                    raise AmbiguousCluster(
                        "cluster does not align with exactly one exact point"
                    )
                taken.add(j)
                rec, idx, _ = targets[j]
                if len(cluster) != len(rec.branch_profile):
                    raise AmbiguousCluster(
                        "cluster size disagrees with the branch count"
                    )
                rec.reality[idx] = RealityInfo(
                    approx=tuple(complex(c) for c in center), kind=info.real_type
                )
            if len(taken) != len(targets):
                raise AmbiguousCluster("unmatched singular points remain")
        return records

    # -- independent implicit-equation oracle ----------------------------------------------

    def implicit_equation(self) -> MultiPoly:
        return self._cached("implicit", lambda: implicitize(self.curve))

    def oracle_check(self) -> bool:
        """Every reported point really has the reported multiplicity on the
        implicit equation."""

        def run():
            form = self.implicit_equation()
            for rec in self.singular_points():
                if not verify_singular(form, rec.point, rec.multiplicity):
                    raise InternalInconsistency(
                        f"implicit equation rejects a reported multiplicity-"
                        f"{rec.multiplicity} point"
                    )
            return True

        return self._cached("oracle", run)
