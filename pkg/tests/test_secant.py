"""Divisor schemes, root-profile strata, span contraction, preimage forms."""

from math import comb

from ratcurve.binary_forms import BinaryForm
from ratcurve.curves import preimage_divisor_profile
from ratcurve.ideals import Ideal
from ratcurve.polynomials import MultiPoly, Ring
from ratcurve.rationals import QQ
from ratcurve.secant import (
    band_matrix,
    conic_polynomial,
    contracted_divisors_ideal,
    contracted_spans_ideal,
    divisor_ring,
    plane_image_ideal,
    preimage_form_faithful,
    preimage_form_gcd,
    pullback_to_parameters,
    rational_normal_curve_ideal,
    stratum_ideal,
)
import ratcurve.secant as secant
from ratcurve.zerodim import hilbert_data, projective_degree

from conftest import three_node_quartic, tacnode_quartic, walkthrough_sextic


def test_band_matrix_layout():
    curve = three_node_quartic()
    ring = divisor_ring(2)
    rows = band_matrix(curve, 2, ring)
    assert len(rows) == 6 and all(len(r) == 5 for r in rows)
    x0, x1, x2 = ring.gens()
    assert rows[0] == [x0, x1, x2, ring.zero, ring.zero]
    assert rows[2] == [ring.zero, ring.zero, x0, x1, x2]
    # the coefficient rows carry the parameterization
    assert rows[3][0] == ring.one
    assert rows[5][4] == ring.one


def test_band_matrix_range_check():
    curve = three_node_quartic()
    ring = divisor_ring(2)
    for bad in (1, 4):
        try:
            band_matrix(curve, bad, ring)
        except ValueError:
            continue
        raise AssertionError(f"k={bad} accepted")


def test_double_point_scheme_degree_binomial():
    for make in (three_node_quartic, tacnode_quartic):
        curve = make()
        x2 = contracted_divisors_ideal(curve, 2)
        assert projective_degree(x2) == comb(curve.degree - 1, 2)


def test_double_point_scheme_degree_binomial_sextic():
    curve = walkthrough_sextic()
    x2 = contracted_divisors_ideal(curve, 2)
    assert projective_degree(x2) == comb(5, 2)


def test_conic_polynomial_vanishes_on_squares():
    ring = divisor_ring(2)
    conic = conic_polynomial(ring)
    # coefficients of (a s + b t)^2 are (a^2, 2ab, b^2)
    for a, b in ((1, 2), (3, -1), (5, 7)):
        acc = QQ(0)
        vals = (QQ(a * a), QQ(2 * a * b), QQ(b * b))
        for e, c in conic.terms.items():
            term = c
            for v, ev in zip(vals, e):
                term *= v**ev
            acc += term
        assert acc == 0


def test_double_root_stratum_is_the_conic():
    ring = divisor_ring(2)
    assert stratum_ideal(2, (2,)) == Ideal(ring, [conic_polynomial(ring)])


def test_triple_root_stratum_matches_derivation():
    # coefficients of (a s + b t)^3 are (a^3, 3a^2 b, 3a b^2, b^3); writing
    # x0..x3 for them gives x1^2 = 3 x0 x2, x2^2 = 3 x1 x3, x1 x2 = 9 x0 x3
    ring = divisor_ring(3)
    x0, x1, x2, x3 = ring.gens()
    want = Ideal(
        ring,
        [x1 * x1 - 3 * x0 * x2, x2 * x2 - 3 * x1 * x3, x1 * x2 - 9 * x0 * x3],
    )
    assert stratum_ideal(3, (3,)) == want


def test_double_root_stratum_in_p3_is_the_discriminant():
    ideal = stratum_ideal(3, (2, 1))
    hd = hilbert_data(ideal)
    assert hd.proj_dim == 2  # a hypersurface in P^3
    gb = ideal.groebner()
    assert len(gb) == 1 and gb[0].total_degree() == 4


def test_all_simple_stratum_is_everything():
    ideal = stratum_ideal(3, (1, 1, 1))
    assert not ideal.gens


def test_stratum_disk_cache_round_trip(tmp_path):
    cache = str(tmp_path)
    # an in-process memo hit skips the disk entirely; clear it so the first
    # call computes and writes, the second loads from the file
    secant._STRATUM_MEMORY.pop((3, (2, 1)), None)
    first = stratum_ideal(3, (2, 1), cache_dir=cache)
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    secant._STRATUM_MEMORY.pop((3, (2, 1)), None)
    second = stratum_ideal(3, (2, 1), cache_dir=cache)
    assert first == second


def test_pullback_to_parameters():
    n = 3
    ring = divisor_ring(n, prefix="z")
    z = ring.gens()
    # z0 -> s^3; z1*z3 - z2^2 vanishes on the curve (s^3, s^2 t, s t^2, t^3)
    assert pullback_to_parameters(z[0], n) == BinaryForm([QQ(1), 0, 0, 0])
    f = pullback_to_parameters(z[1] * z[3] - z[2] * z[2], n)
    assert f.is_zero()


def test_rational_normal_curve_ideal_is_the_twisted_cubic():
    hd = hilbert_data(rational_normal_curve_ideal(divisor_ring(3)))
    assert (hd.proj_dim, hd.degree) == (1, 3)


def test_preimage_form_dual_routes_agree():
    curve = three_node_quartic()
    n = curve.degree
    x2 = contracted_divisors_ideal(curve, 2)
    spans = contracted_spans_ideal(x2, n)
    via_gcd = preimage_form_gcd(spans, n)
    via_faithful = preimage_form_faithful(spans, n)
    assert via_gcd.normalized() == via_faithful.normalized()
    # three nodes, two simple preimages each
    assert preimage_divisor_profile(via_gcd) == (1,) * 6


def test_plane_image_of_double_point_spans():
    curve = three_node_quartic()
    x2 = contracted_divisors_ideal(curve, 2)
    spans = contracted_spans_ideal(x2, curve.degree)
    image = plane_image_ideal(curve, spans)
    assert projective_degree(image) == 3  # the three nodes
