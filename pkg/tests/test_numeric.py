"""Certified numerics: root isolation wrappers, clustering, reality calls."""

import mpmath
import pytest

from ratcurve.binary_forms import BinaryForm
from ratcurve.numeric import (
    AmbiguousCluster,
    PrecisionExhausted,
    classify_clusters,
    cluster_indices,
    cluster_preimages,
    distinct_roots_of_form,
    evaluate_curve,
    fubini_study,
)
from ratcurve.rationals import QQ

from conftest import acnode_cubic, bf, three_node_quartic

S = bf(1, 0)
T = bf(0, 1)


def test_distinct_roots_structure():
    # s^2 t^3 (s^2 + t^2)(s - 2t)
    form = S**2 * T**3 * bf(1, 0, 1) * bf(1, -2)
    roots = distinct_roots_of_form(form, 128)
    kinds = sorted((r.kind, r.multiplicity, r.is_real) for r in roots)
    assert kinds == [
        ("finite", 1, False),
        ("finite", 1, False),
        ("finite", 1, True),
        ("infinity", 3, True),
        ("zero", 2, True),
    ]
    # conjugation pairing is an involution fixing exactly the real roots
    for i, r in enumerate(roots):
        assert roots[r.partner].partner == i
        assert (r.partner == i) == r.is_real


def test_distinct_roots_of_rational_roots():
    form = bf(1, -1) * bf(2, 1) * bf(1, 0)  # roots (1:1), (-2:... ), s
    roots = distinct_roots_of_form(form, 64)
    assert all(r.is_real for r in roots)
    assert sum(r.multiplicity for r in roots) == 3


def test_evaluate_curve_matches_exact():
    curve = three_node_quartic()
    got = evaluate_curve(curve, mpmath.mpc(1), mpmath.mpc(2))
    exact = curve.evaluate(QQ(1), QQ(2))
    scale = max(abs(mpmath.mpf(int(c.numerator)) / int(c.denominator)) for c in exact)
    for g, e in zip(got, exact):
        ev = mpmath.mpf(int(e.numerator)) / int(e.denominator) / scale
        assert abs(g - ev) < 1e-20


def test_fubini_study_basics():
    e0 = (mpmath.mpc(1), mpmath.mpc(0), mpmath.mpc(0))
    e1 = (mpmath.mpc(0), mpmath.mpc(1), mpmath.mpc(0))
    assert abs(fubini_study(e0, e1) - 1) < 1e-30
    assert fubini_study(e0, e0) == 0
    # invariance under complex scaling of either argument
    w = (mpmath.mpc(1, 1), mpmath.mpc(2, -1), mpmath.mpc(0, 3))
    lam = mpmath.mpc(3, -2)
    scaled = tuple(lam * c for c in w)
    assert abs(fubini_study(w, scaled)) < 1e-25
    assert abs(fubini_study(w, e0) - fubini_study(e0, w)) < 1e-30


def test_cluster_indices_groups_nearby_points():
    a = (mpmath.mpc(1), mpmath.mpc(0), mpmath.mpc(0))
    a2 = (mpmath.mpc(1), mpmath.mpc(1e-12), mpmath.mpc(0))
    b = (mpmath.mpc(0), mpmath.mpc(1), mpmath.mpc(0))
    assert cluster_indices([a, b, a2], 1e-8) == [[0, 2], [1]]


def test_classify_clusters_kinds():
    # conjugate pair clustered together: isolated real image point
    roots = distinct_roots_of_form(bf(1, 0, 1), 128)
    recs = classify_clusters(roots, [[0, 1]])
    assert recs[0].is_real and recs[0].real_type == "acnode"
    # the same pair split apart: neither half is conjugation-stable
    recs = classify_clusters(roots, [[0], [1]])
    assert all(not r.is_real and r.real_type == "nonreal" for r in recs)

    roots = distinct_roots_of_form(bf(1, 0, -1), 128)  # (s-t)(s+t)
    recs = classify_clusters(roots, [[0, 1]])
    assert recs[0].real_type == "real_on_curve"

    roots = distinct_roots_of_form(bf(1, 0, 1) * bf(1, -1), 128)
    recs = classify_clusters(roots, [[0, 1, 2]])
    assert recs[0].is_real and recs[0].real_type == "hidden"


def test_cluster_preimages_conjugate_phase_regression():
    # the acnode's two preimages are conjugate parameters whose raw image
    # representatives nearly cancel; the cluster center must survive that
    curve = acnode_cubic()
    form = bf(1, 0, 1)  # s^2 + t^2
    roots, clusters, centers = cluster_preimages(curve, form, [2])
    assert [len(c) for c in clusters] == [2]
    cx = centers[0]
    assert all(mpmath.isfinite(abs(c)) for c in cx)
    # the isolated real node sits at (0:0:1)
    scale = max(abs(c) for c in cx)
    normalized = [abs(c) / scale for c in cx]
    assert normalized[0] < 1e-6 and normalized[1] < 1e-6
    assert abs(normalized[2] - 1) < 1e-12


def test_cluster_preimages_count_mismatch_is_ambiguous():
    curve = acnode_cubic()
    with pytest.raises(AmbiguousCluster):
        cluster_preimages(curve, bf(1, 0, 1), [1])


def test_cluster_preimages_impossible_split_exhausts_precision():
    curve = acnode_cubic()
    with pytest.raises(PrecisionExhausted):
        cluster_preimages(
            curve, bf(1, 0, 1), [1, 1], precision_bits=64, max_precision_bits=256
        )
