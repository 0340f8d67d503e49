"""Finite projective schemes: Hilbert data, radicals, local structure."""

import pytest

from ratcurve.ideals import Ideal, intersect
from ratcurve.polynomials import Ring
from ratcurve.rationals import QQ
from ratcurve.secant import divisor_ring, rational_normal_curve_ideal
from ratcurve.zerodim import (
    NotZeroDimensional,
    colon_degree_chain,
    dehomogenize_ideal,
    hilbert_data,
    irrelevant_ideal,
    is_curvilinear_at,
    is_irrelevant,
    local_length,
    minimal_polynomial,
    point_ideal,
    projective_degree,
    quotient_basis,
    radical_projective_points,
)

R3 = Ring(("x", "y", "z"))
x, y, z = (R3.var(i) for i in range(3))

ORIGIN = (0, 0, 1)  # shorthand: the point (0:0:1)


def fat_point_full():
    """Full first infinitesimal neighborhood of (0:0:1), length 3."""
    return Ideal(R3, [x * x, x * y, y * y])


def curvilinear_double():
    """Length-2 curvilinear scheme at (0:0:1)."""
    return Ideal(R3, [x * x, y])


def test_hilbert_twisted_cubic():
    ring = divisor_ring(3)
    hd = hilbert_data(rational_normal_curve_ideal(ring))
    assert hd.proj_dim == 1
    assert hd.degree == 3
    assert hd.hp_coeffs == (QQ(1), QQ(3))  # 3d + 1


def test_hilbert_points_and_extremes():
    two = intersect(point_ideal(R3, (1, 0, 0)), point_ideal(R3, (0, 1, 0)))
    hd = hilbert_data(two)
    assert (hd.proj_dim, hd.degree) == (0, 2)
    assert hilbert_data(irrelevant_ideal(R3)).proj_dim == -1
    assert is_irrelevant(irrelevant_ideal(R3))
    whole = hilbert_data(Ideal(R3, []))
    assert (whole.proj_dim, whole.degree) == (2, 1)


def test_projective_degree():
    assert projective_degree(fat_point_full()) == 3
    assert projective_degree(curvilinear_double()) == 2


def test_radical_of_fat_point():
    rad = radical_projective_points(fat_point_full())
    assert rad == Ideal(R3, [x, y])
    assert radical_projective_points(curvilinear_double()) == Ideal(R3, [x, y])


def test_radical_is_idempotent():
    scheme = intersect(fat_point_full(), point_ideal(R3, (1, 2, 1)))
    rad = radical_projective_points(scheme)
    assert radical_projective_points(rad) == rad
    assert projective_degree(rad) == 2


def test_point_ideal_membership():
    p = point_ideal(R3, (1, 2, 3))
    for g in p.gens:
        acc = QQ(0)
        for e, c in g.terms.items():
            acc += c * QQ(1) ** e[0] * QQ(2) ** e[1] * QQ(3) ** e[2]
        assert acc == 0
    assert projective_degree(p) == 1


def test_local_length():
    assert local_length(curvilinear_double(), ORIGIN) == 2
    assert local_length(fat_point_full(), ORIGIN) == 3
    assert local_length(fat_point_full(), (1, 0, 0)) == 0
    mixed = intersect(curvilinear_double(), point_ideal(R3, (1, 0, 0)))
    assert local_length(mixed, ORIGIN) == 2
    assert local_length(mixed, (1, 0, 0)) == 1


def test_local_length_rejects_curves():
    with pytest.raises(NotZeroDimensional):
        local_length(Ideal(R3, [x]), ORIGIN)


def test_curvilinearity():
    assert is_curvilinear_at(curvilinear_double(), ORIGIN)
    assert not is_curvilinear_at(fat_point_full(), ORIGIN)
    # a reduced point is trivially curvilinear
    assert is_curvilinear_at(point_ideal(R3, ORIGIN), ORIGIN)


def test_colon_chain_by_point():
    triple = Ideal(R3, [x**3, y])
    assert colon_degree_chain(triple, ORIGIN) == [3, 2, 1, 0, 0]
    three_pts = intersect(
        intersect(point_ideal(R3, (1, 0, 0)), point_ideal(R3, (0, 1, 0))),
        point_ideal(R3, ORIGIN),
    )
    assert colon_degree_chain(three_pts, ORIGIN) == [3, 2, 2]


def test_colon_chain_by_polynomial():
    mixed = intersect(curvilinear_double(), point_ideal(R3, (1, 0, 0)))
    # x vanishes at (0:0:1), so that component drains completely (the second
    # step empties even the reduced point); x is a unit at (1:0:0), which
    # survives untouched
    assert colon_degree_chain(mixed, x) == [3, 2, 1, 1]


def test_colon_chain_by_ideal():
    triple = Ideal(R3, [x**3, y])
    divisor = point_ideal(R3, ORIGIN)
    assert colon_degree_chain(triple, divisor) == [3, 2, 1, 0, 0]


def test_quotient_basis_length():
    aff = dehomogenize_ideal(fat_point_full(), 2)
    assert len(quotient_basis(aff)) == 3


def test_minimal_polynomial_of_coordinate():
    R2 = Ring(("x", "y"))
    a, b = R2.var(0), R2.var(1)
    ideal = Ideal(R2, [a * a - 2, b])
    assert minimal_polynomial(ideal, a) == [QQ(-2), QQ(0), QQ(1)]
    assert minimal_polynomial(ideal, b) == [QQ(0), QQ(1)]
