"""Curve validation, properness detection, and preimage profiles."""

import pytest

from ratcurve.binary_forms import BinaryForm
from ratcurve.curves import (
    CurveError,
    CurveParam,
    is_generically_injective,
    preimage_divisor_profile,
    validate_proper,
)
from ratcurve.rationals import QQ

from conftest import bf, mono, walkthrough_sextic, three_node_quartic


def test_degree_mismatch():
    with pytest.raises(CurveError) as info:
        CurveParam(bf(1, 0, 0, 0), bf(0, 1, 0), bf(0, 0, 0, 1))
    assert info.value.code == "DegreeMismatch"


def test_degree_too_small():
    with pytest.raises(CurveError) as info:
        CurveParam(bf(1, 0, 0), bf(0, 1, 0), bf(0, 0, 1))
    assert info.value.code == "DegreeTooSmall"


def test_common_factor():
    with pytest.raises(CurveError) as info:
        CurveParam(bf(1, 0, 0, 0, 0), bf(0, 1, 0, 0, 0), bf(0, 0, 1, 0, 0))
    assert info.value.code == "CommonFactor"


def test_zero_coordinate_allowed_when_others_match():
    curve = CurveParam(mono(4, p0=1), BinaryForm.zero(4), mono(4, p4=1))
    assert curve.degree == 4
    rows = curve.coefficient_rows()
    assert rows[1] == (QQ(0),) * 5


def test_coefficient_rows_pad_to_common_degree():
    curve = three_node_quartic()
    rows = curve.coefficient_rows()
    assert all(len(r) == 5 for r in rows)
    assert rows[0][0] == 1 and rows[2][4] == 1


def test_injective_examples():
    assert is_generically_injective(walkthrough_sextic())
    assert is_generically_injective(three_node_quartic())


def test_double_cover_detected():
    # (s^2 : st : t^2) precomposed with (s, t) -> (s^2, t^2)
    curve = CurveParam(mono(4, p0=1), mono(4, p2=1), mono(4, p4=1))
    assert not is_generically_injective(curve)
    with pytest.raises(CurveError) as info:
        validate_proper(curve)
    assert info.value.code == "NotProper"


def test_triple_cover_detected():
    curve = CurveParam(mono(6, p0=1), mono(6, p3=1), mono(6, p6=1))
    assert not is_generically_injective(curve)


def test_validate_proper_accepts_proper():
    validate_proper(three_node_quartic())  # must not raise


def test_preimage_divisor_profile():
    s, t = bf(1, 0), bf(0, 1)
    f = s**2 * t**3 * (s - t)
    assert preimage_divisor_profile(f) == (3, 2, 1)
    assert preimage_divisor_profile(bf(1, 0, 1)) == (1, 1)
    assert preimage_divisor_profile(s**4) == (4,)
