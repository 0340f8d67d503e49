"""Binary-form arithmetic, factor splitting, and gcds."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ratcurve.binary_forms import (
    BinaryForm,
    binary_gcd,
    gcd_many,
    squarefree_decomposition,
    squarefree_part,
)
from ratcurve.rationals import QQ

from conftest import bf

S = BinaryForm([1, 0])  # the form s
T = BinaryForm([0, 1])  # the form t


def lin(a, b):
    return BinaryForm.linear(a, b)


small = st.integers(-5, 5)
coeff_lists = st.lists(small, min_size=1, max_size=6).filter(
    lambda c: any(x for x in c)
)
forms = coeff_lists.map(lambda c: bf(*c))


def test_degree_and_zero():
    assert bf(1, 0, -2).degree == 2
    assert BinaryForm.zero(3).degree == 3
    assert BinaryForm.zero(3).is_zero()
    assert not bf(0, 1).is_zero()


def test_evaluate_golden():
    f = bf(1, -2, 3)  # s^2 - 2st + 3t^2
    assert f.evaluate(QQ(2), QQ(1)) == QQ(3)
    assert f.evaluate(QQ(0), QQ(1)) == QQ(3)
    assert f.evaluate(QQ(1), QQ(0)) == QQ(1)


def test_ring_operations_golden():
    f = bf(1, 1)  # s + t
    g = bf(1, -1)  # s - t
    assert f * g == bf(1, 0, -1)
    assert f + g == bf(2, 0)
    assert f - g == bf(0, 2)
    assert -f == bf(-1, -1)
    assert f**3 == bf(1, 3, 3, 1)
    assert QQ(2) * f == bf(2, 2)


def test_from_univariate_shift():
    # entry i sits on s^(d-i) t^i, so [1, -1] means s - t before the shift
    f = BinaryForm.from_univariate([QQ(1), QQ(-1)], 3, t_shift=2)
    assert f == bf(0, 0, 1, -1)  # s t^2 - t^3


def test_split_golden():
    # s^3 t - s^2 t^2 = s^2 * t * (s - t)
    f = bf(0, 1, -1, 0, 0)
    a, b, core = f.split()
    assert (a, b) == (2, 1)
    assert core == [QQ(1), QQ(-1)]
    assert BinaryForm.zero(4).split() == (0, 0, [])


@given(forms)
def test_split_reassembles(f):
    a, b, core = f.split()
    rebuilt = (
        S**a * T**b * BinaryForm.from_univariate(core, len(core) - 1)
    )
    assert rebuilt == f


def test_derivatives():
    f = bf(1, 0, -3)  # s^2 - 3t^2
    assert f.derivative_s() == bf(2, 0)
    assert f.derivative_t() == bf(0, -6)


@given(forms, forms)
def test_exact_div_inverts_multiplication(f, g):
    p = f * g
    assert g.divides(p)
    assert p.exact_div(g) == f


def test_divides_negative_case():
    assert not bf(1, 1).divides(bf(1, 0, 1))  # (s+t) does not divide s^2+t^2
    assert bf(1, 1).divides(bf(1, 0, -1))


@given(forms, st.integers(-7, 7).filter(bool), st.integers(1, 7))
def test_normalized_kills_scaling(f, num, den):
    scaled = QQ(num, den) * f
    assert scaled.normalized() == f.normalized()
    g = f.normalized()
    first = next(c for c in g.coeffs if c != 0)
    assert first > 0
    assert all(c.denominator == 1 for c in g.coeffs)


def test_linear_vanishes_at_its_point():
    f = lin(3, 2)
    assert f.evaluate(3, 2) == 0
    assert f == bf(2, -3)


def test_squarefree_decomposition_golden():
    # s^2 * t^3 * (s - t) * (s^2 + t^2)^2; lin(1, 1) = s - t
    f = S**2 * T**3 * lin(1, 1) * bf(1, 0, 1) ** 2
    dec = dict(
        (tuple(fac.coeffs), m) for fac, m in squarefree_decomposition(f)
    )
    assert dec == {
        (QQ(1), QQ(0)): 2,  # s
        (QQ(0), QQ(1)): 3,  # t
        (QQ(1), QQ(-1)): 1,  # s - t
        (QQ(1), QQ(0), QQ(1)): 2,  # s^2 + t^2
    }
    assert squarefree_part(f) == (S * T * lin(1, 1) * bf(1, 0, 1)).normalized()


@given(forms)
def test_squarefree_decomposition_reassembles(f):
    acc = BinaryForm([QQ(1)])
    for factor, mult in squarefree_decomposition(f):
        acc = acc * factor**mult
    assert acc.normalized() == f.normalized()
    # parts are squarefree and pairwise coprime
    parts = [fac for fac, _ in squarefree_decomposition(f)]
    for i, a in enumerate(parts):
        for b in parts[i + 1 :]:
            assert binary_gcd(a, b).degree == 0


def test_gcd_by_construction():
    rng = random.Random(7)
    for _ in range(30):
        shared = lin(rng.randint(1, 5), rng.randint(-5, 5)) * bf(
            1, 0, rng.randint(1, 5)
        )
        fa = shared * lin(1, rng.randint(1, 4))
        fb = shared * bf(1, 0, 0, rng.randint(1, 4))
        g = binary_gcd(fa, fb)
        # the built common part divides the gcd and the gcd divides both
        assert shared.divides(g) or g == shared.normalized()
        assert g.divides(fa) and g.divides(fb)
        assert g.normalized() == shared.normalized()


def test_gcd_coprime_is_constant():
    assert binary_gcd(bf(1, 0, 1), bf(1, 1)).degree == 0


def test_gcd_many():
    shared = lin(2, -1)
    fs = [shared * lin(1, k) for k in range(3)]
    assert gcd_many(fs) == shared.normalized()


def test_gcd_with_pure_powers():
    f = S**3 * T
    g = S * T**2
    assert binary_gcd(f, g) == (S * T).normalized()
