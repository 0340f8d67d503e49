from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from ratcurve.rationals import ONE, QQ, ZERO, denominator, is_integer, numerator, rat


def test_canonical_values():
    assert QQ(2, 4) == QQ(1, 2)
    assert QQ(-1, -2) == QQ(1, 2)
    assert denominator(QQ(3, -6)) == 2 and numerator(QQ(3, -6)) == -1
    assert ZERO == QQ(0) and ONE == QQ(1)


def test_rat_builder():
    assert rat(3, 4) == QQ(3, 4)
    assert rat("3/4") == QQ(3, 4)
    assert rat(7) == QQ(7)
    assert is_integer(rat(8, 4)) and not is_integer(rat(1, 3))


@given(
    st.integers(-10**6, 10**6),
    st.integers(1, 10**6),
    st.integers(-10**6, 10**6),
    st.integers(1, 10**6),
)
def test_field_arithmetic_matches_fraction(a, b, c, d):
    x, y = QQ(a, b), QQ(c, d)
    fx, fy = Fraction(a, b), Fraction(c, d)
    assert Fraction(numerator(x + y), denominator(x + y)) == fx + fy
    assert Fraction(numerator(x * y), denominator(x * y)) == fx * fy
    assert Fraction(numerator(x - y), denominator(x - y)) == fx - fy
    if c:
        q = x / y
        assert Fraction(numerator(q), denominator(q)) == fx / fy
