"""Polynomial arithmetic over a number field presented as Q[u]/(h)."""

import random

from ratcurve.fieldpoly import (
    fp_deg,
    fp_divmod,
    fp_gcd,
    fp_monic,
    fp_mul,
    fp_squarefree_decomposition,
    fp_sub,
    fp_trim,
    inverse_mod,
    fp_derivative,
)
from ratcurve.rationals import QQ


H = [QQ(-2), QQ(0), QQ(1)]  # h = u^2 - 2, so u plays sqrt(2)


def e(*cs):
    """Field element as ascending u-coefficients."""
    return [QQ(c) for c in cs]


def P(*elements):
    """Main-variable polynomial, ascending, with field-element coefficients."""
    return [list(el) for el in elements]


def test_inverse_mod_golden():
    # 1/u = u/2 in Q(sqrt 2)
    assert inverse_mod(e(0, 1), H) == e(0, QQ(1, 2))
    # 1/(1 + u) = u - 1 since (1+u)(u-1) = u^2 - 1 = 1
    assert inverse_mod(e(1, 1), H) == e(-1, 1)


def test_inverse_mod_random_multiplies_to_one():
    rng = random.Random(11)
    for _ in range(25):
        a = e(rng.randint(-5, 5), rng.randint(-5, 5))
        if not fp_trim([a]):
            continue
        inv = inverse_mod(a, H)
        prod = fp_mul([a], [inv], H)
        assert prod == [e(1)]


def test_division_with_remainder():
    # (x^2 - 2) = (x - u)(x + u) exactly over Q(sqrt 2)
    f = P(e(-2), e(0), e(1))
    g = P(e(0, -1), e(1))  # x - u
    q, r = fp_divmod(f, g, H)
    assert not fp_trim(r)
    assert q == P(e(0, 1), e(1))  # x + u


def test_gcd_detects_shared_root():
    f = P(e(-2), e(0), e(1))  # (x - u)(x + u)
    g = fp_mul([e(0, 1)], P(e(0, -1), e(1)), H)  # u * (x - u)
    d = fp_gcd(f, g, H)
    assert fp_monic(d, H) == P(e(0, -1), e(1))


def test_squarefree_decomposition_golden():
    # (x - u)^2 (x + u), built by multiplication
    xmu = P(e(0, -1), e(1))
    xpu = P(e(0, 1), e(1))
    f = fp_mul(fp_mul(xmu, xmu, H), xpu, H)
    dec = fp_squarefree_decomposition(f, H)
    assert [(fp_monic(g, H), m) for g, m in dec] == [
        (fp_monic(xpu, H), 1),
        (fp_monic(xmu, H), 2),
    ]


def test_squarefree_reassembly_random():
    rng = random.Random(23)
    for _ in range(15):
        f = [e(1)]
        for _ in range(rng.randint(1, 3)):
            lin = P(e(rng.randint(-3, 3), rng.randint(-2, 2)), e(1))
            for _ in range(rng.randint(1, 3)):
                f = fp_mul(f, lin, H)
        parts = fp_squarefree_decomposition(f, H)
        acc = [e(1)]
        for g, m in parts:
            for _ in range(m):
                acc = fp_mul(acc, g, H)
        assert fp_monic(acc, H) == fp_monic(f, H)
        # parts are pairwise coprime
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                assert fp_deg(fp_gcd(parts[i][0], parts[j][0], H)) == 0


def test_derivative_rule():
    f = P(e(1), e(0, 2), e(3))  # 3x^2 + 2u x + 1
    assert fp_derivative(f) == P(e(0, 2), e(6))


def test_sub_cancels():
    f = P(e(1, 1), e(2))
    assert not fp_trim(fp_sub(f, f))
