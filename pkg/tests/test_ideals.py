import random

from ratcurve.ideals import (
    Ideal,
    colon,
    eliminate,
    extend_to,
    intersect_many,
    saturate,
    saturate_block,
    saturate_variable,
)
from ratcurve.polynomials import MultiPoly, Ring
from ratcurve.rationals import QQ

R3 = Ring(("x", "y", "z"))
x, y, z = (R3.var(i) for i in range(3))


def test_ideal_equality_is_extensional():
    assert Ideal(R3, [x, y]) == Ideal(R3, [x + y, y])
    assert Ideal(R3, [x * x]) != Ideal(R3, [x])
    assert Ideal(R3, [R3.one]).is_unit()


def test_sum_and_contains():
    i = Ideal(R3, [x]) + Ideal(R3, [y])
    assert i.contains(3 * x - 7 * y)
    assert not i.contains(z)


def test_intersection_of_point_ideals():
    p1 = Ideal(R3, [x, y])         # the z-axis point as a projective point
    p2 = Ideal(R3, [x, z])
    both = intersect_many([p1, p2])
    assert both == Ideal(R3, [x, y * z])


def test_colon_recovers_residual_component():
    # (x*y, x*z) : (x) = (y, z);  colon by an ideal agrees
    i = Ideal(R3, [x * y, x * z])
    assert colon(i, x) == Ideal(R3, [y, z])
    assert colon(i, Ideal(R3, [x])) == Ideal(R3, [y, z])


def test_colon_membership_characterization():
    rng = random.Random(3)
    for _ in range(20):
        f = MultiPoly.from_terms(
            R3,
            {
                tuple(rng.randrange(3) for _ in range(3)): QQ(rng.randrange(-4, 5))
                for _ in range(rng.randrange(1, 4))
            }.items(),
        )
        if f.is_zero():
            continue
        i = Ideal(R3, [x * f, y * f])
        q = colon(i, f)
        # every element g of the quotient satisfies g*f in I
        for g in q.groebner():
            assert i.contains(g * f)
        assert q.contains(x) and q.contains(y)


def test_saturation_removes_embedded_power():
    # (x^3, x*y) saturated by x leaves the y-free part
    i = Ideal(R3, [x**3, x * y])
    assert saturate(i, x) == Ideal(R3, [R3.one])
    j = Ideal(R3, [x * x * y, x * z])
    sat = saturate(j, x)
    assert sat == Ideal(R3, [y, z])


def test_saturate_variable_matches_general_saturate():
    i = Ideal(R3, [x * x * y - z * z * y, z * y * y])
    assert saturate_variable(i, 2) == saturate(i, z)
    # block saturation is with respect to the ideal the variables generate,
    # not the product of successive single-variable saturations
    assert saturate_block(i, (1, 2)) == saturate(i, Ideal(R3, [y, z]))


def test_eliminate_projection_of_twisted_cubic():
    # parameterize (x, y, z) = (u, u^2, u^3) inside k[u, x, y, z]
    R4 = Ring(("u", "x", "y", "z"))
    u, X, Y, Z = (R4.var(i) for i in range(4))
    i = Ideal(R4, [X - u, Y - u * u, Z - u**3])
    j = eliminate(i, (0,))
    assert j.ring == R3  # the remaining names form the smaller ring
    want = {x * x - y, x * y - z, y * y - x * z}
    assert set(g.monic() for g in j.groebner()) == {w.monic() for w in want}


def test_extend_to_preserves_membership():
    R4 = Ring(("u", "x", "y", "z"))
    i = Ideal(R3, [x * y - z * z])
    big = extend_to(i, R4)
    X, Y, Z = R4.var(1), R4.var(2), R4.var(3)
    assert big.contains(X * Y - Z * Z)
