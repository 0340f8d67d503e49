"""Groebner engine against classic worked bases and an independent CAS."""

import random

import sympy

from ratcurve.ideals import Ideal
from ratcurve.orders import GrevLex, Lex
from ratcurve.polynomials import MultiPoly, Ring
from ratcurve.rationals import QQ

R2 = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))


def test_reduced_basis_lex_textbook():
    x, y = R2.var(0), R2.var(1)
    ideal = Ideal(R2, [x * x + 2 * x * y * y, x * y + 2 * y**3 - 1])
    basis = ideal.groebner(Lex(2))
    assert set(basis) == {x, y**3 - QQ(1, 2)}


def test_reduced_basis_grevlex_textbook():
    x, y = R2.var(0), R2.var(1)
    ideal = Ideal(R2, [x**3 - 2 * x * y, x * x * y + x - 2 * y * y])
    basis = ideal.groebner(GrevLex(2))
    assert set(basis) == {x * x, x * y, y * y - QQ(1, 2) * x}


def test_groebner_of_groebner_is_stable():
    x, y, z = (R3.var(i) for i in range(3))
    ideal = Ideal(R3, [x + y + z, x * y + y * z + z * x, x * y * z - 1])
    basis = ideal.groebner()
    again = Ideal(R3, list(basis)).groebner()
    assert set(basis) == set(again)


def test_membership_of_generators():
    x, y, z = (R3.var(i) for i in range(3))
    gens = [x * x - y, y * y - z * x, x * y * z - z * z]
    ideal = Ideal(R3, gens)
    for g in gens:
        assert ideal.contains(g)
    assert not ideal.contains(x + 1)


def _to_sympy(p, symbols):
    total = 0
    for exps, c in p.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for s, e in zip(symbols, exps):
            term *= s**e
        total += term
    return total


def _from_sympy_set(polys, symbols):
    out = set()
    for p in polys:
        poly = sympy.Poly(p, *symbols)
        terms = {
            tuple(int(e) for e in mono): QQ(
                int(coeff.numerator), int(coeff.denominator)
            )
            for mono, coeff in poly.terms()
        }
        out.add(MultiPoly.from_terms(R3, terms.items()).monic(GrevLex(3)))
    return out


def test_reduced_grevlex_basis_matches_sympy_on_random_ideals():
    rng = random.Random(12)
    sx, sy, sz = sympy.symbols("x y z")
    for _ in range(12):
        gens = []
        for _ in range(rng.randrange(2, 4)):
            terms = {
                tuple(rng.randrange(3) for _ in range(3)): QQ(rng.randrange(-5, 6))
                for _ in range(rng.randrange(1, 5))
            }
            p = MultiPoly.from_terms(R3, terms.items())
            if not p.is_zero():
                gens.append(p)
        if not gens:
            continue
        mine = {
            g.monic(GrevLex(3)) for g in Ideal(R3, gens).groebner(GrevLex(3))
        }
        ref = sympy.groebner(
            [_to_sympy(g, (sx, sy, sz)) for g in gens],
            sx,
            sy,
            sz,
            order="grevlex",
        )
        assert mine == _from_sympy_set(ref.exprs, (sx, sy, sz))
