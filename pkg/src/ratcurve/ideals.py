"""Ideals and the operations the geometry is built from.

Everything reduces to Groebner bases of the right ideals in the right
orders: elimination via block orders, intersections via the auxiliary
variable trick, quotients via intersections, saturation by iterated
quotient until stabilization. For homogeneous ideals there is also the
one-basis saturation with respect to a single variable (last-variable
division in grevlex), used by the heavy pipelines and cross-checked in the
tests against the iterated route.
"""

from __future__ import annotations

from .groebner import buchberger, from_kernel, to_kernel
from ._kernel import normal_form as _nf_kernel
from .orders import Block, GrevLex, MonomialOrder
from .polynomials import MultiPoly, Ring


class Ideal:
    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        cleaned = []
        seen = set()
        for g in gens:
            if not isinstance(g, MultiPoly):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise ValueError("generator in wrong ring")
            if g.is_zero():
                continue
            g = g.primitive()
            if g not in seen:
                seen.add(g)
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb: dict = {}

    # -- basics -----------------------------------------------------------------

    def groebner(self, order: MonomialOrder | None = None) -> tuple:
        order = order or self.ring._grevlex
        sig = order.signature()
        got = self._gb.get(sig)
        if got is None:
            kgens = [to_kernel(g, order) for g in self.gens]
            gb = buchberger(kgens, order)
            got = tuple(from_kernel(self.ring, g) for g in gb)
            self._gb[sig] = got
        return got

    def normal_form(self, p: MultiPoly, order: MonomialOrder | None = None) -> MultiPoly:
        order = order or self.ring._grevlex
        gb = self.groebner(order)
        kb = [to_kernel(g, order) for g in gb]
        return from_kernel(self.ring, _nf_kernel(to_kernel(p, order), kb, True))

    def contains(self, p: MultiPoly) -> bool:
        return self.normal_form(p).is_zero()

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()

    def is_zero_ideal(self) -> bool:
        return not self.groebner()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner() == other.groebner()

    def __hash__(self):
        return hash((self.ring.names, self.groebner()))

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise ValueError("mixed rings")
        return Ideal(self.ring, self.gens + other.gens)

    def is_homogeneous(self) -> bool:
        """Tested on the reduced basis: eliminations may hand back a
        homogeneous ideal with inhomogeneous generators, but the reduced
        grevlex basis of a homogeneous ideal is homogeneous."""
        if all(g.is_homogeneous() for g in self.gens):
            return True
        return all(g.is_homogeneous() for g in self.groebner())

    def __repr__(self):
        inner = ", ".join(g.format() for g in self.gens[:6])
        if len(self.gens) > 6:
            inner += f", ... ({len(self.gens)} gens)"
        return f"Ideal({inner})"


# -- ring plumbing ----------------------------------------------------------------


def _permuted_ring(ring: Ring, front: tuple) -> tuple:
    """Ring with `front` variables first; returns (new_ring, fwd_map) where
    fwd_map[i] is the new slot of old variable i."""
    front = tuple(front)
    back = tuple(i for i in range(ring.nvars) if i not in front)
    new_names = tuple(ring.names[i] for i in front + back)
    new_ring = Ring(new_names)
    fwd = {}
    for slot, old in enumerate(front + back):
        fwd[old] = slot
    return new_ring, [fwd[i] for i in range(ring.nvars)]


def eliminate(ideal: Ideal, front_vars) -> Ideal:
    """Intersection with the subring omitting front_vars (given as indices)."""
    ring = ideal.ring
    front = tuple(sorted(set(int(v) for v in front_vars)))
    if not front:
        return ideal
    if len(front) >= ring.nvars:
        raise ValueError("cannot eliminate every variable")
    new_ring, fwd = _permuted_ring(ring, front)
    nfront = len(front)
    order = Block(new_ring.nvars, nfront)
    moved = Ideal(new_ring, [g.rename(new_ring, fwd) for g in ideal.gens])
    gb = moved.groebner(order)
    back_names = new_ring.names[nfront:]
    back_ring = Ring(back_names)
    kept = []
    for g in gb:
        if any(any(e[i] for i in range(nfront)) for e in g.terms):
            continue
        kept.append(
            MultiPoly(back_ring, {e[nfront:]: c for e, c in g.terms.items()})
        )
    return Ideal(back_ring, kept)


def extend_to(ideal: Ideal, big_ring: Ring) -> Ideal:
    """Re-express generators in a ring containing all of this ring's names."""
    imap = [big_ring.index[n] for n in ideal.ring.names]
    return Ideal(big_ring, [g.rename(big_ring, imap) for g in ideal.gens])


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """a ∩ b via the auxiliary-variable trick."""
    if a.ring != b.ring:
        raise ValueError("mixed rings")
    ring = a.ring
    aux = Ring(("_t",) + ring.names)
    imap = [i + 1 for i in range(ring.nvars)]
    t = aux.var(0)
    gens = [t * g.rename(aux, imap) for g in a.gens]
    one_minus_t = aux.one - t
    gens += [one_minus_t * g.rename(aux, imap) for g in b.gens]
    elim = eliminate(Ideal(aux, gens), (0,))
    back = [MultiPoly(ring, dict(g.terms)) for g in elim.gens]
    return Ideal(ring, back)


def intersect_many(ideals) -> Ideal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("empty intersection")
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = intersect(acc, nxt)
    return acc


def colon(ideal: Ideal, divisor) -> Ideal:
    """Ideal quotient I : J. `divisor` may be a polynomial or an Ideal."""
    ring = ideal.ring
    if isinstance(divisor, MultiPoly):
        if divisor.is_zero():
            raise ZeroDivisionError("colon by zero")
        inter = intersect(ideal, Ideal(ring, [divisor]))
        return Ideal(ring, [g.exact_div(divisor) for g in inter.gens])
    parts = [colon(ideal, g) for g in divisor.gens]
    if not parts:
        raise ValueError("colon by zero ideal")
    return intersect_many(parts)


def saturate(ideal: Ideal, divisor) -> Ideal:
    """I : J^infinity by iterated quotient until stabilization."""
    cur = ideal
    while True:
        nxt = colon(cur, divisor)
        if nxt == cur:
            return cur
        cur = nxt


def saturate_variable(ideal: Ideal, var: int) -> Ideal:
    """Saturation of a homogeneous ideal with respect to one variable.

    In grevlex with that variable last, dividing every element of the
    reduced basis by its maximal power of the variable generates the full
    saturation in one basis computation.
    """
    ring = ideal.ring
    if not ideal.is_homogeneous():
        raise ValueError("needs a homogeneous ideal")
    others = tuple(i for i in range(ring.nvars) if i != var)
    new_ring, fwd = _permuted_ring(ring, others)
    moved = Ideal(new_ring, [g.rename(new_ring, fwd) for g in ideal.gens])
    gb = moved.groebner(GrevLex(new_ring.nvars))
    last = new_ring.nvars - 1
    out = []
    for g in gb:
        shift = min(e[last] for e in g.terms)
        if shift:
            g = MultiPoly(
                new_ring,
                {e[:last] + (e[last] - shift,): c for e, c in g.terms.items()},
            )
        out.append(g)
    back = [fwd.index(i) for i in range(ring.nvars)]
    restored = [g.rename(ring, [back[j] for j in range(ring.nvars)]) for g in out]
    return Ideal(ring, restored)


def saturate_block(ideal: Ideal, vars_: tuple) -> Ideal:
    """Saturation with respect to the ideal generated by the given variables,
    for homogeneous input: the intersection of the single-variable
    saturations (pigeonhole on products of the generators)."""
    parts = [saturate_variable(ideal, v) for v in vars_]
    return intersect_many(parts)
