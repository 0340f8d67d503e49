"""Monomial orders as integer sort keys.

Every order here is encoded as a map from an exponent tuple to a single
arbitrary-precision integer such that integer comparison realizes the order.
Exponent fields are packed big-endian into fixed-width slots; degree-reverse-
lexicographic slots store WIDTH_MASK - e so that larger packed value means
larger monomial. Packing keys once per monomial makes the reduction kernel's
comparisons single int compares.

Field width 32 bits: intermediate products in this package never approach
exponent 2**32, and keys stay a few machine words long.
"""

from __future__ import annotations

FIELD_BITS = 32
WIDTH_MASK = (1 << FIELD_BITS) - 1


class MonomialOrder:
    """Base class; subclasses define key packing over `nvars` variables."""

    __slots__ = ("nvars",)

    def __init__(self, nvars: int):
        self.nvars = nvars

    def key(self, exps: tuple) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def signature(self) -> tuple:
        """Hashable identity used for Groebner basis caching."""
        return (type(self).__name__, self.nvars)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())


class GrevLex(MonomialOrder):
    """Degree reverse lexicographic; the workhorse order."""

    __slots__ = ()

    def key(self, exps: tuple) -> int:
        k = sum(exps)
        for e in reversed(exps):
            k = (k << FIELD_BITS) | (WIDTH_MASK - e)
        return k


class Lex(MonomialOrder):
    """Pure lexicographic, first variable dominant."""

    __slots__ = ()

    def key(self, exps: tuple) -> int:
        k = 0
        for e in exps:
            k = (k << FIELD_BITS) | e
        return k


class Block(MonomialOrder):
    """Elimination order: compare the first `nfront` exponents grevlex-style
    first, then the rest. Any monomial involving a front variable sorts above
    every monomial in the back variables only."""

    __slots__ = ("nfront",)

    def __init__(self, nvars: int, nfront: int):
        super().__init__(nvars)
        if not 0 < nfront < nvars:
            raise ValueError("front block must be a proper nonempty prefix")
        self.nfront = nfront

    def key(self, exps: tuple) -> int:
        front = exps[: self.nfront]
        back = exps[self.nfront :]
        k = sum(front)
        for e in reversed(front):
            k = (k << FIELD_BITS) | (WIDTH_MASK - e)
        k = (k << FIELD_BITS) | sum(back)
        for e in reversed(back):
            k = (k << FIELD_BITS) | (WIDTH_MASK - e)
        return k

    def signature(self) -> tuple:
        return ("Block", self.nvars, self.nfront)
