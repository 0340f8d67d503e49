"""Exact rational scalars.

All coefficient arithmetic in the package is exact. gmpy2's mpq is used when
available (roughly 7x faster on mixed workloads); fractions.Fraction otherwise.
Both are kept in lowest terms with positive denominator, so either backend
gives canonical values and the choice never affects results.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ  # type: ignore

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    QQ = Fraction
    HAVE_GMPY2 = False

#: The multiplicative/additive identities, shared to avoid reconstruction.
ZERO = QQ(0)
ONE = QQ(1)


def rat(num, den=1):
    """Build an exact rational from ints, strings like '3/4', or rationals."""
    return QQ(num, den) if den != 1 else QQ(num)


def numerator(q) -> int:
    return int(q.numerator)


def denominator(q) -> int:
    return int(q.denominator)


def is_integer(q) -> bool:
    return q.denominator == 1


def rat_from_str(text: str):
    """Parse '-7', '3/4' or '0.25' exactly."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return QQ(int(num), int(den))
    if "." in text or "e" in text or "E" in text:
        return QQ(Fraction(text))
    return QQ(int(text))
