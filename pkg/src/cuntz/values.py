"""Exact extended values: nonnegative rationals together with infinity.

This is the common value carrier for element payloads and functional
evaluation.  Arithmetic is exact (``fractions.Fraction``), infinity is
absorbing for addition, and multiplication uses the convention
``0 * inf == 0`` so that the zero functional and the 0/inf-valued
functionals are both well defined.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


@total_ordering
class ExtVal:
    """A nonnegative rational or infinity, with exact arithmetic."""

    __slots__ = ("frac",)

    #: set after class creation; the unique infinite value
    INF: "ExtVal"

    def __init__(self, value=0):
        if isinstance(value, ExtVal):
            self.frac = value.frac
            return
        if value is None:
            self.frac = None
            return
        f = Fraction(value)
        if f < 0:
            raise ValueError(f"extended values are nonnegative, got {f}")
        self.frac = f

    # -- predicates ------------------------------------------------------

    @property
    def is_inf(self) -> bool:
        return self.frac is None

    @property
    def is_finite(self) -> bool:
        return self.frac is not None

    @property
    def is_zero(self) -> bool:
        return self.frac == 0

    @property
    def is_integer(self) -> bool:
        return self.frac is not None and self.frac.denominator == 1

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> "ExtVal":
        other = ext(other)
        if self.is_inf or other.is_inf:
            return INF
        return ExtVal(self.frac + other.frac)

    __radd__ = __add__

    def __mul__(self, other) -> "ExtVal":
        other = ext(other)
        # 0 * inf == 0 by convention
        if self.is_zero or other.is_zero:
            return ZERO
        if self.is_inf or other.is_inf:
            return INF
        return ExtVal(self.frac * other.frac)

    __rmul__ = __mul__

    def minus_clamped(self, other) -> "ExtVal":
        """max(self - other, 0); infinity minus a finite value is infinity."""
        other = ext(other)
        if self.is_inf:
            return INF
        if other.is_inf:
            return ZERO
        return ExtVal(max(self.frac - other.frac, Fraction(0)))

    def min(self, other) -> "ExtVal":
        other = ext(other)
        return self if self <= other else other

    def max(self, other) -> "ExtVal":
        other = ext(other)
        return self if self >= other else other

    # -- order -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtVal):
            try:
                other = ext(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.frac == other.frac

    def __le__(self, other) -> bool:
        other = ext(other)
        if other.is_inf:
            return True
        if self.is_inf:
            return False
        return self.frac <= other.frac

    def __hash__(self):
        return hash(("ExtVal", self.frac))

    # -- formatting ------------------------------------------------------

    def __repr__(self):
        return f"ExtVal({format_value(self)!r})"

    def __str__(self):
        return format_value(self)

    def sort_key(self):
        """Total-order key with infinity last; used for deterministic listings."""
        return (1, Fraction(0)) if self.is_inf else (0, self.frac)


def ext(value) -> ExtVal:
    """Coerce ints, Fractions, strings ("5/2", "inf") or ExtVal to ExtVal."""
    if isinstance(value, ExtVal):
        return value
    if isinstance(value, str):
        return parse_value(value)
    return ExtVal(value)


def parse_value(text: str) -> ExtVal:
    text = text.strip()
    if text == "inf":
        return INF
    return ExtVal(Fraction(text))


def format_value(v: ExtVal) -> str:
    """Serialize as "p/q" in lowest terms, or "inf"."""
    if v.is_inf:
        return "inf"
    f = v.frac
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


ZERO = ExtVal(0)
INF = ExtVal(None)
ExtVal.INF = INF
