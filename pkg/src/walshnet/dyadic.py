"""Exact dyadic rationals a / 2^e."""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

_TEXT = re.compile(r"^(-?\d+)/2\^(\d+)$")


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class DyadicRational:
    """The value ``numerator / 2**exponent``, kept with an odd numerator (or 0/2^0)."""

    numerator: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError("exponent must be nonnegative")
        a, e = self.numerator, self.exponent
        if a == 0:
            e = 0
        else:
            shift = min((a & -a).bit_length() - 1, e)
            a >>= shift
            e -= shift
        object.__setattr__(self, "numerator", a)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def power_of_two(cls, k: int) -> DyadicRational:
        """2^k for any integer k."""
        return cls(1 << k, 0) if k >= 0 else cls(1, -k)

    @classmethod
    def parse(cls, text: str) -> DyadicRational:
        match = _TEXT.match(text.strip())
        if not match:
            raise ValueError(f"not a dyadic literal: {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    def _aligned(self, other: DyadicRational) -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return self.numerator << (e - self.exponent), other.numerator << (e - other.exponent), e

    def __add__(self, other: DyadicRational) -> DyadicRational:
        if not isinstance(other, DyadicRational):
            return NotImplemented
        a, b, e = self._aligned(other)
        return DyadicRational(a + b, e)

    def __sub__(self, other: DyadicRational) -> DyadicRational:
        if not isinstance(other, DyadicRational):
            return NotImplemented
        a, b, e = self._aligned(other)
        return DyadicRational(a - b, e)

    def __neg__(self) -> DyadicRational:
        return DyadicRational(-self.numerator, self.exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DyadicRational):
            return (self.numerator, self.exponent) == (other.numerator, other.exponent)
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def __lt__(self, other: DyadicRational) -> bool:
        if not isinstance(other, DyadicRational):
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a < b

    def __hash__(self) -> int:
        return hash((self.numerator, self.exponent))

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __float__(self) -> float:
        # Fraction -> float is correctly rounded, and survives huge numerators
        return float(self.as_fraction())

    def log2(self) -> float:
        """log2 of the value; -inf for zero.  Accurate even when float() would underflow."""
        a = self.numerator
        if a < 0:
            raise ValueError("log2 of a negative value")
        if a == 0:
            return -math.inf
        extra = max(a.bit_length() - 60, 0)
        return math.log2(a >> extra) + extra - self.exponent

    def __str__(self) -> str:
        return f"{self.numerator}/2^{self.exponent}"

    def __repr__(self) -> str:
        return f"DyadicRational({self.numerator}, {self.exponent})"
