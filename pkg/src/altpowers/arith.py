"""Exact scalar arithmetic: integers, reduced rationals and half-integers.

Python ``int`` is already arbitrary precision and ``fractions.Fraction`` is
always stored reduced with a positive denominator, so both are used directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational




def parse_int(text: str) -> int:
    """Parse a signed decimal integer, rejecting anything else (no floats)."""
    s = text.strip()
    body = s[1:] if s[:1] in "+-" else s
    if not body.isdigit():
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(s)


def render_int(n: int) -> str:
    return str(n)


def parse_ratio(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"n"`` into a reduced fraction."""
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        d = parse_int(den)
        if d == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(parse_int(num), d)
    return Fraction(parse_int(s))


def render_ratio(r: Fraction) -> str:
    return str(r)


@dataclass(frozen=True, order=True)
class HalfInt:
    """The number ``twice_value / 2``."""

    twice_value: int

    def __post_init__(self):
        if not isinstance(self.twice_value, int) or isinstance(self.twice_value, bool):
            raise TypeError("twice_value must be an int")

    @classmethod
    def from_value(cls, v) -> "HalfInt":
        if isinstance(v, HalfInt):
            return v
        f = Fraction(v)
        t = 2 * f
        if t.denominator != 1:
            raise ValueError(f"{v} is not a multiple of 1/2")
        return cls(int(t))

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        return cls.from_value(parse_ratio(text))

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"


def as_fraction(v) -> Fraction:
    if isinstance(v, HalfInt):
        return v.to_fraction()
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    raise TypeError(f"expected an exact number, got {type(v).__name__}")


def exact_log(n: int, b: int) -> int | None:
    """Return e with ``b**e == n``, or None if n is not a power of b."""
    if b < 2:
        raise ValueError("base must be >= 2")
    if n < 1:
        return None
    e = 0
    while n % b == 0:
        n //= b
        e += 1
    return e if n == 1 else None
