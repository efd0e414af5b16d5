"""Dense univariate polynomials with exact coefficients.

Coefficients are stored ascending by power.  The zero polynomial has an empty
coefficient tuple; otherwise the last coefficient is nonzero.  The variable is
anonymous: callers decide whether a polynomial is in ``x`` or in ``u``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Sequence

from .arith import as_fraction


def _trim(coeffs: Sequence) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class RatPoly:
    """Polynomial with ``Fraction`` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([self._coerce(c) for c in coeffs]))

    @staticmethod
    def _coerce(c):
        return as_fraction(c)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def monomial(cls, c, power: int) -> "RatPoly":
        return cls([0] * power + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self._coerce(0)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            if body and mono:
                body = f"({body})*" if "/" in body else f"{body}*"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body + mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __add__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return _result_type(self, other)([self[i] + other[i] for i in range(n)])

    def __neg__(self) -> "RatPoly":
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            return poly_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "RatPoly":
        if isinstance(c, int):
            return type(self)([a * c for a in self.coeffs])
        c = as_fraction(c)
        return RatPoly([a * c for a in self.coeffs])

    def __call__(self, v):
        return poly_eval(self, v)

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """Return ``self(inner(X))``."""
        acc = type(self)()
        for c in reversed(self.coeffs):
            acc = poly_mul(acc, inner) + type(self)([c])
        return acc

    def is_integral(self) -> bool:
        return all(as_fraction(c).denominator == 1 for c in self.coeffs)

    def to_int_poly(self) -> "IntPoly":
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return IntPoly(int(c) for c in self.coeffs)

    def to_rat_poly(self) -> "RatPoly":
        return RatPoly(self.coeffs)

    def common_denominator(self) -> int:
        """Least positive integer D with ``D * self`` integral."""
        return lcm(1, *(as_fraction(c).denominator for c in self.coeffs))


class IntPoly(RatPoly):
    """Polynomial with ``int`` coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        f = as_fraction(c)
        if f.denominator != 1:
            raise ValueError(f"non-integer coefficient {c} in IntPoly")
        return int(f)


def _result_type(a: RatPoly, b: RatPoly):
    return IntPoly if isinstance(a, IntPoly) and isinstance(b, IntPoly) else RatPoly


def poly_mul(a: RatPoly, b: RatPoly) -> RatPoly:
    if a.is_zero() or b.is_zero():
        return _result_type(a, b)()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return _result_type(a, b)(out)


def poly_eval(p: RatPoly, v) -> Fraction:
    """Horner evaluation; always returns a reduced ``Fraction``."""
    v = as_fraction(v)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def binomial_expand(offset, d: int) -> RatPoly:
    """Expansion of ``(X + offset)**d``."""
    if d < 0:
        raise ValueError("d must be >= 0")
    offset = as_fraction(offset)
    coeffs = [comb(d, i) * offset ** (d - i) for i in range(d + 1)]
    if offset.denominator == 1:
        return IntPoly(coeffs)
    return RatPoly(coeffs)
