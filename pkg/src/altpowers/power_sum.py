"""The alternating power sum S_d(x) = x^d - (x+1)^d - (x+2)^d + (x+3)^d.

Three independent routes are provided: direct exponentiation, the expanded
polynomial in ``x``, and the centred form in ``u = 2x + 3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import HalfInt, as_fraction
from .poly import IntPoly, RatPoly, binomial_expand, poly_eval

SIGNS = (1, -1, -1, 1)


def _check_degree(d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"degree must be a positive integer, got {d!r}")


def alt_sum_naive(x, d: int) -> Fraction:
    """Brute-force value of S_d at ``x`` (int, Fraction or HalfInt)."""
    _check_degree(d)
    x = as_fraction(x)
    return sum((s * (x + j) ** d for j, s in enumerate(SIGNS)), Fraction(0))


@lru_cache(maxsize=None)
def alt_sum_poly(d: int) -> IntPoly:
    """S_d expanded as an integer polynomial in x."""
    _check_degree(d)
    total = IntPoly()
    for j, s in enumerate(SIGNS):
        total = total + binomial_expand(j, d).scale(s)
    return total


@dataclass(frozen=True)
class UForm:
    """S_d written as a polynomial in u = 2x + 3."""

    d: int
    poly: RatPoly

    def __call__(self, u) -> Fraction:
        return poly_eval(self.poly, u)

    @property
    def constant(self) -> Fraction:
        return self.poly[0]

    def nonconstant_terms(self) -> list[tuple[int, Fraction]]:
        return [(i, c) for i, c in enumerate(self.poly.coeffs) if i > 0 and c != 0]

    def integer_evaluator(self):
        """Fast evaluator for integer ``u``.

        Returns ``f`` such that ``f(u)`` is the exact value as an ``int`` when
        it is integral and ``None`` otherwise.
        """
        den = self.poly.common_denominator()
        num = [int(c * den) for c in self.poly.coeffs]
        num.reverse()

        if den == 1:
            def f(u: int):
                acc = 0
                for c in num:
                    acc = acc * u + c
                return acc
        else:
            def f(u: int):
                acc = 0
                for c in num:
                    acc = acc * u + c
                q, r = divmod(acc, den)
                return q if r == 0 else None
        return f


@lru_cache(maxsize=None)
def to_u_form(d: int) -> UForm:
    """2^-d [(u+3)^d - (u+1)^d - (u-1)^d + (u-3)^d]."""
    _check_degree(d)
    total = IntPoly()
    for offset, s in zip((3, 1, -1, -3), SIGNS):
        total = total + binomial_expand(offset, d).scale(s)
    return UForm(d, total.to_rat_poly().scale(Fraction(1, 2**d)))


def x_to_u(x) -> int:
    """u = 2x + 3 for a half-integer x."""
    return HalfInt.from_value(x).twice_value + 3


def u_to_x(u: int) -> HalfInt:
    return HalfInt(u - 3)
