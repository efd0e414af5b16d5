"""Bounded exhaustive search for S_d(x) = structured right side.

The structured search enumerates exponents and inverts the (monotone) u-form
by bisection; ``brute_force_search`` enumerates u directly and is kept as an
independent oracle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .arith import HalfInt
from .power_sum import UForm, alt_sum_naive, to_u_form

ODD = "odd"
ANY = "any"


def padic_valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2:
        raise ValueError("p must be >= 2")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True)
class RhsForm:
    """Right-side shape: ``two-powers``, ``one-power`` or ``power-plus-const``."""

    variant: str
    const: int = 0

    VARIANTS = ("two-powers", "one-power", "power-plus-const")

    def __post_init__(self):
        if self.variant not in self.VARIANTS:
            raise ValueError(f"unknown right-side form {self.variant!r}")
        if self.variant != "power-plus-const" and self.const:
            raise ValueError("only power-plus-const carries a constant")

    @classmethod
    def parse(cls, text: str) -> "RhsForm":
        if text.startswith("power-plus-const:"):
            return cls("power-plus-const", int(text.split(":", 1)[1]))
        return cls(text)

    def __str__(self):
        if self.variant == "power-plus-const":
            return f"power-plus-const:{self.const}"
        return self.variant

    def value(self, b: int, exponents: tuple[int, ...]) -> int:
        if self.variant == "two-powers":
            m, n = exponents
            return b**m + b**n
        (m,) = exponents
        return b**m + self.const

    def exponent_tuples(self, n_max: int) -> Iterator[tuple[int, ...]]:
        if self.variant == "two-powers":
            for n in range(n_max + 1):
                for m in range(n + 1):
                    yield (m, n)
        else:
            for m in range(n_max + 1):
                yield (m,)

    def decompose(self, b: int, value: int) -> tuple[int, ...] | None:
        """Exponents representing ``value`` in this form, or None."""
        if self.variant == "two-powers":
            if value < 2:
                return None
            m = padic_valuation(value, b)
            rest = value // b**m
            if rest == 1:
                # b^m alone is b^(m-1) + b^(m-1) only for b = 2
                return (m - 1, m - 1) if b == 2 and m >= 1 else None
            if rest == 2:
                return (m, m)
            gap = rest - 1
            j = padic_valuation(gap, b)
            return (m, m + j) if j >= 1 and gap == b**j else None
        target = value - self.const
        if target < 1:
            return None
        e = padic_valuation(target, b)
        return (e,) if target == b**e else None


@dataclass(frozen=True)
class SearchLimits:
    n_max: int
    u_max: int
    parity: str = ODD

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError("n_max must be >= 0")
        if self.u_max < 0:
            raise ValueError("u_max must be >= 0")
        if self.parity not in (ODD, ANY):
            raise ValueError(f"parity must be 'odd' or 'any', got {self.parity!r}")

    def admits(self, u: int) -> bool:
        return 1 <= u <= self.u_max and (self.parity == ANY or u % 2 == 1)


@dataclass(frozen=True, order=True)
class SolutionRecord:
    sort_key: tuple = field(repr=False)
    d: int = field(compare=False)
    b: int = field(compare=False)
    u: int = field(compare=False)
    exponents: tuple[int, ...] = field(compare=False)
    verified: bool = field(compare=False)

    @property
    def x(self) -> HalfInt:
        return HalfInt(self.u - 3)


def make_record(d: int, b: int, rhs: RhsForm, u: int, exponents: tuple[int, ...]) -> SolutionRecord:
    """Build a record, re-checking it by direct exponentiation."""
    verified = alt_sum_naive(HalfInt(u - 3), d) == rhs.value(b, exponents)
    key = (exponents[-1], exponents[0], u)
    return SolutionRecord(key, d, b, u, exponents, verified)


@dataclass
class SearchReport:
    d: int
    b: int
    rhs: RhsForm
    limits: SearchLimits
    method: str
    solutions: list[SolutionRecord]

    @property
    def completeness_claim(self) -> str:
        if self.rhs.variant == "two-powers":
            span = f"0 <= m <= n <= {self.limits.n_max}"
        else:
            span = f"0 <= m <= {self.limits.n_max}"
        par = "odd u" if self.limits.parity == ODD else "any u"
        return f"all solutions with {span} and 1 <= u <= {self.limits.u_max} ({par})"

    def keys(self) -> list[tuple[int, tuple[int, ...]]]:
        return [(s.u, s.exponents) for s in self.solutions]


def _check_monotone(g: UForm) -> None:
    terms = g.nonconstant_terms()
    if not terms or any(c < 0 for _, c in terms):
        raise ValueError(
            f"u-form of degree {g.d} is not strictly increasing on u >= 1; "
            "need nonnegative non-constant coefficients, at least one positive"
        )


def invert_on_odd(g: UForm, N, parity: str = ODD) -> int | None:
    """The unique u >= 1 of admissible parity with g(u) = N, if any."""
    _check_monotone(g)
    N = Fraction(N)
    if g(1) > N:
        return None
    lo, hi = 1, 2
    while g(hi) < N:
        lo, hi = hi, hi * 2
    # invariant: g(lo) <= N <= g(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if g(mid) <= N:
            lo = mid
        else:
            hi = mid
    for u in (lo, hi):
        if g(u) == N:
            return u if parity == ANY or u % 2 == 1 else None
    return None


# -- residue pruning -----------------------------------------------------------


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class ResidueFilter:
    """Necessary condition g(u) = N checked modulo prime powers dividing b.

    For b = 5 and d = 5 this encodes the 5-adic law: g(u) is never exactly
    divisible by 25, so pairs with m = 2 (and m = 0) are skipped without any
    bisection.  Sound by construction; never decides a hit by itself.
    """

    def __init__(self, g: UForm, b: int, parity: str, min_modulus: int = 500):
        den = g.poly.common_denominator()
        self.moduli: list[tuple[int, frozenset[int]]] = []
        for p in _prime_factors(b):
            if den % p == 0:
                continue
            q = p
            while q < min_modulus:
                q *= p
            num = [int(c * den) % q for c in g.poly.coeffs]
            inv = pow(den, -1, q)
            image = set()
            for r in range(q):
                if parity == ODD and p == 2 and r % 2 == 0:
                    continue
                acc = 0
                for c in reversed(num):
                    acc = (acc * r + c) % q
                image.add(acc * inv % q)
            self.moduli.append((q, frozenset(image)))

    def allows(self, N: int) -> bool:
        return all(N % q in image for q, image in self.moduli)


# -- searches ------------------------------------------------------------------


def _validate(d: int, b: int) -> None:
    if d < 3:
        raise ValueError(f"degree must be >= 3 for a non-constant u-form, got {d}")
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")


def _search_chunk(args) -> list[SolutionRecord]:
    d, b, rhs, limits, prune, tuples = args
    g = to_u_form(d)
    g_cap = g(limits.u_max) if limits.u_max >= 1 else None
    filt = ResidueFilter(g, b, limits.parity) if prune else None
    hits = []
    for exps in tuples:
        N = rhs.value(b, exps)
        if g_cap is None or N > g_cap:
            continue
        if filt is not None and not filt.allows(N):
            continue
        u = invert_on_odd(g, N, limits.parity)
        if u is not None and limits.admits(u):
            hits.append(make_record(d, b, rhs, u, exps))
    return hits


def search_structured(
    d: int,
    b: int,
    rhs: RhsForm,
    limits: SearchLimits,
    prune: bool = True,
    workers: int = 1,
) -> SearchReport:
    """Exponent-first search: form N for every exponent tuple and invert g(u) = N."""
    _validate(d, b)
    _check_monotone(to_u_form(d))
    tuples = list(rhs.exponent_tuples(limits.n_max))
    if workers > 1 and len(tuples) > 1:
        chunks = [tuples[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_search_chunk, [(d, b, rhs, limits, prune, c) for c in chunks])
            hits = [h for part in parts for h in part]
    else:
        hits = _search_chunk((d, b, rhs, limits, prune, tuples))
    return SearchReport(d, b, rhs, limits, "structured", sorted(hits))


def brute_force_search(d: int, b: int, rhs: RhsForm, limits: SearchLimits) -> SearchReport:
    """Enumerate every admissible u <= u_max and test right-side membership."""
    _validate(d, b)
    evaluate = to_u_form(d).integer_evaluator()
    step = 2 if limits.parity == ODD else 1
    hits = []
    for u in range(1, limits.u_max + 1, step):
        value = evaluate(u)
        if value is None:
            continue
        exps = rhs.decompose(b, value)
        if exps is None or max(exps) > limits.n_max:
            continue
        hits.append(make_record(d, b, rhs, u, exps))
    return SearchReport(d, b, rhs, limits, "brute-force", sorted(hits))
