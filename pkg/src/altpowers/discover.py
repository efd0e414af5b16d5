"""Derive every family of the form S_d((b^k-3)/2) = sum b^(i*k+beta) + c."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .family import FamilySpec, ProofResult, coefficient_certificate, prove_symbolic


def _candidate(d: int, b: int, allow_const: bool) -> tuple[FamilySpec, ProofResult] | None:
    certs, const, reason = coefficient_certificate(d, b)
    if reason or not certs:
        return None
    if const.denominator != 1 or (const != 0 and not allow_const):
        return None
    spec = FamilySpec(
        name=f"d{d}-b{b}",
        d=d,
        b=b,
        rhs_terms=tuple(c.term for c in certs),
        rhs_const=int(const),
    )
    return spec, prove_symbolic(spec)


def discover_families(
    d_range: tuple[int, int],
    b_range: tuple[int, int],
    allow_const: bool = False,
    workers: int = 1,
) -> list[tuple[FamilySpec, ProofResult]]:
    """Scan inclusive degree and base ranges, sorted by (d, b)."""
    d_lo, d_hi = d_range
    b_lo, b_hi = b_range
    if d_lo < 3:
        raise ValueError("degrees must be >= 3")
    if b_lo < 2:
        raise ValueError("bases must be >= 2")
    grid = [(d, b) for d in range(d_lo, d_hi + 1) for b in range(b_lo, b_hi + 1)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(lambda db: _candidate(*db, allow_const), grid))
    else:
        found = [_candidate(d, b, allow_const) for d, b in grid]
    return [hit for hit in found if hit is not None]
