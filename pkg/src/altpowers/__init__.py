"""Exact tools for identities x^d - (x+1)^d - (x+2)^d + (x+3)^d = sums of powers of b."""

from .arith import HalfInt, exact_log, parse_int, parse_ratio, render_int, render_ratio
from .discover import discover_families
from .family import (
    BUILTIN_FAMILIES,
    FamilyReport,
    FamilySpec,
    IdentityInstance,
    ProofResult,
    format_family,
    instantiate,
    parse_family,
    prove_symbolic,
    verify_range,
)
from .poly import IntPoly, RatPoly, binomial_expand, poly_eval, poly_mul
from .power_sum import UForm, alt_sum_naive, alt_sum_poly, to_u_form
from .search import (
    RhsForm,
    SearchLimits,
    SearchReport,
    SolutionRecord,
    brute_force_search,
    invert_on_odd,
    padic_valuation,
    search_structured,
)

__version__ = "0.1.0"
