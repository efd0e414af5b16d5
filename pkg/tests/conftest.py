import random

import pytest
import sympy

from altpowers.arith import HalfInt


@pytest.fixture
def rng():
    return random.Random(20261019)


def random_halfints(rng, count, bound=10**6):
    """Half-integers in [-bound, bound], mixing integers and odd halves."""
    return [HalfInt(rng.randint(-2 * bound, 2 * bound)) for _ in range(count)]


def sympy_u_form(d):
    """Independent expansion of S_d((u-3)/2) with sympy; ascending Rational coefficients."""
    u = sympy.Symbol("u")
    x = (u - 3) / sympy.Integer(2)
    expr = sympy.expand(x**d - (x + 1) ** d - (x + 2) ** d + (x + 3) ** d)
    poly = sympy.Poly(expr, u)
    coeffs = list(reversed(poly.all_coeffs()))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


_acceptance_results = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
