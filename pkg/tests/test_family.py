import pytest
from hypothesis import given, strategies as st

from altpowers.arith import HalfInt
from altpowers.family import (
    BUILTIN_FAMILIES,
    FamilySpec,
    format_family,
    instantiate,
    parse_family,
    prove_symbolic,
    verify_range,
)
from altpowers.power_sum import alt_sum_naive, to_u_form

THM1 = BUILTIN_FAMILIES["thm1-corrected"]
THM1_PRINTED = BUILTIN_FAMILIES["thm1-printed"]
THM2 = BUILTIN_FAMILIES["thm2"]
THM3 = BUILTIN_FAMILIES["thm3"]


def test_instantiate_examples():
    inst = instantiate(THM1, 1)
    assert inst.x == HalfInt(2) and inst.lhs == 750 and inst.rhs == 5**3 + 5**4 and inst.holds
    inst = instantiate(THM1, 5)
    assert str(inst.x) == "1561" and inst.rhs == 5**7 + 5**16 and inst.holds
    inst = instantiate(THM1_PRINTED, 1)
    assert inst.rhs == 650 and inst.lhs == 750 and not inst.holds
    inst = instantiate(THM2, 2)
    assert str(inst.x) == "33/2" and inst.lhs == 216 and inst.holds


def test_k_zero_on_request():
    with pytest.raises(ValueError):
        instantiate(THM1, 0)
    inst = instantiate(THM1, 0, allow_below_domain=True)
    assert inst.x == HalfInt(-2) and inst.lhs == 30 == 5 + 25 and inst.holds


def test_negative_exponent_rejected():
    fam = FamilySpec("shifted", d=5, b=5, rhs_terms=((1, -1), (3, 1)))
    with pytest.raises(ValueError):
        instantiate(fam, 0, allow_below_domain=True)
    with pytest.raises(ValueError):
        FamilySpec("bad", d=5, b=5, rhs_terms=((1, -2),))


def test_spec_invariants():
    with pytest.raises(ValueError):
        FamilySpec("dup", d=5, b=5, rhs_terms=((1, 2), (1, 3)))
    fam = FamilySpec("order", d=5, b=5, rhs_terms=((3, 1), (1, 2)))
    assert fam.rhs_terms == ((1, 2), (3, 1))


def test_holds_tracks_values():
    inst = instantiate(THM1_PRINTED, 2)
    assert inst.holds == (inst.lhs == inst.rhs)


@pytest.mark.parametrize("fam", [THM2, THM3])
def test_verify_range_half_integer_families(fam):
    rep = verify_range(fam, 50)
    assert (rep.holds, rep.fails) == (50, 0)


def test_verify_range_printed_fails():
    rep = verify_range(THM1_PRINTED, 5)
    assert rep.fails == 5 and rep.first_failure.k == 1
    assert (rep.first_failure.lhs, rep.first_failure.rhs) == (750, 650)


def test_verify_range_parallel_identical():
    a = verify_range(THM1_PRINTED, 20)
    b = verify_range(THM1_PRINTED, 20, workers=4)
    assert [i.k for i in a.failures] == [i.k for i in b.failures]
    assert (a.holds, a.fails) == (b.holds, b.fails)


def test_prove_examples():
    p = prove_symbolic(THM1)
    assert p.proven
    assert {(c.power, c.coefficient, c.beta) for c in p.certificate} == {(3, 5, 1), (1, 25, 2)}
    assert p.constant == 0
    p = prove_symbolic(THM3)
    assert p.proven and [(c.power, c.beta) for c in p.certificate] == [(2, 1)] and p.constant == 10
    p = prove_symbolic(FamilySpec("b7", d=5, b=7, rhs_terms=((3, 0),)))
    assert not p.proven and "5" in p.failure_reason and "power of 7" in p.failure_reason
    assert not prove_symbolic(THM1_PRINTED).proven


def test_prove_rejects_wrong_constant_and_fractional_coefficients():
    assert not prove_symbolic(FamilySpec("c", d=4, b=6, rhs_terms=((2, 1),), rhs_const=11)).proven
    p = prove_symbolic(FamilySpec("six", d=6, b=2, rhs_terms=((4, 0),)))
    assert not p.proven and "not an integer" in p.failure_reason


@pytest.mark.parametrize("name", sorted(BUILTIN_FAMILIES))
def test_soundness_link(name):
    fam = BUILTIN_FAMILIES[name]
    if prove_symbolic(fam).proven:
        assert verify_range(fam, 50).ok


@pytest.mark.parametrize("name", sorted(BUILTIN_FAMILIES))
def test_route_independence_at_family_arguments(name):
    fam = BUILTIN_FAMILIES[name]
    g = to_u_form(fam.d)
    for k in range(1, 30):
        assert instantiate(fam, k).lhs == g(fam.b**k)


@pytest.mark.parametrize("name", sorted(BUILTIN_FAMILIES))
def test_x_integrality_follows_base_parity(name):
    fam = BUILTIN_FAMILIES[name]
    for k in range(1, 10):
        assert instantiate(fam, k).x.is_integer == (fam.b % 2 == 1)


def test_text_form():
    fam = parse_family("d=5 b=5 terms=(3k+1),(k+2) const=0")
    assert (fam.d, fam.b, fam.rhs_terms, fam.rhs_const) == (5, 5, ((1, 2), (3, 1)), 0)
    assert prove_symbolic(fam).proven
    assert format_family(FamilySpec("", 5, 5, ((1, 2), (3, 1)))) == "d=5 b=5 terms=(3k+1),(k+2) const=0"
    assert parse_family("thm3") is THM3
    assert parse_family("d=4 b=6 terms=(2k+1) const=10 kmin=0").k_min == 0
    assert parse_family("d=3 b=6 terms=(k),(2) const=0").rhs_terms == ((0, 2), (1, 0))


@pytest.mark.parametrize(
    "bad",
    ["d=5 terms=(k)", "d=5 b=5 terms=(k+1)x", "d=5 b=5 terms=(k2)", "d=5 b=5 foo=1", "d=5 b=5 terms=()"],
)
def test_text_form_rejects(bad):
    with pytest.raises(ValueError):
        parse_family(bad)


terms = st.dictionaries(st.integers(0, 6), st.integers(0, 20), max_size=4).map(
    lambda m: tuple(m.items())
)


@given(st.integers(1, 12), st.integers(2, 40), terms, st.integers(-100, 100), st.integers(0, 3))
def test_text_and_dict_round_trip(d, b, rhs_terms, const, k_min):
    fam = FamilySpec("f", d, b, rhs_terms, const, k_min)
    assert parse_family(fam.to_text()) == fam
    assert FamilySpec.from_dict(fam.to_dict()) == fam


def test_listed_half_integer_argument_at_k4():
    # the k=4 argument is (6^4 - 3)/2 = 1293/2; the value 1233/2 does not satisfy either identity
    assert str(instantiate(THM2, 4).x) == "1293/2"
    assert instantiate(THM2, 4).holds and instantiate(THM3, 4).holds
    assert alt_sum_naive(HalfInt.parse("1233/2"), 3) == 7416 != 6**5
    assert alt_sum_naive(HalfInt.parse("1233/2"), 4) == 9166186 != 6**9 + 10
