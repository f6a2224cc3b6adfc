"""Ideal arithmetic: quotient, saturation, intersection, elimination,
contraction, dimension."""

import pytest

from idealdec.ideals import (
    Ideal,
    IdealError,
    chained_saturation,
    contract,
    contract_with_trail,
    dimension,
    eliminate,
    ideal_sum,
    intersect,
    quotient,
    saturate,
    sort_saturation_coefficients,
)
from idealdec.orders import lex_order


def _ideal(ring, *texts):
    return Ideal.parse(ring, texts)


def test_membership_and_equality(rxy):
    I = _ideal(rxy, "x^2 - y", "y^2")
    assert I.contains(rxy.parse("x^2*y^2 - y^3"))
    assert not I.contains(rxy.parse("x"))
    J = _ideal(rxy, "y^2", "x^2 - y")
    assert I.equals(J)
    assert I.contains_ideal(J) and J.contains_ideal(I)


def test_zero_and_unit_ideals(rxy):
    Z = Ideal(rxy, [])
    assert Z.is_zero() and not Z.is_trivial()
    U = _ideal(rxy, "x", "x + 1")
    assert U.is_trivial()
    assert dimension(Z) == 2
    assert dimension(U) == -1


def test_quotient(rxy):
    I = _ideal(rxy, "x*y")
    assert quotient(I, rxy.parse("x")).equals(_ideal(rxy, "y"))
    # quotient by a unit or by a member
    assert quotient(I, rxy.parse("2")).equals(I)
    assert quotient(I, rxy.parse("x*y")).is_trivial()
    with pytest.raises(IdealError):
        quotient(I, rxy.zero)


def test_saturate_iterate_reports_exponent(rxy):
    I = _ideal(rxy, "x^2*y")
    got = saturate(I, rxy.parse("x"), "iterate")
    assert got.ideal.equals(_ideal(rxy, "y"))
    assert got.exponent == 2
    # stability: I : h^m == I : h^(m+1)
    again = quotient(got.ideal, rxy.parse("x"))
    assert again.equals(got.ideal)


def test_saturate_extra_variable_matches_iterate(rxy):
    I = _ideal(rxy, "x^2*y", "x*y^3 - x^2")
    h = rxy.parse("x")
    a = saturate(I, h, "iterate")
    b = saturate(I, h, "extra_variable")
    assert a.ideal.equals(b.ideal)
    assert b.exponent is None
    with pytest.raises(IdealError):
        saturate(I, h, "newton")


def test_saturation_by_constant_is_identity(rxy):
    I = _ideal(rxy, "x^2*y")
    got = saturate(I, rxy.parse("5"), "iterate")
    assert got.ideal.equals(I)
    assert got.exponent == 0


def test_intersection(rxy):
    A = _ideal(rxy, "x")
    B = _ideal(rxy, "y")
    assert intersect(A, B).equals(_ideal(rxy, "x*y"))
    # intersection of primary components of <x^2, x*y>
    Q1 = _ideal(rxy, "x")
    Q2 = _ideal(rxy, "x^2", "y")
    assert intersect(Q1, Q2).equals(_ideal(rxy, "x^2", "x*y"))


def test_eliminate(rxyz):
    I = _ideal(rxyz, "y - x^2", "z - x^3")
    J = eliminate(I, [0])
    assert J.contains(rxyz.parse("y^3 - z^2"))
    assert all(g.degree_in(0) == 0 for g in J.generators)
    nothing = eliminate(I, [])
    assert nothing.equals(I)


def test_ideal_sum(rxy):
    I = _ideal(rxy, "x*y")
    J = ideal_sum(I, [rxy.parse("x - 1")])
    assert J.contains(rxy.parse("y"))
    assert dimension(J) == 0


def test_dimension(rxyz):
    assert dimension(_ideal(rxyz, "x*y", "x*z")) == 2
    assert dimension(_ideal(rxyz, "x*y*z")) == 2
    assert dimension(_ideal(rxyz, "y - x^2", "z - x^3")) == 1
    assert dimension(_ideal(rxyz, "x^2 - 1", "y^3 - 1", "z")) == 0


def test_sort_saturation_coefficients_cheapest_first(rxy):
    cs = [
        rxy.parse("x^3 + x + y + 1"),
        rxy.parse("y"),
        rxy.parse("x^2 + y^2"),
    ]
    got = sort_saturation_coefficients(cs)
    assert [str(c) for c in got] == ["y", "x^2 + y^2", "x^3 + x + y + 1"]


def test_chained_saturation_collapses_duplicates(rxy):
    I = _ideal(rxy, "x^2*y^2")
    cs = [rxy.parse("x"), rxy.parse("x"), rxy.parse("y")]
    result, trail = chained_saturation(I, cs)
    assert result.is_trivial()
    assert len(trail) >= 1


def test_contract_recovers_component(rxy):
    # <x*y> localized at {y} contracts to <x>
    I = _ideal(rxy, "x*y")
    got = contract(I, [1])
    assert got.equals(_ideal(rxy, "x"))
    other = contract(I, [0])
    assert other.equals(_ideal(rxy, "y"))


def test_contract_with_trail_records_saturations(rxy):
    I = _ideal(rxy, "x*y")
    got, trail = contract_with_trail(I, [1])
    assert got.equals(_ideal(rxy, "x"))
    assert [(str(c), m) for c, m in trail] == [("y", 1)]


def test_contract_rejects_dependent_sets(rxy):
    I = _ideal(rxy, "x^2 - 1", "y^2 - 1")
    with pytest.raises(IdealError):
        contract(I, [0])


def test_canonical_generators_are_stable(rxy):
    I = _ideal(rxy, "y^2 - 1", "x^2 - y")
    J = _ideal(rxy, "x^2 - y", "y^2 - 1")
    assert I.canonical_generators() == J.canonical_generators()


def test_normal_form_respects_requested_order(rxy):
    I = _ideal(rxy, "x^2 - y")
    lex_nf = I.normal_form(rxy.parse("x^2"), lex_order())
    assert lex_nf == rxy.parse("y")
