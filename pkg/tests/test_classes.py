from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dkappa.classes import (
    NoPositiveDenominator,
    ZeroC0,
    component_classes,
    decomposition_in_paper,
    divisor_class,
    slope_closed_even,
    slope_closed_odd,
    slope_diaz,
    slope_report,
    spin_component_class,
)
from dkappa.core import BadGenus, ComponentLabel as CL, DivisorClass, Signature, enumerate_signatures, signature_new
from dkappa.testcurves import intersect_B, intersect_C

SWEEP = [s for g in range(3, 9) for s in enumerate_signatures(g)]


def coeffs(dc):
    return tuple(dc.coefficients)


def test_D4():
    assert coeffs(divisor_class(signature_new(3, [4]))) == (380, -40, -100)


def test_D42():
    assert coeffs(divisor_class(signature_new(4, [4, 2]))) == (1848, -200, -552, -696)


def test_D422_c2_both_routes():
    sig = signature_new(5, [4, 2, 2])
    assert divisor_class(sig).c_delta[2] == -7520
    assert Fraction(-intersect_C(sig, 3), 2) == -7520


@pytest.mark.parametrize("sig", SWEEP, ids=str)
def test_a_relation_and_expanded_c_lambda(sig):
    dc = divisor_class(sig)
    g = sig.genus
    assert dc.c_lambda + 12 * dc.c_delta[0] - dc.c_delta[1] == 0
    expanded = (Fraction(7 - g, 2 * (g - 1) * (g - 2)) * intersect_C(sig, 1)
                + Fraction(6, g - 1) * intersect_B(sig))
    assert dc.c_lambda == expanded


def test_components_genus3():
    comps = dict(component_classes(signature_new(3, [4])))
    assert list(comps) == [CL.HYPERELLIPTIC, CL.ODD]
    h = DivisorClass.from_values(3, CL.HYPERELLIPTIC, 9, [-1, -3])
    assert coeffs(comps[CL.HYPERELLIPTIC]) == coeffs(h.scaled(8))
    assert coeffs(comps[CL.ODD]) == (308, -32, -76)


def test_components_33_is_non_hyperelliptic():
    sig = signature_new(4, [3, 3])
    ((label, dc),) = component_classes(sig)
    assert label is CL.NON_HYPERELLIPTIC
    assert dc.same_coefficients(divisor_class(sig))


def test_components_42():
    comps = dict(component_classes(signature_new(4, [4, 2])))
    assert coeffs(comps[CL.EVEN]) == (408, -48, -168, -216)
    assert coeffs(comps[CL.ODD]) == (1440, -152, -384, -480)


def test_components_422():
    comps = dict(component_classes(signature_new(5, [4, 2, 2])))
    assert comps[CL.EVEN].c_delta[2] == -2688
    assert comps[CL.ODD].c_delta[2] == -4832


def test_components_fallback():
    sig = signature_new(4, [5, 1])
    ((label, dc),) = component_classes(sig)
    assert label is CL.FULL and not decomposition_in_paper(sig)
    assert decomposition_in_paper(signature_new(6, [4, 2, 2, 2]))


@pytest.mark.parametrize("g", range(4, 10))
def test_spin_components_add_up(g):
    sig = signature_new(g, [4] + [2] * (g - 3))
    even = spin_component_class(g, CL.EVEN)
    odd = spin_component_class(g, CL.ODD)
    assert (even + odd).same_coefficients(divisor_class(sig))
    assert even.a_relation() == 0 and odd.a_relation() == 0


def test_spin_component_bad_genus():
    with pytest.raises(BadGenus):
        spin_component_class(3, CL.EVEN)


def test_slope_D4():
    r = slope_report(divisor_class(signature_new(3, [4])))
    assert r.s0 == Fraction(19, 2)
    assert r.s0_closed == r.s0
    assert r.aggregate_A == 200 and r.aggregate_B == 60


def test_slope_even_genus4():
    assert slope_report(spin_component_class(4, CL.EVEN)).s0 == Fraction(17, 2) == slope_closed_even(4)


def test_slope_odd_genus4():
    assert slope_closed_odd(4) == Fraction(180, 19)
    assert slope_report(spin_component_class(4, CL.ODD)).s0 == Fraction(1440, 152)


def test_slope_diaz_genus4():
    assert slope_diaz(4) == Fraction(93, 10)
    assert slope_report(divisor_class(signature_new(4, [5, 1]))).s0 == Fraction(93, 10)


@pytest.mark.parametrize("sig", SWEEP, ids=str)
def test_slope_routes_agree(sig):
    r = slope_report(divisor_class(sig))
    assert r.s0 == r.s0_closed
    assert r.s <= r.s0


@pytest.mark.parametrize("g", range(4, 10))
def test_closed_slopes(g):
    assert slope_report(spin_component_class(g, CL.EVEN)).s0 == slope_closed_even(g)
    assert slope_report(spin_component_class(g, CL.ODD)).s0 == slope_closed_odd(g)


@pytest.mark.parametrize("g", range(4, 9))
def test_diaz(g):
    sig = signature_new(g, [g + 1] + [1] * (g - 3))
    assert slope_report(divisor_class(sig)).s0 == slope_diaz(g) == 9 + Fraction(6, g * (g + 1))


def test_slope_errors():
    with pytest.raises(ZeroC0):
        slope_report(DivisorClass.from_values(3, CL.FULL, 1, [0, -1]))
    with pytest.raises(NoPositiveDenominator):
        slope_report(DivisorClass.from_values(3, CL.FULL, 1, [-1, 2]))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SWEEP), st.randoms())
def test_class_independent_of_part_order(sig, rnd):
    parts = list(sig.parts)
    rnd.shuffle(parts)
    raw = Signature(sig.genus, tuple(parts))
    assert divisor_class(raw).same_coefficients(divisor_class(sig))
    assert divisor_class(signature_new(sig.genus, parts)) == divisor_class(sig)
