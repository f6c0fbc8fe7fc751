from fractions import Fraction
from math import factorial, prod

import pytest

from dkappa.core import BadGenus, Signature, enumerate_signatures, signature_new
from dkappa.dejonquieres import dj
from dkappa.testcurves import (
    BadIndex,
    general_tail_even,
    general_tail_odd,
    intersect_A,
    intersect_B,
    intersect_B_even,
    intersect_B_odd,
    intersect_C,
    intersect_C_even,
    intersect_C_odd,
    intersection_records,
)

SWEEP = [s for g in range(3, 9) for s in enumerate_signatures(g)]


def spin(g):
    return signature_new(g, [4] + [2] * (g - 3))


def elliptic_tail(sig):
    g, ks = sig.genus, list(sig.parts)
    total = 4 * factorial(g - 1) * prod(k * k for k in ks)
    for m, k in enumerate(ks):
        if k >= 3:
            total += (k * k - k) * dj(g - 1, ks[:m] + [k - 2] + ks[m + 1:])
    return total


@pytest.mark.parametrize("parts", [[4], [4, 2], [3, 3]])
def test_A_is_zero(parts):
    assert intersect_A(signature_new(len(parts) + 2, parts)) == 0


def test_B_genus3_by_hand():
    # 2! * 16 + 4 * (dJ[2;0] + dJ[2;1] + dJ[2;2]) = 32 + 4 * (0 + 1 + 6)
    assert intersect_B(signature_new(3, [4])) == 60


def test_B_42():
    # 3! * 64 + 4 * (0 + 10 + 56) + 2 * dJ[3; 0, 4]
    assert intersect_B(signature_new(4, [4, 2])) == 648


def test_B_33():
    # 3! * 81 + 2 * 3 * (dJ[3; 0, 3] + dJ[3; 1, 3]) with dJ[3; 1, 3] = 24
    assert intersect_B(signature_new(4, [3, 3])) == 486 + 6 * 24


def test_C1_genus3_by_hand():
    assert intersect_C(signature_new(3, [4]), 1) == 4 * 2 * 16 + 12 * 6


def test_C2_42_by_hand():
    # first sum: I = {4}: dJ[2; 0+.. ] ... 6 * (128 - 6); second sum: I = {2}: 6 * (128 - 18)
    assert intersect_C(signature_new(4, [4, 2]), 2) == 732 + 660


def test_C_422():
    sig = signature_new(5, [4, 2, 2])
    assert intersect_C(sig, 2) == 30080
    assert intersect_C(sig, 3) == 15040


@pytest.mark.parametrize("i", [0, 3])
def test_C_bad_index(i):
    with pytest.raises(BadIndex):
        intersect_C(signature_new(4, [4, 2]), i)


@pytest.mark.parametrize("sig", SWEEP, ids=str)
def test_C1_matches_elliptic_tail_form(sig):
    assert intersect_C(sig, 1) == elliptic_tail(sig)


@pytest.mark.parametrize("sig", SWEEP, ids=str)
def test_well_definedness(sig):
    g = sig.genus
    for i in range(2, g - 1):
        j = g - i
        if 2 <= j <= g - 2:
            assert Fraction(intersect_C(sig, i), 2 * (g - i) - 2) == Fraction(intersect_C(sig, j), 2 * i - 2)


@pytest.mark.parametrize("sig", SWEEP, ids=str)
def test_intersections_nonnegative_integers(sig):
    for rec in intersection_records(sig):
        assert isinstance(rec.value, int) and rec.value >= 0


def test_strict_threshold_would_break_elliptic_tail():
    # the boundary term of the first sum has multiplicity 1; dropping it loses 6 for (4)
    sig = signature_new(3, [4])
    assert intersect_C(sig, 1) == 200
    assert elliptic_tail(sig) == 200


def test_spin_values_genus4():
    assert intersect_B_even(4) == 120
    assert intersect_B_odd(4) == 528
    assert intersect_C_even(4, 1) == 672
    assert intersect_C_odd(4, 1) == 1536
    assert intersect_C_even(4, 2) == 432
    assert intersect_C_odd(4, 2) == 960


@pytest.mark.parametrize("g", range(4, 10))
def test_spin_additivity(g):
    sig = spin(g)
    assert intersect_B_even(g) + intersect_B_odd(g) == intersect_B(sig)
    for i in range(1, g // 2 + 1):
        assert intersect_C_even(g, i) + intersect_C_odd(g, i) == intersect_C(sig, i)


@pytest.mark.parametrize("g", range(4, 10))
def test_general_tail_forms_cover_i_equal_one(g):
    assert general_tail_even(g, 1) == intersect_C_even(g, 1)
    assert general_tail_odd(g, 1) == intersect_C_odd(g, 1)


def test_spin_errors():
    with pytest.raises(BadGenus):
        intersect_B_even(3)
    with pytest.raises(BadIndex):
        intersect_C_odd(5, 3)


def test_part_order_does_not_matter():
    raw = Signature(6, (2, 1, 4, 3))
    canon = signature_new(6, [4, 3, 2, 1])
    assert intersect_B(raw) == intersect_B(canon)
    assert all(intersect_C(raw, i) == intersect_C(canon, i) for i in range(1, 5))
