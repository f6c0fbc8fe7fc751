"""Intersection numbers of D_kappa with the test curves A, B and C_i.

C_1 has no separate code path: it is the ``i = 1`` case of :func:`intersect_C`.
The spin-component splits for ``kappa = (4, 2^{g-3})`` come from their closed
forms only.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from .core import BadGenus, ComponentLabel, DKappaError, Signature, subsets_with_size
from .dejonquieres import dj, dj_closed_one_and_twos

__all__ = [
    "BadIndex",
    "IntersectionRecord",
    "intersect_A",
    "intersect_B",
    "intersect_C",
    "intersect_B_even",
    "intersect_B_odd",
    "intersect_C_even",
    "intersect_C_odd",
    "intersection_records",
]


class BadIndex(DKappaError):
    pass


@dataclass(frozen=True)
class IntersectionRecord:
    curve: str  # "A", "B" or "C1", "C2", ...
    component: ComponentLabel
    value: int


def intersect_A(sig: Signature) -> int:
    # A is a pencil of cubics glued at a general point; it never meets D_kappa.
    return 0


def intersect_B(sig: Signature) -> int:
    """``B . D_kappa`` for the one-nodal family with a moving self-node.

    Nodal solutions where a zero of order ``k_m`` lands on the node are split
    as ``j + (k_m - j)`` and each carries multiplicity ``k_m``.
    """
    g, ks = sig.genus, sig.parts
    total = factorial(g - 1) * prod(k * k for k in ks)
    for m, k in enumerate(ks):
        rest = [ks[i] for i in range(len(ks)) if i != m]
        total += k * sum(dj(g - 1, [j - 1, *rest]) for j in range(1, k))
    return total


def _first_sum(sig: Signature, i: int) -> int:
    # i zeros on the genus-i tail X, the rest on Y with y as an extra zero
    g, ks = sig.genus, sig.parts
    total = 0
    for sub in subsets_with_size(sig, i):
        if sub.sum < 2 * i + 1:
            continue
        on_y = [ks[j] for j in sub.complement]
        solutions = factorial(i) * prod(ks[j] ** 2 for j in sub.indices)
        for j in sub.indices:
            mult = ks[j] + sub.complement_sum - 2 * (g - i) + 1
            if mult >= 1:
                solutions -= mult * dj(i, [ks[l] for l in sub.indices if l != j])
        total += dj(g - i, [sub.sum - 2 * i, *on_y]) * solutions
    return total


def _second_sum(sig: Signature, i: int) -> int:
    # i-1 zeros on X, y is a pole of order 2i - ||I|| on the Y side
    g, ks = sig.genus, sig.parts
    total = 0
    for sub in subsets_with_size(sig, i - 1):
        if sub.sum > 2 * i - 2:
            continue
        shift = sub.sum - 2 * i
        on_y = sub.complement
        solutions = factorial(g - i) * shift**2 * prod(ks[j] ** 2 for j in on_y)
        for j in on_y:
            if ks[j] >= 2 * i - sub.sum + 1:
                others = [ks[l] for l in on_y if l != j]
                solutions -= (ks[j] + shift + 1) * dj(g - i, [ks[j] + shift, *others])
        total += dj(i, [ks[j] for j in sub.indices]) * solutions
    return total


def intersect_C(sig: Signature, i: int) -> int:
    """``C_i . D_kappa`` where ``C_i`` moves the attaching point of a genus-i tail.

    Valid for ``1 <= i <= g - 2``.  The relation with the class is
    ``C_i . D = (2 - 2(g - i)) c_{min(i, g-i)}``.
    """
    g = sig.genus
    if not 1 <= i <= g - 2:
        raise BadIndex(f"C_i needs 1 <= i <= g-2 = {g - 2}, got {i}")
    return _first_sum(sig, i) + _second_sum(sig, i)


def _check_spin_genus(g: int) -> None:
    if g < 4:
        raise BadGenus(f"kappa = (4, 2^(g-3)) spin split needs g >= 4, got {g}")


def intersect_B_even(g: int) -> int:
    _check_spin_genus(g)
    return (4 * g - 4) * dj_closed_one_and_twos(g)


def intersect_B_odd(g: int) -> int:
    _check_spin_genus(g)
    return factorial(g - 2) * 2 ** (g - 3) * ((g + 5) * 2**g - 12)


def _check_tail_index(g: int, i: int) -> None:
    _check_spin_genus(g)
    if not 1 <= i <= g // 2:
        raise BadIndex(f"need 1 <= i <= g//2 = {g // 2}, got {i}")


def intersect_C_even(g: int, i: int) -> int:
    _check_tail_index(g, i)
    if i == 1:
        return factorial(g - 1) * 2**g * (2 ** (g - 1) - 1)
    return general_tail_even(g, i)


def intersect_C_odd(g: int, i: int) -> int:
    _check_tail_index(g, i)
    if i == 1:
        return 2 ** (g - 1) * factorial(g - 2) * ((g + 2) * 2**g + 2 * g - 8)
    return general_tail_odd(g, i)


def general_tail_even(g: int, i: int) -> int:
    """Even split of ``C_i`` by the general-tail formula, for any ``i >= 1``.

    At ``i = 1`` this is compared against the dedicated elliptic-tail value.
    """
    return 2**g * (2 ** (g - i) - 1) * (2**i - 1) * (g - 1) * (g - i - 1) * factorial(g - 3)


def general_tail_odd(g: int, i: int) -> int:
    bracket = (2**i - 1) * (2**g + 2**i) * g + 2 * (2**g - 2 ** (2 * i)) * i
    return 2 ** (g - i) * bracket * (g - i - 1) * factorial(g - 3)


def intersection_records(sig: Signature) -> list[IntersectionRecord]:
    """Every test-curve number of the full class, A first then B, C_1, ..., C_{g-2}."""
    full = ComponentLabel.FULL
    records = [
        IntersectionRecord("A", full, intersect_A(sig)),
        IntersectionRecord("B", full, intersect_B(sig)),
    ]
    records += [
        IntersectionRecord(f"C{i}", full, intersect_C(sig, i)) for i in range(1, sig.genus - 1)
    ]
    return records
