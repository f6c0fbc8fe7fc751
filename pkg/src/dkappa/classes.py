"""Divisor classes of D_kappa, their spin/hyperelliptic components and slopes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping

from .core import (
    BadGenus,
    ComponentLabel,
    DivisorClass,
    DKappaError,
    Signature,
)
from .testcurves import intersect_A, intersect_B, intersect_C

__all__ = [
    "InvariantViolation",
    "ZeroC0",
    "NoPositiveDenominator",
    "SlopeReport",
    "assemble_class",
    "divisor_class",
    "component_classes",
    "decomposition_in_paper",
    "spin_component_class",
    "slope_report",
    "slope_closed_even",
    "slope_closed_odd",
    "slope_diaz",
]


class InvariantViolation(DKappaError):
    """Two routes to the same exact quantity disagreed.  Always a bug."""


class ZeroC0(DKappaError):
    pass


class NoPositiveDenominator(DKappaError):
    pass


def assemble_class(
    genus: int,
    b_value,
    c_values: Mapping[int, object],
    component: ComponentLabel = ComponentLabel.FULL,
    signature: Signature | None = None,
) -> DivisorClass:
    """Solve the test-curve relations for the coefficients.

    Uses ``C_i . D = (2 - 2(g-i)) c_i`` for ``1 <= i <= g//2``,
    ``B . D = (2 - 2g) c_0 + c_1`` and the A relation ``c_lambda = c_1 - 12 c_0``.
    ``c_values`` maps ``i`` to ``C_i . D``.
    """
    g = genus
    cs = [Fraction(0)] * (g // 2 + 1)
    for i in range(1, g // 2 + 1):
        cs[i] = -Fraction(c_values[i]) / (2 * (g - i) - 2)
    cs[0] = (cs[1] - Fraction(b_value)) / (2 * g - 2)
    a_value = intersect_A(signature) if signature is not None else 0
    c_lambda = a_value + cs[1] - 12 * cs[0]
    return DivisorClass(g, component, c_lambda, tuple(cs), signature)


def divisor_class(sig: Signature) -> DivisorClass:
    """Full class of D_kappa from its B and C_i intersection numbers."""
    g = sig.genus
    c_values = {i: intersect_C(sig, i) for i in range(1, g // 2 + 1)}
    return assemble_class(g, intersect_B(sig), c_values, ComponentLabel.FULL, sig)


def _is_spin_family(sig: Signature) -> bool:
    return sig.genus >= 4 and sig.parts == (4, *([2] * (sig.genus - 3)))


def decomposition_in_paper(sig: Signature) -> bool:
    """Whether :func:`component_classes` returns a real decomposition for ``sig``."""
    return sig.parts in ((4,), (3, 3)) or _is_spin_family(sig)


def _hyperelliptic_genus3(sig: Signature) -> DivisorClass:
    # C_1 meets the hyperelliptic locus only when y is Weierstrass on Y:
    # 6 such y, each with 3 + 5 limit Weierstrass points.  B meets it only at
    # x = y', with 6 + 2 ramification points of the admissible double cover.
    return assemble_class(3, 6 + 2, {1: (3 + 5) * 6}, ComponentLabel.HYPERELLIPTIC, sig)


def spin_component_class(g: int, parity: ComponentLabel, sig: Signature | None = None) -> DivisorClass:
    """Closed-form class of the even or odd component of D_(4, 2^(g-3))."""
    if g < 4:
        raise BadGenus(f"spin components of (4, 2^(g-3)) need g >= 4, got {g}")
    f = factorial(g - 3)
    cs: list[int] = [0] * (g // 2 + 1)
    if parity is ComponentLabel.EVEN:
        c_lambda = 2 ** (g - 1) * (2**g + 1) * (g - 1) * f
        cs[0] = -(2 ** (2 * g - 4)) * (g - 1) * f
        cs[1] = -(g - 1) * f * 2 ** (g - 1) * (2 ** (g - 1) - 1)
        for i in range(2, g // 2 + 1):
            cs[i] = -(2 ** (g - 1)) * (2 ** (g - i) - 1) * (2**i - 1) * (g - 1) * f
    elif parity is ComponentLabel.ODD:
        c_lambda = 2 ** (g - 1) * (2**g - 1) * (g + 8) * f
        cs[0] = -(2 ** (g - 4)) * ((g + 6) * 2**g - 8) * f
        cs[1] = -(2 ** (g - 2)) * f * ((g + 2) * 2**g + 2 * g - 8)
        for i in range(2, g // 2 + 1):
            bracket = (2**i - 1) * (2**g + 2**i) * g + 2 * (2**g - 2 ** (2 * i)) * i
            cs[i] = -(2 ** (g - i - 1)) * bracket * f
    else:
        raise ValueError(f"parity must be even or odd, got {parity}")
    return DivisorClass.from_values(g, parity, c_lambda, cs, sig)


def component_classes(sig: Signature) -> list[tuple[ComponentLabel, DivisorClass]]:
    """Classes of the connected components of D_kappa where these are known.

    * ``(4)`` in genus 3: hyperelliptic and odd-spin components.
    * ``(3, 3)`` in genus 4: only the non-hyperelliptic component is divisorial.
    * ``(4, 2^(g-3))`` for ``g >= 4``: even and odd spin components.

    Anything else comes back as a single ``full`` entry; check
    :func:`decomposition_in_paper` to tell the two situations apart.
    """
    if sig.parts == (4,):
        full = divisor_class(sig)
        hyp = _hyperelliptic_genus3(sig)
        odd = DivisorClass(
            3,
            ComponentLabel.ODD,
            full.c_lambda - hyp.c_lambda,
            tuple(a - b for a, b in zip(full.c_delta, hyp.c_delta)),
            sig,
        )
        return [(ComponentLabel.HYPERELLIPTIC, hyp), (ComponentLabel.ODD, odd)]
    if sig.parts == (3, 3):
        full = divisor_class(sig)
        nonhyp = DivisorClass(4, ComponentLabel.NON_HYPERELLIPTIC, full.c_lambda, full.c_delta, sig)
        return [(ComponentLabel.NON_HYPERELLIPTIC, nonhyp)]
    if _is_spin_family(sig):
        return [
            (label, spin_component_class(sig.genus, label, sig))
            for label in (ComponentLabel.EVEN, ComponentLabel.ODD)
        ]
    return [(ComponentLabel.FULL, divisor_class(sig))]


@dataclass(frozen=True)
class SlopeReport:
    """``s0 = c_lambda / -c_0`` and ``s = c_lambda / min_i(-c_i)``.

    For full classes ``aggregate_A`` and ``aggregate_B`` are the ``C_1`` and
    ``B`` intersection numbers and ``s0_closed`` is
    ``12 - (2g-2) / (1 + 2(g-2) B/A)``; for component classes they are None.
    """

    s0: Fraction
    s: Fraction
    aggregate_A: int | None = None
    aggregate_B: int | None = None
    s0_closed: Fraction | None = None

    @property
    def s_equals_s0(self) -> bool:
        return self.s == self.s0


def slope_report(dc: DivisorClass) -> SlopeReport:
    c0 = dc.c_delta[0]
    if c0 == 0:
        raise ZeroC0(f"c_0 = 0, slope undefined for {dc}")
    denominator = min(-c for c in dc.c_delta)
    if denominator <= 0:
        raise NoPositiveDenominator(f"min_i(-c_i) = {denominator} <= 0 for {dc}")
    s0 = dc.c_lambda / -c0
    s = dc.c_lambda / denominator
    if dc.component is not ComponentLabel.FULL or dc.signature is None:
        return SlopeReport(s0, s)

    sig = dc.signature
    g = sig.genus
    agg_a = intersect_C(sig, 1)
    agg_b = intersect_B(sig)
    closed = 12 - Fraction(2 * g - 2) / (1 + 2 * (g - 2) * Fraction(agg_b, agg_a))
    if closed != s0:
        raise InvariantViolation(f"s0 = {s0} but closed form gives {closed} for {sig}")
    return SlopeReport(s0, s, agg_a, agg_b, closed)


def slope_closed_even(g: int) -> Fraction:
    if g < 4:
        raise BadGenus(f"need g >= 4, got {g}")
    return 8 + Fraction(1, 2 ** (g - 3))


def slope_closed_odd(g: int) -> Fraction:
    if g < 4:
        raise BadGenus(f"need g >= 4, got {g}")
    return 8 + Fraction(2 ** (g + 1) - g, 2 ** (g - 3) * (g + 6) - 1)


def slope_diaz(g: int) -> Fraction:
    """Slope of the exceptional Weierstrass point divisor, kappa = (g+1, 1^(g-3))."""
    if g < 4:
        raise BadGenus(f"need g >= 4, got {g}")
    return Fraction(3 * (3 * g * g + 3 * g + 2), g * (g + 1))
