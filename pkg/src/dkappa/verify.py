"""Named self-checks run by ``dkappa verify``.

Each check returns a list of failure messages, empty on success.  Checks never
raise; an unexpected exception is reported as a failure of that check.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Callable

from . import dejonquieres
from .classes import (
    assemble_class,
    component_classes,
    divisor_class,
    slope_closed_even,
    slope_closed_odd,
    slope_diaz,
    slope_report,
    spin_component_class,
)
from .core import (
    ComponentLabel,
    DivisorClass,
    Signature,
    enumerate_signatures,
    signature_new,
    subsets_with_size,
)
from .dejonquieres import dj, dj_closed_all_twos, dj_closed_one_and_twos
from .testcurves import (
    general_tail_even,
    general_tail_odd,
    intersect_A,
    intersect_B,
    intersect_B_even,
    intersect_B_odd,
    intersect_C,
    intersect_C_even,
    intersect_C_odd,
)

# (name, citation, expected coefficients, how to get the computed ones)
PAPER_VALUES: list[tuple[str, str, tuple[int, ...], Callable[[], DivisorClass]]] = [
    (
        "D(4) full class",
        "D_(4) = 380 lambda - 40 delta_0 - 100 delta_1",
        (380, -40, -100),
        lambda: divisor_class(signature_new(3, [4])),
    ),
    (
        "D(4) hyperelliptic component",
        "D_(4)^hyp = 8H with H = 9 lambda - delta_0 - 3 delta_1",
        (72, -8, -24),
        lambda: dict(component_classes(signature_new(3, [4])))[ComponentLabel.HYPERELLIPTIC],
    ),
    (
        "D(4) odd component",
        "D_(4)^odd = 308 lambda - 32 delta_0 - 76 delta_1 (hyperflexes of plane quartics)",
        (308, -32, -76),
        lambda: dict(component_classes(signature_new(3, [4])))[ComponentLabel.ODD],
    ),
]


@dataclass
class SweepEntry:
    sig: Signature
    b: int
    cs: dict[int, int]
    dc: DivisorClass


@dataclass
class CheckResult:
    name: str
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _sweep_one(sig: Signature) -> SweepEntry:
    cs = {i: intersect_C(sig, i) for i in range(1, sig.genus - 1)}
    return SweepEntry(sig, intersect_B(sig), cs, divisor_class(sig))


def compute_sweep(max_genus: int, jobs: int = 1) -> list[SweepEntry]:
    sigs = [s for g in range(3, max_genus + 1) for s in enumerate_signatures(g)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sweep_one, sigs))
    return [_sweep_one(s) for s in sigs]


def elliptic_tail_oracle(sig: Signature) -> int:
    """``4 (g-1)! prod k^2 + sum_{k_m >= 3} (k_m^2 - k_m) dJ[g-1; .., k_m - 2, ..]``."""
    g, ks = sig.genus, sig.parts
    total = 4 * factorial(g - 1) * prod(k * k for k in ks)
    for m, k in enumerate(ks):
        if k >= 3:
            total += (k * k - k) * dj(g - 1, sig.with_parts_replaced(m, k - 2))
    return total


def expanded_c_lambda(sig: Signature, a_val: int, b_val: int) -> Fraction:
    g = sig.genus
    return Fraction(7 - g, 2 * (g - 1) * (g - 2)) * a_val + Fraction(6, g - 1) * b_val


def spin_signature(g: int) -> Signature:
    return signature_new(g, [4] + [2] * (g - 3))


def diaz_signature(g: int) -> Signature:
    return signature_new(g, [g + 1] + [1] * (g - 3))


class Verifier:
    def __init__(self, max_genus: int = 7, jobs: int = 1, seed: int = 0):
        self.max_genus = max_genus
        self.jobs = jobs
        self.rng = random.Random(seed)
        self._sweep: list[SweepEntry] | None = None

    @property
    def sweep(self) -> list[SweepEntry]:
        if self._sweep is None:
            self._sweep = compute_sweep(self.max_genus, self.jobs)
        return self._sweep

    # -- paper regression values ------------------------------------------
    def check_paper_values(self) -> list[str]:
        out = []
        for name, cite, expected, compute in PAPER_VALUES:
            got = compute().coefficients
            if got != tuple(Fraction(e) for e in expected):
                out.append(f"{name}: got {[str(c) for c in got]}, expected {list(expected)} [{cite}]")
        if dj(1, []) != 1:
            out.append("dJ[1; empty] != 1 [convention dJ[1; empty] = 1]")
        return out

    # -- core_types -------------------------------------------------------
    def check_signatures(self) -> list[str]:
        out = []
        for g in range(3, self.max_genus + 1):
            sigs = enumerate_signatures(g)
            if len(set(sigs)) != len(sigs):
                out.append(f"g={g}: duplicate signatures")
            if [s.parts for s in sigs] != sorted((s.parts for s in sigs), reverse=True):
                out.append(f"g={g}: signatures not lexicographically descending")
            for s in sigs:
                shuffled = list(s.parts)
                self.rng.shuffle(shuffled)
                if signature_new(g, shuffled) != s or signature_new(g, s.parts) != s:
                    out.append(f"{s}: canonicalization not permutation-insensitive")
        return out

    def check_subsets(self) -> list[str]:
        out = []
        for g in range(3, self.max_genus + 1):
            for s in enumerate_signatures(g):
                for size in range(s.length + 1):
                    subs = list(subsets_with_size(s, size))
                    if len(subs) != comb(s.length, size):
                        out.append(f"{s} size {size}: {len(subs)} subsets")
                    if any(t.sum + t.complement_sum != 2 * g - 2 for t in subs):
                        out.append(f"{s} size {size}: ||I|| + ||I^C|| != 2g-2")
        return out

    # -- dejonquieres -----------------------------------------------------
    def check_dj_closed_forms(self) -> list[str]:
        out = []
        for g in range(3, max(self.max_genus, 4) + 1):
            if dj(g - 1, [2] * (g - 2)) != dj_closed_all_twos(g):
                out.append(f"g={g}: dJ[g-1; 2^(g-2)] disagrees with closed form")
            if g >= 4 and dj(g - 1, [1] + [2] * (g - 3)) != dj_closed_one_and_twos(g):
                out.append(f"g={g}: dJ[g-1; 1, 2^(g-3)] disagrees with closed form")
        return out

    def check_dj_symmetry(self) -> list[str]:
        out = []
        for g in range(2, self.max_genus):
            for rho in range(0, min(g, 4)):
                for ks in itertools.product(range(0, 4), repeat=rho):
                    v = dj(g, ks)
                    if 0 in ks and v != 0:
                        out.append(f"dJ[{g}; {list(ks)}] = {v}, expected 0")
                    perm = list(ks)
                    self.rng.shuffle(perm)
                    if dj(g, perm) != v:
                        out.append(f"dJ[{g}; {list(ks)}] not permutation invariant")
        return out

    # -- test curves ------------------------------------------------------
    def check_intersections_nonnegative(self) -> list[str]:
        out = []
        for e in self.sweep:
            if intersect_A(e.sig) != 0:
                out.append(f"{e.sig}: A . D != 0")
            for name, v in [("B", e.b), *((f"C{i}", c) for i, c in e.cs.items())]:
                if not isinstance(v, int) or v < 0:
                    out.append(f"g={e.sig.genus} kappa={e.sig}: {name} = {v}")
        return out

    def check_elliptic_tail(self) -> list[str]:
        return [
            f"g={e.sig.genus} kappa={e.sig}: C1 = {e.cs[1]}, elliptic-tail form = {elliptic_tail_oracle(e.sig)}"
            for e in self.sweep
            if e.cs[1] != elliptic_tail_oracle(e.sig)
        ]

    def check_well_defined(self) -> list[str]:
        out = []
        for e in self.sweep:
            g = e.sig.genus
            for i in range(2, g - 1):
                j = g - i
                if 2 <= j <= g - 2 and i < j:
                    lhs = Fraction(e.cs[i], 2 * (g - i) - 2)
                    rhs = Fraction(e.cs[j], 2 * i - 2)
                    if lhs != rhs:
                        out.append(f"g={g} kappa={e.sig}: C{i}/{2*(g-i)-2} = {lhs} != C{j}/{2*i-2} = {rhs}")
        return out

    def check_spin_additivity(self) -> list[str]:
        out = []
        for g in range(4, max(self.max_genus, 4) + 1):
            sig = spin_signature(g)
            if intersect_B_even(g) + intersect_B_odd(g) != intersect_B(sig):
                out.append(f"g={g}: B even + odd != B")
            for i in range(1, g // 2 + 1):
                if intersect_C_even(g, i) + intersect_C_odd(g, i) != intersect_C(sig, i):
                    out.append(f"g={g}: C{i} even + odd != C{i}")
            even = spin_component_class(g, ComponentLabel.EVEN)
            odd = spin_component_class(g, ComponentLabel.ODD)
            if not (even + odd).same_coefficients(divisor_class(sig)):
                out.append(f"g={g}: even + odd class != full class")
            for label, dc, b in ((ComponentLabel.EVEN, even, intersect_B_even(g)),
                                 (ComponentLabel.ODD, odd, intersect_B_odd(g))):
                cvals = {
                    i: (intersect_C_even if label is ComponentLabel.EVEN else intersect_C_odd)(g, i)
                    for i in range(1, g // 2 + 1)
                }
                if not assemble_class(g, b, cvals, label).same_coefficients(dc):
                    out.append(f"g={g}: {label} class disagrees with its intersection numbers")
                if dc.a_relation() != 0:
                    out.append(f"g={g}: {label} class violates the A relation")
        d4 = dict(component_classes(signature_new(3, [4])))
        total = d4[ComponentLabel.HYPERELLIPTIC] + d4[ComponentLabel.ODD]
        if not total.same_coefficients(divisor_class(signature_new(3, [4]))):
            out.append("g=3: hyp + odd != D(4)")
        return out

    def check_general_tail_at_one(self) -> list[str]:
        out = []
        for g in range(4, max(self.max_genus, 4) + 1):
            if general_tail_even(g, 1) != intersect_C_even(g, 1):
                out.append(f"g={g}: general-tail even form at i=1 differs from elliptic-tail value")
            if general_tail_odd(g, 1) != intersect_C_odd(g, 1):
                out.append(f"g={g}: general-tail odd form at i=1 differs from elliptic-tail value")
        return out

    # -- classes ----------------------------------------------------------
    def check_a_relation(self) -> list[str]:
        return [f"{e.sig}: c_lambda + 12 c_0 - c_1 = {e.dc.a_relation()}" for e in self.sweep if e.dc.a_relation()]

    def check_expanded_c_lambda(self) -> list[str]:
        return [
            f"{e.sig}: c_lambda = {e.dc.c_lambda}, expanded form gives {expanded_c_lambda(e.sig, e.cs[1], e.b)}"
            for e in self.sweep
            if e.dc.c_lambda != expanded_c_lambda(e.sig, e.cs[1], e.b)
        ]

    def check_class_symmetry(self) -> list[str]:
        out = []
        for e in self.sweep:
            parts = list(e.sig.parts)
            self.rng.shuffle(parts)
            # bypass canonicalization so the formulas see a different order
            raw = Signature(e.sig.genus, tuple(parts))
            if not divisor_class(raw).same_coefficients(e.dc):
                out.append(f"{e.sig}: class depends on part order {parts}")
        return out

    def check_slopes(self) -> list[str]:
        out = []
        for e in self.sweep:
            try:
                slope_report(e.dc)
            except Exception as exc:  # noqa: BLE001 - reported, not raised
                out.append(f"{e.sig}: {type(exc).__name__}: {exc}")
        for g in range(4, max(self.max_genus, 4) + 1):
            even = slope_report(spin_component_class(g, ComponentLabel.EVEN)).s0
            odd = slope_report(spin_component_class(g, ComponentLabel.ODD)).s0
            if even != slope_closed_even(g):
                out.append(f"g={g}: even s0 {even} != 8 + 1/2^(g-3)")
            if odd != slope_closed_odd(g):
                out.append(f"g={g}: odd s0 {odd} != closed form {slope_closed_odd(g)}")
            diaz = slope_report(divisor_class(diaz_signature(g))).s0
            if diaz != slope_diaz(g):
                out.append(f"g={g}: s0 of (g+1, 1^(g-3)) = {diaz} != {slope_diaz(g)}")
        return out

    def check_dj_integrality(self) -> list[str]:
        calls, bad = dj_integrality_trace(self.max_genus)
        if calls == 0:
            return ["no dJ evaluations were traced"]
        return [f"dJ[{g}; {list(ks)}] = {v}" for g, ks, v in bad]

    def checks(self) -> list[tuple[str, Callable[[], list[str]]]]:
        return [
            ("paper regression values", self.check_paper_values),
            ("signature canonicalization", self.check_signatures),
            ("subset enumeration", self.check_subsets),
            ("dJ closed forms", self.check_dj_closed_forms),
            ("dJ zero absorption and symmetry", self.check_dj_symmetry),
            ("dJ integrality over the sweep", self.check_dj_integrality),
            ("intersections are nonnegative integers", self.check_intersections_nonnegative),
            ("C1 equals elliptic-tail form", self.check_elliptic_tail),
            ("C_i well-definedness", self.check_well_defined),
            ("spin and hyperelliptic additivity", self.check_spin_additivity),
            ("general-tail split at i=1", self.check_general_tail_at_one),
            ("A relation", self.check_a_relation),
            ("expanded c_lambda", self.check_expanded_c_lambda),
            ("permutation invariance of classes", self.check_class_symmetry),
            ("slope identities", self.check_slopes),
        ]

    def run(self) -> list[CheckResult]:
        results = []
        for name, fn in self.checks():
            result = CheckResult(name)
            try:
                result.failures = fn()
            except Exception as exc:  # noqa: BLE001
                result.failures = [f"raised {type(exc).__name__}: {exc}"]
            results.append(result)
        return results

    def slope_survey(self) -> list[str]:
        """Classes with ``s != s0``.  Informational only."""
        found = []
        classes = [e.dc for e in self.sweep]
        for g in range(3, self.max_genus + 1):
            for sig in enumerate_signatures(g):
                classes += [dc for label, dc in component_classes(sig) if label is not ComponentLabel.FULL]
        for dc in classes:
            neg = [-c for c in dc.c_delta]
            if min(neg) != neg[0]:
                found.append(
                    f"g={dc.genus} kappa={dc.signature} {dc.component}: "
                    f"min(-c_i) = {min(neg)} at i={neg.index(min(neg))}, -c_0 = {neg[0]}"
                )
        return found


def dj_integrality_trace(max_genus: int) -> tuple[int, list[tuple[int, tuple[int, ...], Fraction]]]:
    """Recompute the sweep from cold and return every non-integral dJ value seen.

    Returns ``(number of distinct dJ calls, offenders)``.
    """
    seen: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    original = dejonquieres._dj_value

    def recording(g, orders):
        value = original(g, orders)
        seen[(g, orders)] = value
        return value

    dejonquieres._dj_cached.cache_clear()
    dejonquieres._dj_value = recording
    try:
        for g in range(3, max_genus + 1):
            for sig in enumerate_signatures(g):
                try:
                    _sweep_one(sig)
                    component_classes(sig)
                except dejonquieres.NonIntegerResult:
                    pass  # recorded in `seen`
    finally:
        dejonquieres._dj_value = original
        dejonquieres._dj_cached.cache_clear()
    bad = [(g, ks, v) for (g, ks), v in seen.items() if v.denominator != 1]
    return len(seen), bad
