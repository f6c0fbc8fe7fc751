"""Shared value types: signatures, index subsets and divisor classes.

All scalars are :class:`fractions.Fraction` (or plain ``int`` where the value is
known to be integral).  Nothing on a computation path touches floats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "DKappaError",
    "InvalidSignature",
    "BadGenus",
    "BadLength",
    "BadPart",
    "BadSum",
    "ComponentLabel",
    "Signature",
    "IndexSubset",
    "DivisorClass",
    "signature_new",
    "enumerate_signatures",
    "subsets_with_size",
]


class DKappaError(ValueError):
    """Base class for every error raised by this package."""


class InvalidSignature(DKappaError):
    pass


class BadGenus(InvalidSignature):
    pass


class BadLength(InvalidSignature):
    pass


class BadPart(InvalidSignature):
    pass


class BadSum(InvalidSignature):
    pass


class ComponentLabel(str, enum.Enum):
    FULL = "full"
    EVEN = "even"
    ODD = "odd"
    HYPERELLIPTIC = "hyperelliptic"
    NON_HYPERELLIPTIC = "non_hyperelliptic"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Signature:
    """Zero orders ``(k_1, ..., k_{g-2})`` of a differential on a genus ``g`` curve.

    Instances should be built with :func:`signature_new`, which validates and
    sorts the parts into non-increasing order.
    """

    genus: int
    parts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.parts)

    def with_parts_replaced(self, index: int, *values: int) -> list[int]:
        """Return the parts as a list with position ``index`` swapped for ``values``."""
        return [*self.parts[:index], *values, *self.parts[index + 1:]]


def signature_new(genus: int, parts: Sequence[int]) -> Signature:
    g = int(genus)
    ks = [int(k) for k in parts]
    if g < 3:
        raise BadGenus(f"genus must be >= 3, got {g}")
    if len(ks) != g - 2:
        raise BadLength(f"expected g-2 = {g - 2} parts, got {len(ks)}")
    if any(k < 1 for k in ks):
        raise BadPart(f"every part must be >= 1, got {ks}")
    if sum(ks) != 2 * g - 2:
        raise BadSum(f"parts must sum to 2g-2 = {2 * g - 2}, got {sum(ks)}")
    return Signature(g, tuple(sorted(ks, reverse=True)))


def _partitions(n: int, length: int, largest: int) -> Iterator[tuple[int, ...]]:
    # non-increasing partitions of n into exactly `length` parts, each <= largest,
    # produced in lexicographically descending order
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n - (length - 1), largest), 0, -1):
        if first * length < n:
            break
        for rest in _partitions(n - first, length - 1, first):
            yield (first, *rest)


def enumerate_signatures(genus: int) -> list[Signature]:
    """All divisorial signatures of ``genus``, lexicographically descending."""
    if genus < 3:
        raise BadGenus(f"genus must be >= 3, got {genus}")
    n = 2 * genus - 2
    return [Signature(genus, p) for p in _partitions(n, genus - 2, n)]


@dataclass(frozen=True)
class IndexSubset:
    """A set ``I`` of positions into a signature, with ``||I||`` and ``||I^C||``."""

    indices: frozenset[int]
    sum: int
    complement_sum: int
    complement: tuple[int, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.indices)


def subsets_with_size(sig: Signature, size: int) -> Iterator[IndexSubset]:
    """Yield every subset of positions ``{0, ..., g-3}`` with ``size`` elements.

    Positions are zero-based.  Repeated part values are distinct positions, so
    ``(4, 2, 2)`` has two different subsets with sum 6.
    """
    n = sig.length
    if not 0 <= size <= n:
        raise ValueError(f"subset size must lie in [0, {n}], got {size}")
    total = sum(sig.parts)
    for chosen in combinations(range(n), size):
        s = sum(sig.parts[j] for j in chosen)
        rest = tuple(j for j in range(n) if j not in chosen)
        yield IndexSubset(frozenset(chosen), s, total - s, rest)


@dataclass(frozen=True)
class DivisorClass:
    """Coefficients of ``c_lambda * lambda + sum_i c_delta[i] * delta_i``.

    ``signature`` is carried along when known so that downstream reports can
    recompute signature-level aggregates.
    """

    genus: int
    component: ComponentLabel
    c_lambda: Fraction
    c_delta: tuple[Fraction, ...]
    signature: Signature | None = None

    def __post_init__(self) -> None:
        if len(self.c_delta) != self.genus // 2 + 1:
            raise ValueError(
                f"genus {self.genus} needs {self.genus // 2 + 1} boundary "
                f"coefficients, got {len(self.c_delta)}"
            )

    @classmethod
    def from_values(cls, genus, component, c_lambda, c_delta, signature=None):
        return cls(
            genus,
            ComponentLabel(component),
            Fraction(c_lambda),
            tuple(Fraction(c) for c in c_delta),
            signature,
        )

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """``(c_lambda, c_0, ..., c_{g//2})``."""
        return (self.c_lambda, *self.c_delta)

    def a_relation(self) -> Fraction:
        """``c_lambda + 12 c_0 - c_1``; zero for every class this package builds."""
        return self.c_lambda + 12 * self.c_delta[0] - self.c_delta[1]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.genus != self.genus:
            raise ValueError("cannot add classes of different genus")
        return DivisorClass(
            self.genus,
            ComponentLabel.FULL,
            self.c_lambda + other.c_lambda,
            tuple(a + b for a, b in zip(self.c_delta, other.c_delta)),
            self.signature if self.signature == other.signature else None,
        )

    def scaled(self, factor) -> "DivisorClass":
        f = Fraction(factor)
        return DivisorClass(
            self.genus,
            self.component,
            self.c_lambda * f,
            tuple(c * f for c in self.c_delta),
            self.signature,
        )

    def same_coefficients(self, other: "DivisorClass") -> bool:
        return self.genus == other.genus and self.coefficients == other.coefficients

    def __str__(self) -> str:
        terms = [f"{self.c_lambda}*lambda"]
        for i, c in enumerate(self.c_delta):
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign} {abs(c)}*delta_{i}")
        return " ".join(terms)
