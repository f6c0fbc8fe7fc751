"""de Jonquieres counts and the Picard-variety degree.

``dj(g, ks)`` counts sections of a general linear series on a genus ``g``
curve with ordered zeros of orders ``ks``::

    g!/(g-r-1)! * prod(k) * ( sum_{j<r} (-1)^j/(g-r+j) * sum_{|I|=j} prod_{i not in I} k_i
                              + (-1)^r / g )

with ``r = len(ks)``.  The inner bracket is evaluated over exact rationals and
the result is checked to be an integer.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Sequence

from .core import BadGenus, DKappaError

__all__ = [
    "BadArity",
    "NonIntegerResult",
    "ZeroOrder",
    "dj",
    "dj_closed_all_twos",
    "dj_closed_one_and_twos",
    "picard_degree",
]


class BadArity(DKappaError):
    pass


class NonIntegerResult(DKappaError):
    pass


class ZeroOrder(DKappaError):
    pass


def _dj_value(g: int, orders: tuple[int, ...]) -> Fraction:
    rho = len(orders)
    bracket = Fraction((-1) ** rho, g)
    for j in range(rho):
        # sum over |I| = j of the product of the orders outside I
        inner = sum(
            prod(orders[i] for i in range(rho) if i not in dropped)
            for dropped in combinations(range(rho), j)
        )
        bracket += Fraction((-1) ** j, g - rho + j) * inner
    return factorial(g) // factorial(g - rho - 1) * prod(orders) * bracket


@lru_cache(maxsize=None)
def _dj_cached(g: int, orders: tuple[int, ...]) -> int:
    value = _dj_value(g, orders)
    if value.denominator != 1:
        raise NonIntegerResult(f"dJ[{g}; {list(orders)}] = {value} is not an integer")
    return value.numerator


def dj(g: int, orders: Sequence[int]) -> int:
    """Exact de Jonquieres number ``dJ[g; k_1, ..., k_r]``.

    Requires ``g >= 1`` and ``0 <= r <= g - 1``.  Orders equal to zero are
    allowed and give 0.  The empty case ``dj(g, [])`` is 1 for every ``g``.
    """
    ks = tuple(int(k) for k in orders)
    if g < 1 or len(ks) > g - 1:
        raise BadArity(f"dJ[{g}; ...] needs 0 <= len(orders) <= g-1, got {len(ks)}")
    if any(k < 0 for k in ks):
        raise BadArity(f"orders must be nonnegative, got {list(ks)}")
    return _dj_cached(g, ks)


def dj_closed_all_twos(g: int) -> int:
    """``dJ[g-1; 2^(g-2)] = (g-2)! 2^(g-2) (2^(g-1) - 1)``."""
    if g < 3:
        raise BadGenus(f"need g >= 3, got {g}")
    return factorial(g - 2) * 2 ** (g - 2) * (2 ** (g - 1) - 1)


def dj_closed_one_and_twos(g: int) -> int:
    """``dJ[g-1; 1, 2^(g-3)] = (g-3)! 2^(g-3) ((g-3) 2^(g-2) + 1)``."""
    if g < 4:
        raise BadGenus(f"need g >= 4, got {g}")
    return factorial(g - 3) * 2 ** (g - 3) * ((g - 3) * 2 ** (g - 2) + 1)


def picard_degree(g: int, orders: Sequence[int]) -> int:
    """Number of ``(p_1..p_g)`` with ``sum k_i p_i ~ L`` on a general curve: ``g! prod k_i^2``."""
    ks = [int(k) for k in orders]
    if len(ks) != g:
        raise BadArity(f"expected {g} orders, got {len(ks)}")
    if any(k == 0 for k in ks):
        raise ZeroOrder(f"orders must be nonzero, got {ks}")
    return factorial(g) * prod(k * k for k in ks)
