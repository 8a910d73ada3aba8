"""Reductions, reduction numbers, multiplicities and stability of monomial ideals.

For a monomial ideal I with least exponent a, the monomial t^a generates a
minimal reduction over any residue field: the valuation of every element of
I^(n+1) is at least (n+1)a, and the powers I^n have at most e(R) minimal
generators, so I^(n+1) = t^a I^n once n >= e(R) - 1. In dimension one the
resulting equalities do not depend on which minimal reduction is chosen,
so fixing t^a loses nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotProper, ReductionNotConfirmed
from .ideal import (
    SemigroupIdeal,
    _same_parent,
    length_quotient,
    mu,
    power,
    product,
    shift,
    unit_ideal,
)


@dataclass(frozen=True)
class ReductionData:
    reducer: int
    reduction_number: int
    certificate: int


def require_proper(I: SemigroupIdeal) -> None:
    if I == unit_ideal(I.parent):
        raise NotProper("the unit ideal is not m-primary")


def reduction_number(I: SemigroupIdeal) -> ReductionData:
    """r = min{n >= 0 : I^(n+1) = t^a I^n} with a = base(I)."""
    require_proper(I)
    a = I.base
    bound = I.parent.conductor + 1
    current = unit_ideal(I.parent)  # I^n
    for n in range(bound + 1):
        nxt = product(current, I)
        if nxt == shift(current, a):
            return ReductionData(reducer=a, reduction_number=n, certificate=n)
        current = nxt
    raise ReductionNotConfirmed(f"t^{a} did not reduce {I} within {bound} powers")


def minimal_reduction(I: SemigroupIdeal) -> int:
    """Exponent of the monomial minimal reduction, certified by reduction_number."""
    return reduction_number(I).reducer


def multiplicity_wrt(I: SemigroupIdeal, M: SemigroupIdeal) -> int:
    """e(I, M) = len(M / xM) = len(IM / xIM) for x = t^base(I)."""
    _same_parent(I, M)
    a = I.base
    e = length_quotient(M, shift(M, a))
    IM = product(I, M)
    assert e == length_quotient(IM, shift(IM, a)), "e(I,M) != e(I,IM)"
    return e


def is_stable(I: SemigroupIdeal) -> bool:
    """I^2 = xI for the minimal reduction x."""
    require_proper(I)
    return product(I, I) == shift(I, I.base)


def stable_power_bound(I: SemigroupIdeal) -> Optional[int]:
    """Least n >= 2 with mu(I^n) <= n; I^(n-1) is then stable."""
    require_proper(I)
    cutoff = max(2, I.parent.conductor + 1)
    P = power(I, 2)
    for n in range(2, cutoff + 1):
        if mu(P) <= n:
            return n
        P = product(P, I)
    return None
