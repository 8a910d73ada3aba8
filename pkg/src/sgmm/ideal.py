"""Monomial fractional ideals of k[[S]], i.e. relative ideals of S.

A fractional ideal is a set E of integers, bounded below, with E + S in E.
It is stored as ``base`` (its least element) and a bitmask over the window
``[base, base + c)`` with ``c`` the conductor of S. Everything from
``base + c`` upward is a member because ``base + S`` lies in E, so the
representation is canonical: two ideals are equal iff their
``(parent, base, bits)`` triples are.

Every ideal here is monomial, and a colon of monomial ideals in the fraction
field is again spanned by monomials: if ``f`` sends every monomial of F into
E, then each homogeneous component of ``f`` does too, because E is graded.
So the integer-set colon ``{z : z + F in E}`` is the colon taken in the
total ring of fractions, and the trace and reflexivity tests below decide
the same conditions as in the ring.

In a one-dimensional local domain every nonzero proper ideal is m-primary,
so "m-primary" only means "nonempty and proper" here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator

from .errors import (
    EmptyGenerators,
    NoUnit,
    NotAnExtension,
    NotASubmodule,
    NotIntegral,
    ParentMismatch,
)
from .semigroup import NumericalSemigroup, sg_new


@dataclass(frozen=True)
class SemigroupIdeal:
    parent: NumericalSemigroup
    base: int
    bits: int

    def __contains__(self, z: int) -> bool:
        off = z - self.base
        if off < 0:
            return False
        if off >= self.parent.conductor:
            return True
        return bool(self.bits >> off & 1)

    def members(self, limit: int) -> Iterator[int]:
        """Members below ``limit`` in increasing order."""
        return (z for z in range(self.base, limit) if z in self)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        return tuple(minimal_generators(self))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.generators)) + ") over " + str(self.parent)


def _mask(n: int) -> int:
    return (1 << n) - 1


def _window(E: SemigroupIdeal, lo: int, n: int) -> int:
    """Membership of E on ``[lo, lo + n)`` as a bitmask (bit j <-> lo + j)."""
    if n <= 0:
        return 0
    c = E.parent.conductor
    off = lo - E.base
    w = E.bits >> off if off >= 0 else E.bits << -off
    t = E.base + c - lo
    if t < n:
        w |= _mask(n) ^ _mask(max(t, 0))
    return w & _mask(n)


def _make(S: NumericalSemigroup, lo: int, w: int) -> SemigroupIdeal:
    # w must describe membership on [lo, m0 + c) where m0 is the least member
    if w == 0:
        raise ValueError("empty membership window")
    m0 = (w & -w).bit_length() - 1
    return SemigroupIdeal(S, lo + m0, (w >> m0) & _mask(S.conductor))


def _same_parent(*ideals: SemigroupIdeal) -> NumericalSemigroup:
    S = ideals[0].parent
    for E in ideals[1:]:
        if E.parent != S:
            raise ParentMismatch(f"ideals over {S} and {E.parent}")
    return S


def principal(S: NumericalSemigroup, a: int) -> SemigroupIdeal:
    return SemigroupIdeal(S, a, S.membership)


def unit_ideal(S: NumericalSemigroup) -> SemigroupIdeal:
    return principal(S, 0)


def maximal_ideal(S: NumericalSemigroup) -> SemigroupIdeal:
    e = S.multiplicity
    return SemigroupIdeal(S, e, S.membership >> e | _mask(S.conductor) ^ _mask(max(S.conductor - e, 0)))


def ideal_from_members(
    S: NumericalSemigroup, pred: Callable[[int], bool], lo: int
) -> SemigroupIdeal:
    """Build an ideal from a membership predicate; ``lo`` bounds it below.

    ``pred`` must describe a genuine S-ideal, otherwise the tail assumption
    silently fills in members.
    """
    c = S.conductor
    for m0 in range(lo, lo + 8 * (c + S.multiplicity) + 64):
        if pred(m0):
            break
    else:
        raise ValueError("predicate has no member near the lower bound")
    bits = 0
    for j in range(c):
        if pred(m0 + j):
            bits |= 1 << j
    return SemigroupIdeal(S, m0, bits)


def ideal_from_generators(S: NumericalSemigroup, gens: Iterable[int]) -> SemigroupIdeal:
    gens = sorted(set(gens))
    if not gens:
        raise EmptyGenerators("an ideal needs at least one generator")
    E = principal(S, gens[0])
    for g in gens[1:]:
        E = module_sum(E, principal(S, g))
    return E


def shift(E: SemigroupIdeal, z: int) -> SemigroupIdeal:
    """The ideal t^z E."""
    return SemigroupIdeal(E.parent, E.base + z, E.bits)


def module_sum(E: SemigroupIdeal, F: SemigroupIdeal) -> SemigroupIdeal:
    S = _same_parent(E, F)
    lo = min(E.base, F.base)
    c = S.conductor
    return _make(S, lo, _window(E, lo, c + 1) | _window(F, lo, c + 1))


def intersection(E: SemigroupIdeal, F: SemigroupIdeal) -> SemigroupIdeal:
    S = _same_parent(E, F)
    lo = max(E.base, F.base)
    # lo + c lies in both, so the least common member is at most lo + c
    n = 2 * S.conductor + 1
    return _make(S, lo, _window(E, lo, n) & _window(F, lo, n))


def product(E: SemigroupIdeal, F: SemigroupIdeal) -> SemigroupIdeal:
    """Minkowski sum E + F, the product of the monomial ideals."""
    S = _same_parent(E, F)
    c = S.conductor
    if c == 0:
        return SemigroupIdeal(S, E.base + F.base, 0)
    # a sum landing in the result window uses window members of both factors
    acc = 0
    a, fb = E.bits, F.bits
    i = 0
    while a:
        if a & 1:
            acc |= fb << i
        a >>= 1
        i += 1
    return SemigroupIdeal(S, E.base + F.base, acc & _mask(c))


def power(E: SemigroupIdeal, n: int) -> SemigroupIdeal:
    if n < 0:
        raise ValueError("power exponent must be non-negative")
    result = unit_ideal(E.parent)
    for _ in range(n):
        result = product(result, E)
    return result


def is_subset(E: SemigroupIdeal, F: SemigroupIdeal) -> bool:
    """E contained in F."""
    _same_parent(E, F)
    if E.base < F.base:
        return False
    return E.bits & ~_window(F, E.base, E.parent.conductor) == 0


def minimal_generators(E: SemigroupIdeal) -> list[int]:
    """E minus mE; every minimal generator is below base + c + e."""
    S = E.parent
    mE = product(maximal_ideal(S), E)
    return [z for z in range(E.base, E.base + S.conductor + S.multiplicity) if z in E and z not in mE]


def mu(E: SemigroupIdeal) -> int:
    return len(E.generators)


def colon(E: SemigroupIdeal, F: SemigroupIdeal) -> SemigroupIdeal:
    """(E : F) = {z : z + F in E}.

    Since E absorbs S it suffices that z + g lies in E for each minimal
    generator g of F, so the colon is the intersection of the shifts E - g.
    Every such z is at least base(E) - base(F).
    """
    _same_parent(E, F)
    result = None
    for g in F.generators:
        piece = shift(E, -g)
        result = piece if result is None else intersection(result, piece)
    return result


def dual(E: SemigroupIdeal) -> SemigroupIdeal:
    """E* = (R : E), isomorphic to Hom(E, R)."""
    return colon(unit_ideal(E.parent), E)


def length_quotient(E: SemigroupIdeal, F: SemigroupIdeal) -> int:
    """Length of E/F, which for monomial modules is the size of E minus F."""
    if not is_subset(F, E):
        raise NotASubmodule(f"{F} is not contained in {E}")
    n = F.base + E.parent.conductor - E.base
    return _window(E, E.base, n).bit_count() - F.bits.bit_count()


def is_integral(E: SemigroupIdeal) -> bool:
    """E lies inside R itself."""
    return E.base >= 0 and is_subset(E, unit_ideal(E.parent))


def integral_closure(E: SemigroupIdeal) -> SemigroupIdeal:
    """{s in S : s >= base(E)}, i.e. t^base k[[t]] intersected with R."""
    if not is_integral(E):
        raise NotIntegral("integral closure is only taken for ideals inside R")
    S = E.parent
    return _make(S, E.base, _window(unit_ideal(S), E.base, S.conductor + 1))


def canonical_ideal(S: NumericalSemigroup) -> SemigroupIdeal:
    """K = {z : F(S) - z not in S}; R is contained in K, with equality iff S is symmetric."""
    F = S.frobenius
    bits = 0
    for z in range(S.conductor):
        if F - z not in S:
            bits |= 1 << z
    return SemigroupIdeal(S, 0, bits)


def algebra_closure(E: SemigroupIdeal) -> NumericalSemigroup:
    """The semigroup generated by the members of E, i.e. the ring R[E]."""
    if E.base != 0:
        raise NoUnit("R[E] needs 1 in E and no negative exponents")
    S = E.parent
    window = [z for z in range(1, S.conductor) if z in E]
    return sg_new(window + list(S.generators))


def overring_ideal(S: NumericalSemigroup, T: NumericalSemigroup) -> SemigroupIdeal:
    """An overring k[[T]] of R viewed as a fractional ideal of R."""
    if not all(g in T for g in S.generators):
        raise NotAnExtension(f"{T} does not contain {S}")
    bits = 0
    for z in range(S.conductor):
        if z in T:
            bits |= 1 << z
    return SemigroupIdeal(S, 0, bits)


def conductor_ideal(S: NumericalSemigroup, T: NumericalSemigroup) -> SemigroupIdeal:
    """(R : R[T]) = {z : z + T in S}."""
    return colon(unit_ideal(S), overring_ideal(S, T))
