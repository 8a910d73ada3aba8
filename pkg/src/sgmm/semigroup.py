"""Numerical semigroups S of N, the exponent sets of the rings k[[S]].

A semigroup is stored as its minimal generators plus a membership bitmask
over ``[0, c)`` where ``c`` is the conductor; every integer ``>= c`` is a
member, so membership queries past the window never touch the mask.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator

from .errors import EmptyGenerators, NonCoprime


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite submonoid of N.

    Equality and hashing use the minimal generating set only; the other
    fields are derived from it.
    """

    generators: tuple[int, ...]
    frobenius: int = field(compare=False)
    conductor: int = field(compare=False)
    membership: int = field(compare=False, repr=False)

    def __contains__(self, z: int) -> bool:
        if z < 0:
            return False
        if z >= self.conductor:
            return True
        return bool(self.membership >> z & 1)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def genus(self) -> int:
        return self.conductor - self.membership.bit_count()

    @property
    def is_regular(self) -> bool:
        """True for S = N, i.e. k[[t]]."""
        return self.conductor == 0

    def elements_below(self, bound: int) -> list[int]:
        return [z for z in range(bound) if z in self]

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def _minimal_generators(membership: int, conductor: int) -> tuple[int, ...]:
    # minimal generators are <= c + e; they are the members not expressible
    # as a sum of two positive members
    def member(z: int) -> bool:
        return z >= conductor or bool(membership >> z & 1)

    e = next(z for z in range(1, conductor + 2) if member(z))
    positive = [z for z in range(1, conductor + e + 1) if member(z)]
    gens = []
    for z in positive:
        if not any(member(z - y) for y in positive if y <= z // 2):
            gens.append(z)
    return tuple(gens)


def _from_membership(membership: int, conductor: int) -> NumericalSemigroup:
    membership &= (1 << conductor) - 1
    return NumericalSemigroup(
        generators=_minimal_generators(membership, conductor),
        frobenius=conductor - 1,
        conductor=conductor,
        membership=membership,
    )


def sg_new(gens: Iterable[int]) -> NumericalSemigroup:
    """Build the numerical semigroup generated by ``gens``.

    Redundant generators are allowed; the stored generating set is minimal.
    """
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyGenerators("a numerical semigroup needs at least one generator")
    if gens[0] <= 0:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    g = 0
    for a in gens:
        g = gcd(g, a)
    if g != 1:
        raise NonCoprime(f"generators {gens} have gcd {g}; not a numerical semigroup")

    e = gens[0]
    # sieve until e consecutive members appear; everything past them is in S
    member = [True]
    run = 1
    z = 0
    while run < e:
        z += 1
        hit = any(z - a >= 0 and member[z - a] for a in gens)
        member.append(hit)
        run = run + 1 if hit else 0
    conductor = z - e + 1
    while conductor > 0 and member[conductor - 1]:
        conductor -= 1
    bits = 0
    for i in range(conductor):
        if member[i]:
            bits |= 1 << i
    return _from_membership(bits, conductor)


def contains(S: NumericalSemigroup, z: int) -> bool:
    return z in S


def gaps(S: NumericalSemigroup) -> list[int]:
    return [z for z in range(S.conductor) if z not in S]


def is_symmetric(S: NumericalSemigroup) -> bool:
    """z in S iff F - z not in S, for every integer z."""
    F = S.frobenius
    return all((z in S) != (F - z in S) for z in range(0, F + 1))


def is_arf(S: NumericalSemigroup) -> bool:
    """Every integrally closed m-primary ideal is stable.

    The integrally closed monomial ideals are ``{s in S : s >= n}``. For
    ``n >= c`` such an ideal is ``n + N``, whose square is ``n + (n + N)``,
    so checking ``n <= c + e`` is more than enough.
    """
    from .ideal import ideal_from_members
    from .invariants import is_stable

    for n in range(1, S.conductor + S.multiplicity + 1):
        if n not in S:
            continue
        I = ideal_from_members(S, lambda z, n=n: z >= n and z in S, n)
        if not is_stable(I):
            return False
    return True


def remove_generator(S: NumericalSemigroup, g: int) -> NumericalSemigroup:
    """S minus a minimal generator ``g > F(S)``; the child in the genus tree."""
    if g not in S.generators or g <= S.frobenius:
        raise ValueError(f"{g} is not a minimal generator above the Frobenius number of {S}")
    bits = S.membership | (((1 << (g + 1)) - 1) ^ ((1 << S.conductor) - 1))
    bits &= ~(1 << g)
    return _from_membership(bits, g + 1)


def enumerate_by_genus(g_max: int) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus <= g_max, once each, genus by genus."""
    if g_max < 0:
        raise ValueError("g_max must be non-negative")
    level = [sg_new([1])]
    for genus in range(g_max + 1):
        yield from level
        if genus == g_max:
            return
        level = [
            remove_generator(S, g)
            for S in level
            for g in S.generators
            if g > S.frobenius
        ]
