import pytest
from hypothesis import given, settings

from oracle import ideal_set
from strategies import proper_ideals, rings
from sgmm.errors import NotProper
from sgmm.ideal import ideal_from_generators, maximal_ideal, mu, power, principal, shift, unit_ideal
from sgmm.invariants import (
    is_stable,
    minimal_reduction,
    multiplicity_wrt,
    reduction_number,
    stable_power_bound,
)
from sgmm.semigroup import sg_new

ring_ideal = rings.flatmap(lambda S: proper_ideals(S).map(lambda I: (S, I)))


def _power_set(I, n, hi):
    """I^n by summing generator tuples, straight from the definition."""
    S = I.parent
    sums = {0}
    for _ in range(n):
        sums = {s + g for s in sums for g in I.generators}
    return {z for z in range(hi) if any(z - s in S for s in sums)}


def _brute_reduction_number(I):
    a = I.base
    n = 0
    while True:
        # both sides start at (n+1)a and are full c past that
        hi = (n + 1) * a + I.parent.conductor + 1
        lhs = _power_set(I, n + 1, hi)
        rhs = {z + a for z in _power_set(I, n, hi)} & set(range(hi))
        if lhs == rhs:
            return n
        n += 1


@pytest.mark.parametrize("gens,ideal,r", [
    ((4, 5, 6), (4, 5, 6), 2),
    ((2, 3), (2, 3), 1),
    ((5, 6, 7, 8), (5, 7), 2),
    ((3, 4), (3,), 0),
    ((3, 7, 11), (6, 7, 11), 2),
])
def test_reduction_number_examples(gens, ideal, r):
    I = ideal_from_generators(sg_new(gens), ideal)
    assert reduction_number(I).reduction_number == r
    assert minimal_reduction(I) == min(ideal)


@settings(max_examples=150, deadline=None)
@given(ring_ideal)
def test_reduction_number_matches_brute_force(t):
    S, I = t
    r = reduction_number(I).reduction_number
    assert r == _brute_reduction_number(I)
    assert (r == 0) == (mu(I) == 1)


def test_stable_power_bound():
    S = sg_new([5, 6, 7, 8])
    I = ideal_from_generators(S, [5, 7])
    assert stable_power_bound(I) == 3 and is_stable(power(I, 2)) and not is_stable(I)
    assert stable_power_bound(principal(S, 5)) == 2
    m = maximal_ideal(sg_new([4, 5, 6]))
    n = stable_power_bound(m)
    assert n == 4 and is_stable(power(m, n - 1))


@settings(max_examples=150, deadline=None)
@given(ring_ideal)
def test_stable_power_bound_implies_stability(t):
    S, I = t
    n = stable_power_bound(I)
    if n is not None:
        assert is_stable(power(I, n - 1))


@settings(max_examples=150, deadline=None)
@given(ring_ideal)
def test_stability_is_shift_invariant(t):
    S, I = t
    for z in (1, 5, -I.base, 11):
        J = shift(I, z)
        if J != unit_ideal(S):  # the unit ideal is rejected rather than called stable
            assert is_stable(J) == is_stable(I)


def test_multiplicity_of_ring():
    for gens in [(3, 4), (4, 9, 11, 14), (5, 6, 7), (1,)]:
        S = sg_new(gens)
        assert multiplicity_wrt(maximal_ideal(S), unit_ideal(S)) == S.multiplicity == min(gens)


@settings(max_examples=150, deadline=None)
@given(ring_ideal)
def test_multiplicity_law(t):
    S, I = t
    for M in (unit_ideal(S), maximal_ideal(S), ideal_from_generators(S, [0, 1, 2])):
        e = multiplicity_wrt(I, M)
        assert e == I.base
        # straight count of M minus t^a M in a window
        hi = 3 * S.conductor + 3 * I.base + 10
        assert e == len(ideal_set(M, -5, hi) - {z + I.base for z in ideal_set(M, -5, hi)})


def test_unit_ideal_is_rejected():
    S = sg_new([3, 5])
    for fn in (reduction_number, is_stable, stable_power_bound):
        with pytest.raises(NotProper):
            fn(unit_ideal(S))
