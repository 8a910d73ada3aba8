from hypothesis import strategies as st

from sgmm.ideal import ideal_from_generators
from sgmm.semigroup import sg_new

RINGS = [(1,), (2, 3), (3, 4), (3, 5, 7), (3, 7, 8), (3, 7, 11), (4, 5, 6), (4, 5, 7), (4, 9, 11, 14), (5, 6, 7, 8), (5, 7, 9), (6, 7, 8, 9, 10, 11)]

rings = st.sampled_from(RINGS).map(sg_new)


def ideals(S, lo=-6, integral=False):
    low = 0 if integral else lo
    hi = 2 * S.conductor + 6
    return st.lists(st.integers(low, hi), min_size=1, max_size=4).map(lambda g: ideal_from_generators(S, g))


def proper_ideals(S):
    hi = 2 * S.conductor + 6
    return st.lists(st.integers(1, hi), min_size=1, max_size=4).map(
        lambda g: ideal_from_generators(S, [z for z in g if z in S] or [S.multiplicity])
    )


@st.composite
def ring_and_ideals(draw, n=2, integral=False):
    S = draw(rings)
    return (S, *[draw(ideals(S, integral=integral)) for _ in range(n)])
