import pytest

from sgmm.errors import UnsupportedIndex, ZeroModule
from sgmm.ideal import canonical_ideal, ideal_from_generators, maximal_ideal, mu, unit_ideal
from sgmm.idealization import idealization_data, idealization_syzygy_check
from sgmm.invariants import multiplicity_wrt
from sgmm.predicates import is_min_mult_ring, is_ulrich
from sgmm.semigroup import enumerate_by_genus, sg_new


def test_formulas():
    S = sg_new([3, 4, 5])
    D = idealization_data(S, maximal_ideal(S))
    assert (D.edim_A, D.e_A, D.min_mult) == (6, 6, True)
    assert D.to_dict()["parts"] == {"edim_R": 3, "mu_M": 3, "e_R": 3, "e_M": 3}
    D = idealization_data(S, unit_ideal(S))
    assert (D.edim_A, D.e_A, D.min_mult) == (4, 6, False)


@pytest.mark.parametrize("gens,both", [((3, 4, 5), True), ((4, 5, 6), False), ((1,), True), ((2, 5), True)])
def test_syzygy_check(gens, both):
    S = sg_new(gens)
    v = idealization_syzygy_check(S, 1)
    assert v.value and v.witness == (both, both)


def test_errors():
    S = sg_new([3, 4])
    with pytest.raises(UnsupportedIndex):
        idealization_syzygy_check(S, 2)
    with pytest.raises(ZeroModule):
        idealization_data(S, None)


def test_regular_ring_times_itself():
    N = sg_new([1])
    assert idealization_data(N, unit_ideal(N)).min_mult


def test_equivalence_over_small_family():
    for S in enumerate_by_genus(6):
        m = maximal_ideal(S)
        mods = [unit_ideal(S), canonical_ideal(S), m, ideal_from_generators(S, [0] + [g for g in range(1, S.conductor) if g not in S][:2])]
        for M in mods:
            D = idealization_data(S, M)
            assert D.edim_A == S.embedding_dimension + mu(M)
            assert D.e_A == S.multiplicity + multiplicity_wrt(m, M)
            assert D.min_mult == (is_min_mult_ring(S).value and is_ulrich(M, m).value)
