"""Invariants of the idealization A = R x M (trivial extension) for monomial M.

A is not a semigroup ring, so it is never built; its embedding dimension and
multiplicity come from those of R and M:

    edim(A) = edim(R) + mu(M),   e(A) = e(R) + e(M).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import UnsupportedIndex, ZeroModule
from .ideal import SemigroupIdeal, maximal_ideal, mu
from .invariants import multiplicity_wrt
from .predicates import PredicateVerdict, is_min_mult_ring, is_ulrich
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class IdealizationData:
    edim_A: int
    e_A: int
    min_mult: bool
    parts: tuple[int, int, int, int]  # (edim_R, mu_M, e_R, e_M)

    def to_dict(self) -> dict:
        edim_R, mu_M, e_R, e_M = self.parts
        return {
            "edim_A": self.edim_A,
            "e_A": self.e_A,
            "min_mult": self.min_mult,
            "parts": {"edim_R": edim_R, "mu_M": mu_M, "e_R": e_R, "e_M": e_M},
        }


def idealization_data(S: NumericalSemigroup, M: Optional[SemigroupIdeal]) -> IdealizationData:
    if M is None:
        raise ZeroModule("the idealization needs a nonzero torsion-free module")
    m = maximal_ideal(S)
    edim_R, mu_M = S.embedding_dimension, mu(M)
    e_R, e_M = S.multiplicity, multiplicity_wrt(m, M)
    edim_A, e_A = edim_R + mu_M, e_R + e_M
    min_mult = e_A == edim_A
    # A has minimal multiplicity iff R does and M is Ulrich
    assert min_mult == (is_min_mult_ring(S).value and is_ulrich(M, m).value)
    return IdealizationData(edim_A, e_A, min_mult, (edim_R, mu_M, e_R, e_M))


def idealization_syzygy_check(S: NumericalSemigroup, i: int = 1) -> PredicateVerdict:
    """Compare "R has minimal multiplicity" with "R x (first syzygy of k) has it".

    Only ``i = 1`` is supported, where the syzygy is m itself.
    """
    if i != 1:
        raise UnsupportedIndex(f"syzygy index {i}: only the first syzygy m is monomial")
    ring = is_min_mult_ring(S).value
    ideal = idealization_data(S, maximal_ideal(S)).min_mult
    return PredicateVerdict(
        ring == ideal,
        witness=(ring, ideal),
        detail="agree" if ring == ideal else "disagree",
    )
