"""Ring-level summary used by the ``ring`` command."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .ideal import (
    SemigroupIdeal,
    algebra_closure,
    canonical_ideal,
    conductor_ideal,
    maximal_ideal,
)
from .predicates import has_min_mult, is_almost_gorenstein, is_min_mult_ring
from .semigroup import NumericalSemigroup, gaps, is_arf, is_symmetric, sg_new


@dataclass(frozen=True)
class RingReport:
    semigroup: NumericalSemigroup
    regular: bool
    gorenstein: bool
    min_mult: bool
    arf: bool
    almost_gorenstein: Optional[bool]  # None for the regular ring
    canonical: SemigroupIdeal
    rk: NumericalSemigroup
    conductor: SemigroupIdeal
    normalization_conductor: SemigroupIdeal
    canonical_min_mult: bool

    def to_dict(self) -> dict[str, Any]:
        S = self.semigroup
        return {
            "semigroup": list(S.generators),
            "multiplicity": S.multiplicity,
            "embedding_dimension": S.embedding_dimension,
            "frobenius": S.frobenius,
            "conductor_number": S.conductor,
            "genus": S.genus,
            "gaps": gaps(S),
            "regular": self.regular,
            "gorenstein": self.gorenstein,
            "min_mult": self.min_mult,
            "arf": self.arf,
            "almost_gorenstein": self.almost_gorenstein,
            "canonical_gens": list(self.canonical.generators),
            "canonical_min_mult": self.canonical_min_mult,
            "rk_semigroup": list(self.rk.generators),
            "conductor_gens": list(self.conductor.generators),
            "normalization_conductor_gens": list(self.normalization_conductor.generators),
        }


def ring_report(S: NumericalSemigroup) -> RingReport:
    K = canonical_ideal(S)
    T = algebra_closure(K)
    return RingReport(
        semigroup=S,
        regular=S.is_regular,
        gorenstein=is_symmetric(S),
        min_mult=is_min_mult_ring(S).value,
        arf=is_arf(S),
        almost_gorenstein=None if S.is_regular else is_almost_gorenstein(S).value,
        canonical=K,
        rk=T,
        conductor=conductor_ideal(S, T),
        normalization_conductor=conductor_ideal(S, sg_new([1])),
        canonical_min_mult=has_min_mult(K, maximal_ideal(S)).value,
    )
