"""Module and ring predicates: minimal multiplicity, Ulrich, trace, reflexive, Burch.

Every predicate that takes an ideal ``I`` fixes the monomial minimal
reduction ``x = t^base(I)``. The defining equalities (``I^2 M = x I M`` and
``I M = x M``) are unchanged when ``I`` is replaced by ``t^d I``, so ``I``
may be any nonzero fractional ideal other than R itself. This is how the
normalized canonical ideal K (which contains 1) stands in for omega_R.
Lengths are reported for the integral representative ``t^d I`` inside R.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import RegularRing
from .ideal import (
    SemigroupIdeal,
    _same_parent,
    canonical_ideal,
    colon,
    dual,
    intersection,
    is_integral,
    is_subset,
    length_quotient,
    maximal_ideal,
    product,
    shift,
    unit_ideal,
)
from .invariants import is_stable, require_proper
from .semigroup import NumericalSemigroup, is_symmetric


@dataclass(frozen=True)
class PredicateVerdict:
    value: bool
    witness: Any = None
    detail: str = ""
    lengths: dict[str, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.value

    def to_dict(self) -> dict[str, Any]:
        witness = self.witness
        if isinstance(witness, SemigroupIdeal):
            witness = {"base": witness.base, "gens": list(witness.generators)}
        elif isinstance(witness, tuple):
            witness = list(witness)
        return {
            "value": self.value,
            "witness": witness,
            "detail": self.detail,
            "lengths": dict(self.lengths),
        }


def integral_representative(I: SemigroupIdeal) -> SemigroupIdeal:
    """The least shift of I that is a proper ideal of R (I itself if it is one)."""
    R = unit_ideal(I.parent)
    if is_integral(I) and I != R:
        return I
    for d in range(-I.base, -I.base + I.parent.conductor + I.parent.multiplicity + 1):
        J = shift(I, d)
        if is_integral(J) and J != R:
            return J
    raise AssertionError("a shift past the conductor is always integral")


def has_min_mult(M: SemigroupIdeal, I: SemigroupIdeal) -> PredicateVerdict:
    """M has minimal multiplicity with respect to I: I^2 M = x I M."""
    _same_parent(M, I)
    require_proper(I)
    I = integral_representative(I)
    a = I.base
    IM = product(I, M)
    I2M = product(I, IM)
    value = I2M == shift(IM, a)
    e = length_quotient(M, shift(M, a))
    len_im = length_quotient(IM, I2M)
    # definition: e(I, M) = len(IM / I^2 M)
    assert value == (e == len_im)
    return PredicateVerdict(
        value,
        witness=a,
        detail="i2m-eq-xim" if value else "i2m-ne-xim",
        lengths={"e": e, "len_IM_I2M": len_im, "len_M_IM": length_quotient(M, IM)},
    )


def is_ulrich(M: SemigroupIdeal, I: SemigroupIdeal) -> PredicateVerdict:
    """M is I-Ulrich: I M = x M."""
    _same_parent(M, I)
    require_proper(I)
    I = integral_representative(I)
    a = I.base
    IM = product(I, M)
    value = IM == shift(M, a)
    e = length_quotient(M, shift(M, a))
    len_m = length_quotient(M, IM)
    assert value == (e == len_m)
    if value:
        assert has_min_mult(M, I).value, "Ulrich module without minimal multiplicity"
    return PredicateVerdict(
        value,
        witness=a,
        detail="im-eq-xm" if value else "im-ne-xm",
        lengths={"e": e, "len_M_IM": len_m},
    )


def is_trace(I: SemigroupIdeal) -> PredicateVerdict:
    """(I : I) = (R : I)."""
    require_proper(I)
    value = colon(I, I) == dual(I)
    return PredicateVerdict(value, detail="trace" if value else "not-trace")


def is_reflexive(I: SemigroupIdeal) -> PredicateVerdict:
    """(R : (R : I)) = I."""
    value = dual(dual(I)) == I
    return PredicateVerdict(value, detail="reflexive" if value else "not-reflexive")


def annihilator_quotient(E: SemigroupIdeal, F: SemigroupIdeal) -> SemigroupIdeal:
    """Graded annihilator of E/F: {s in S : s + E in F}."""
    length_quotient(E, F)  # raises NotASubmodule unless F is inside E
    return intersection(colon(F, E), unit_ideal(E.parent))


def is_min_mult_ring(S: NumericalSemigroup) -> PredicateVerdict:
    """R has minimal multiplicity iff m is stable iff e(R) = edim(R)."""
    value = is_stable(maximal_ideal(S))
    assert value == (S.multiplicity == S.embedding_dimension)
    return PredicateVerdict(
        value,
        detail="regular" if S.is_regular else ("min-mult" if value else "not-min-mult"),
        lengths={"e": S.multiplicity, "edim": S.embedding_dimension},
    )


def is_almost_gorenstein(S: NumericalSemigroup) -> PredicateVerdict:
    """m is omega-Ulrich, i.e. m K = m for the normalized canonical ideal K."""
    if S.is_regular:
        raise RegularRing("almost Gorenstein is only defined for non-regular rings")
    if is_symmetric(S):
        return PredicateVerdict(True, detail="gorenstein")
    v = is_ulrich(maximal_ideal(S), canonical_ideal(S))
    return PredicateVerdict(
        v.value,
        detail="m-omega-ulrich" if v.value else "m-not-omega-ulrich",
        lengths=v.lengths,
    )


def burch_monomial_witness(M: SemigroupIdeal) -> PredicateVerdict:
    """Search for a monomial Burch certificate ``(a, g)``.

    If ``g`` is a minimal generator of M and ``m t^g`` lies in ``t^a M``,
    then in M/t^a M the class of t^g spans a copy of k. Its complement,
    spanned by the other monomials of M outside a + M, is a submodule since
    no monomial of M maps onto g under multiplication by m (g is a minimal
    generator). So k is a direct summand and M is Burch. A false verdict
    only means no monomial certificate exists.
    """
    S = M.parent
    m = maximal_ideal(S)
    for g in M.generators:
        target = shift(m, g)
        for a in range(S.multiplicity, g + S.multiplicity - M.base + 1):
            if a in S and is_subset(target, shift(M, a)):
                return PredicateVerdict(True, witness=(a, g), detail="monomial-witness")
    return PredicateVerdict(False, detail="no-monomial-witness")

