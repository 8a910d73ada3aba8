"""Theorem suites.

Each suite maps a ring context to a stream of checked instances. A suite
never decides hypotheses by special-casing verdicts: rings or ideals that
fall outside a theorem's hypotheses are skipped and counted as filtered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from ..ideal import (
    SemigroupIdeal,
    algebra_closure,
    colon,
    conductor_ideal,
    dual,
    is_subset,
    length_quotient,
    mu,
    overring_ideal,
    power,
    product,
    shift,
)
from ..idealization import idealization_data, idealization_syzygy_check
from ..invariants import is_stable, multiplicity_wrt, reduction_number
from ..predicates import (
    annihilator_quotient,
    has_min_mult,
    is_almost_gorenstein,
    is_min_mult_ring,
    is_reflexive,
    is_trace,
    is_ulrich,
)
from .family import RingContext

# modules checked per ideal when a suite quantifies over "every module"
EVERY_MODULE_SAMPLE = 32


@dataclass
class Instance:
    ok: bool
    ideals: dict[str, SemigroupIdeal] = field(default_factory=dict)
    verdicts: dict[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class Suite:
    id: str
    description: str
    run: Callable[[RingContext], Iterator[Instance]]
    non_symmetric: bool = False
    non_regular: bool = False


SUITES: dict[str, Suite] = {}


def suite(id: str, description: str, non_symmetric: bool = False, non_regular: bool = False):
    def register(fn):
        SUITES[id] = Suite(id, description, fn, non_symmetric, non_regular)
        return fn

    return register


def _pairs(ctx: RingContext) -> Iterator[tuple[SemigroupIdeal, SemigroupIdeal]]:
    """(M, I) pairs: each module against m, and modules zipped with ideals."""
    for M in ctx.modules:
        yield M, ctx.m
    n = max(len(ctx.ideals), len(ctx.modules))
    for k in range(n):
        I = ctx.ideals[k % len(ctx.ideals)]
        if I != ctx.m:
            yield ctx.modules[k % len(ctx.modules)], I


def _x(I: SemigroupIdeal) -> int:
    return I.base


@suite("CORCHAR", "min mult of M <=> e(M) = mu(mM) <=> all m^i M min mult <=> m^2 M = x mM")
def corchar(ctx: RingContext) -> Iterator[Instance]:
    m, e = ctx.m, ctx.S.multiplicity
    m2 = product(m, m)
    for M in ctx.modules:
        mM = product(m, M)
        a = has_min_mult(M, m).value
        b = mu(mM) == multiplicity_wrt(m, M)
        P = M
        c = True
        for _ in range(4):
            c = c and has_min_mult(P, m).value
            P = product(m, P)
        d = product(m2, M) == shift(mM, e)
        yield Instance(a == b == c == d, {"M": M}, {"minmult": a, "e_eq_mu": b, "powers": c, "shift_iso": d})


@suite("MA_CHAIN", "M min mult <=> mM Ulrich => m^2 M Ulrich")
def ma_chain(ctx: RingContext) -> Iterator[Instance]:
    m = ctx.m
    for M in ctx.modules:
        mM = product(m, M)
        a = has_min_mult(M, m).value
        b = is_ulrich(mM, m).value
        c = is_ulrich(product(m, mM), m).value
        yield Instance(a == b and (not b or c), {"M": M}, {"minmult": a, "mM_ulrich": b, "m2M_ulrich": c})


@suite("RED_POWER", "I^(r-1) M has min mult wrt I and I^(r-1) is not I-Ulrich")
def red_power(ctx: RingContext) -> Iterator[Instance]:
    for I in ctx.ideals:
        r = reduction_number(I).reduction_number
        if mu(I) == 1:
            yield Instance(r == 0, {"I": I}, {"r": r})
            continue
        P = power(I, r - 1) if r >= 1 else None
        ok = r >= 1
        verdicts: dict[str, object] = {"r": r}
        if ok:
            mm = has_min_mult(P, I).value
            ul = is_ulrich(P, I).value
            mods = all(
                has_min_mult(product(P, M), I).value for M in ctx.modules[:EVERY_MODULE_SAMPLE]
            )
            verdicts.update(power_minmult=mm, power_ulrich=ul, modules_minmult=mods)
            ok = mm and not ul and mods
        yield Instance(ok, {"I": I}, verdicts)


@suite("CONDUCTOR", "(R : R[t^-a I]) is I-Ulrich for every m-primary I")
def conductor(ctx: RingContext) -> Iterator[Instance]:
    S = ctx.S
    targets = list(ctx.ideals)
    if not ctx.symmetric:
        targets.append(ctx.K)
    for I in targets:
        T = algebra_closure(shift(I, -I.base))
        c = conductor_ideal(S, T)
        ul = is_ulrich(c, I).value
        mm = has_min_mult(c, I).value
        yield Instance(ul and mm, {"I": I, "conductor": c}, {"ulrich": ul, "minmult": mm})


@suite("PRESTABLE", "mu(I^n) <= n for some n >= 2 => I^(n-1) stable")
def prestable(ctx: RingContext) -> Iterator[Instance]:
    top = max(2, ctx.S.multiplicity)
    for I in ctx.ideals:
        prev = I
        ok = True
        hits = []
        for n in range(2, top + 1):
            cur = product(prev, I)
            if mu(cur) <= n:
                hits.append(n)
                ok = ok and is_stable(prev)
            prev = cur
        yield Instance(ok, {"I": I}, {"hits": hits})


@suite("LAGA", "M min mult wrt I => Hom(IM, N) = (N : IM) is I-Ulrich")
def laga(ctx: RingContext) -> Iterator[Instance]:
    partners = ctx.modules[:EVERY_MODULE_SAMPLE]
    for M, I in _pairs(ctx):
        if not has_min_mult(M, I).value:
            continue
        IM = product(I, M)
        bad = [N for N in (ctx.R, ctx.K, ctx.m, *partners) if not is_ulrich(colon(N, IM), I).value]
        ok = not bad
        if I == ctx.m:
            ok = ok and is_ulrich(dual(IM), I).value
        ideals = {"M": M, "I": I}
        if bad:
            ideals["N"] = bad[0]
        yield Instance(ok, ideals, {"failing_partners": len(bad)})


@suite("ARF_ULRICH", "M min mult wrt I <=> IM is I-Ulrich <=> I kills IM/xIM")
def arf_ulrich(ctx: RingContext) -> Iterator[Instance]:
    for M, I in _pairs(ctx):
        IM = product(I, M)
        a = has_min_mult(M, I).value
        b = is_ulrich(IM, I).value
        c = is_subset(I, annihilator_quotient(IM, shift(IM, _x(I))))
        yield Instance(a == b == c, {"M": M, "I": I}, {"minmult": a, "IM_ulrich": b, "annihilates": c})


@suite("AGCHAR", "I min mult wrt omega => I* omega-Ulrich; trace I: I* omega-Ulrich => I omega-Ulrich",
       non_symmetric=True)
def agchar(ctx: RingContext) -> Iterator[Instance]:
    K = ctx.K
    for I in ctx.ideals:
        Id = dual(I)
        mm = has_min_mult(I, K).value
        dual_ul = is_ulrich(Id, K).value
        tr = is_trace(I).value
        ul = is_ulrich(I, K).value
        hom_identity = colon(K, product(I, K)) == Id
        ok = (not mm or dual_ul) and (not (tr and dual_ul) or ul) and hom_identity
        yield Instance(ok, {"I": I}, {"minmult_omega": mm, "dual_ulrich": dual_ul, "trace": tr,
                                      "ulrich": ul, "hom_identity": hom_identity})


@suite("AGCHAR_COR", "trace I: min mult wrt omega <=> omega-Ulrich", non_symmetric=True)
def agchar_cor(ctx: RingContext) -> Iterator[Instance]:
    for I in ctx.ideals:
        if not is_trace(I).value:
            continue
        a = has_min_mult(I, ctx.K).value
        b = is_ulrich(I, ctx.K).value
        yield Instance(a == b, {"I": I}, {"minmult_omega": a, "ulrich_omega": b})


@suite("RK_MINMULT", "R[K] has min mult wrt omega and equals (R : conductor) up to shift", non_symmetric=True)
def rk_minmult(ctx: RingContext) -> Iterator[Instance]:
    T = algebra_closure(ctx.K)
    RK = overring_ideal(ctx.S, T)
    v = has_min_mult(RK, ctx.K).value
    # R[K] is recovered as the dual of its conductor
    cd = dual(conductor_ideal(ctx.S, T))
    iso = shift(cd, -cd.base) == RK
    yield Instance(v and iso, {"RK": RK}, {"minmult_omega": v, "conductor_dual_is_RK": iso})


@suite("AGA_CHAIN", "I omega-Ulrich => min mult => I* omega-Ulrich => I* min mult; all equal if reflexive",
       non_symmetric=True)
def aga_chain(ctx: RingContext) -> Iterator[Instance]:
    K = ctx.K
    for I in ctx.ideals:
        Id = dual(I)
        c1 = is_ulrich(I, K).value
        c2 = has_min_mult(I, K).value
        c3 = is_ulrich(Id, K).value
        c4 = has_min_mult(Id, K).value
        refl = is_reflexive(I).value
        ok = (not c1 or c2) and (not c2 or c3) and (not c3 or c4)
        if refl:
            ok = ok and c1 == c2 == c3 == c4
        yield Instance(ok, {"I": I}, {"i": c1, "ii": c2, "iii": c3, "iv": c4, "reflexive": refl})


@suite("AGA2", "m omega-Ulrich <=> m min mult wrt omega <=> m* omega-Ulrich <=> m* min mult; = almost Gorenstein",
       non_symmetric=True)
def aga2(ctx: RingContext) -> Iterator[Instance]:
    K, m = ctx.K, ctx.m
    md = dual(m)
    c = [is_ulrich(m, K).value, has_min_mult(m, K).value, is_ulrich(md, K).value, has_min_mult(md, K).value]
    ag = is_almost_gorenstein(ctx.S).value
    yield Instance(len(set(c)) == 1 and ag == c[1], {}, {"chain": c, "almost_gorenstein": ag})


@suite("THM41", "I trace or reflexive, omega min mult wrt I => I stable", non_symmetric=True)
def thm41(ctx: RingContext) -> Iterator[Instance]:
    for I in ctx.ideals:
        if not (is_trace(I).value or is_reflexive(I).value):
            continue
        if not has_min_mult(ctx.K, I).value:
            continue
        st = is_stable(I)
        yield Instance(st, {"I": I}, {"stable": st})


@suite("COR42", "I trace or reflexive: I stable <=> every module min mult wrt I <=> omega min mult wrt I",
       non_symmetric=True)
def cor42(ctx: RingContext) -> Iterator[Instance]:
    sample = ctx.modules[:EVERY_MODULE_SAMPLE]
    for I in ctx.ideals:
        if not (is_trace(I).value or is_reflexive(I).value):
            continue
        a = is_stable(I)
        b = all(has_min_mult(M, I).value for M in sample)
        c = has_min_mult(ctx.K, I).value
        yield Instance(a == b == c, {"I": I}, {"stable": a, "every_module": b, "omega": c})


@suite("COR43", "R min mult <=> omega min mult <=> R min mult as a module", non_symmetric=True)
def cor43(ctx: RingContext) -> Iterator[Instance]:
    a = is_min_mult_ring(ctx.S).value
    b = has_min_mult(ctx.K, ctx.m).value
    c = has_min_mult(ctx.R, ctx.m).value
    yield Instance(a == b == c, {}, {"ring": a, "omega": b, "R_module": c})


@suite("MDUAL", "m* min mult <=> R min mult; m m* = m and (R : m) = (m : m) off the regular ring")
def mdual(ctx: RingContext) -> Iterator[Instance]:
    m = ctx.m
    md = dual(m)
    a = has_min_mult(md, m).value
    b = is_min_mult_ring(ctx.S).value
    ok = a == b and dual(md) == m
    extra = {}
    if not ctx.S.is_regular:
        extra = {"m_mdual": product(m, md) == m, "endo": md == colon(m, m)}
        ok = ok and all(extra.values())
    yield Instance(ok, {"mdual": md}, {"mdual_minmult": a, "ring_minmult": b, **extra})


@suite("IDEALIZATION", "R x M min mult <=> R min mult and M Ulrich; R min mult <=> R x m min mult")
def idealization(ctx: RingContext) -> Iterator[Instance]:
    S, m = ctx.S, ctx.m
    ring = is_min_mult_ring(S).value
    for M in ctx.modules:
        d = idealization_data(S, M)
        rhs = ring and is_ulrich(M, m).value
        ok = d.min_mult == rhs and d.edim_A == d.parts[0] + d.parts[1] and d.e_A == d.parts[2] + d.parts[3]
        yield Instance(ok, {"M": M}, {"A_minmult": d.min_mult, "ring_and_ulrich": rhs})
    syz = idealization_syzygy_check(S, 1).value
    free = idealization_data(S, ctx.R).min_mult
    ok = syz and (free == S.is_regular if ring else True)
    yield Instance(ok, {}, {"syzygy_agree": syz, "R_x_R_minmult": free})


@suite("APPENDIX_A", "M min mult: len(M/xM) = mu(mM) = e(M), len(mM/xM) = mu(mM) - mu(M), m^2 M in xM")
def appendix_a(ctx: RingContext) -> Iterator[Instance]:
    m, e = ctx.m, ctx.S.multiplicity
    for M in ctx.modules:
        if not has_min_mult(M, m).value:
            continue
        mM = product(m, M)
        xM = shift(M, e)
        lmx = length_quotient(M, xM)
        v, w = mu(M), mu(mM)
        ok = (
            lmx == w == multiplicity_wrt(m, M)
            and w >= v
            and length_quotient(mM, xM) == w - v
            and is_subset(product(m, mM), xM)
        )
        yield Instance(ok, {"M": M}, {"len_M_xM": lmx, "mu_M": v, "mu_mM": w})
