"""Instance families for the theorem suites.

For each ring the harness draws two samples:

* ideals: proper m-primary ideals I of R, as antichains of generators drawn
  from ``S ∩ [1, gen_window * c(S)]``;
* modules: rank-one torsion-free modules up to isomorphism. Shifting a
  fractional ideal to least exponent 0 makes its generators ``0`` plus some
  gaps of S, so antichains of gaps containing 0 give every such module once.

Both samples are exhaustive when the antichain count fits under the cap and
are drawn with a seeded RNG otherwise.
"""

from __future__ import annotations

import configparser
import random
from dataclasses import asdict, dataclass, fields
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional, Sequence

from ..ideal import (
    SemigroupIdeal,
    canonical_ideal,
    ideal_from_generators,
    maximal_ideal,
    unit_ideal,
)
from ..semigroup import NumericalSemigroup, enumerate_by_genus, gaps, is_symmetric

# exhaustive enumeration gives up past this many antichains and samples instead
ENUMERATION_LIMIT = 20000


@dataclass(frozen=True)
class FamilySpec:
    genus_max: int = 8
    gen_window: int = 2
    max_ideals_per_ring: int = 200
    seed: int = 0
    non_symmetric_only: bool = False
    non_regular_only: bool = False

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_config(cls, path: str | Path, section: str = "family") -> "FamilySpec":
        """Read a ``key = value`` INI file; unknown keys are rejected."""
        parser = configparser.ConfigParser()
        with open(path) as fh:
            parser.read_file(fh)
        if not parser.has_section(section):
            return cls()
        known = {f.name: f.type for f in fields(cls)}
        values = {}
        for key, raw in parser.items(section):
            if key not in known:
                raise ValueError(f"unknown config key {key!r} in {path}")
            if key in ("non_symmetric_only", "non_regular_only"):
                values[key] = parser.getboolean(section, key)
            else:
                values[key] = int(raw)
        return cls(**values)


def _antichains(
    S: NumericalSemigroup, candidates: Sequence[int], limit: int
) -> Optional[list[tuple[int, ...]]]:
    """All nonempty antichains (no difference in S), or None past ``limit``."""
    out: list[tuple[int, ...]] = []

    def extend(chosen: tuple[int, ...], start: int) -> bool:
        for i in range(start, len(candidates)):
            y = candidates[i]
            if all(y - x not in S for x in chosen):
                new = chosen + (y,)
                out.append(new)
                if len(out) > limit or not extend(new, i + 1):
                    return False
        return True

    return out if extend((), 0) else None


def _random_antichains(
    S: NumericalSemigroup,
    candidates: Sequence[int],
    count: int,
    rng: random.Random,
    required: tuple[int, ...] = (),
) -> list[tuple[int, ...]]:
    seen: set[tuple[int, ...]] = set()
    pool = [y for y in candidates if y not in required]
    for _ in range(50 * count):
        if len(seen) >= count:
            break
        size = rng.randint(1, S.multiplicity)
        order = pool[:]
        rng.shuffle(order)
        chosen = list(required)
        for y in order:
            if len(chosen) >= size:
                break
            if all(y - x not in S and x - y not in S for x in chosen):
                chosen.append(y)
        if chosen:
            seen.add(tuple(sorted(chosen)))
    return sorted(seen)


def _sample(
    S: NumericalSemigroup,
    candidates: list[int],
    cap: int,
    rng: random.Random,
    required: tuple[int, ...] = (),
) -> tuple[list[tuple[int, ...]], bool]:
    """Returns (generator sets, exhaustive?)."""
    if required:
        rest = [y for y in candidates if y not in required]
        chains = _antichains(S, rest, ENUMERATION_LIMIT)
        if chains is not None:
            # every antichain of gaps is compatible with 0 since gaps are not in S
            chains = [required] + [required + c for c in chains]
    else:
        chains = _antichains(S, candidates, ENUMERATION_LIMIT)
    if chains is None:
        return _random_antichains(S, candidates, cap, rng, required), False
    if len(chains) <= cap:
        return sorted(chains), True
    return sorted(rng.sample(chains, cap)), False


@dataclass(frozen=True)
class RingContext:
    S: NumericalSemigroup
    m: SemigroupIdeal
    K: SemigroupIdeal
    R: SemigroupIdeal
    symmetric: bool
    ideals: tuple[SemigroupIdeal, ...]
    modules: tuple[SemigroupIdeal, ...]
    exhaustive: bool


@lru_cache(maxsize=512)
def ring_context(S: NumericalSemigroup, gen_window: int, cap: int, seed: int) -> RingContext:
    rng = random.Random(f"{seed}:{S.generators}")
    m, K, R = maximal_ideal(S), canonical_ideal(S), unit_ideal(S)
    hi = max(gen_window * S.conductor, S.multiplicity + 1)
    ideal_sets, ex_i = _sample(S, [z for z in range(1, hi + 1) if z in S], cap, rng)
    module_sets, ex_m = _sample(S, [0] + gaps(S), cap, rng, required=(0,))
    ideals = _dedupe([m] + [ideal_from_generators(S, g) for g in ideal_sets])[: max(cap, 1)]
    modules = _dedupe([R, K] + [ideal_from_generators(S, g) for g in module_sets])[: max(cap, 2)]
    return RingContext(
        S=S,
        m=m,
        K=K,
        R=R,
        symmetric=is_symmetric(S),
        ideals=tuple(ideals),
        modules=tuple(modules),
        exhaustive=ex_i and ex_m,
    )


def _dedupe(items: list[SemigroupIdeal]) -> list[SemigroupIdeal]:
    seen = set()
    out = []
    for E in items:
        if E not in seen:
            seen.add(E)
            out.append(E)
    return out


def rings(spec: FamilySpec) -> Iterator[NumericalSemigroup]:
    for S in enumerate_by_genus(spec.genus_max):
        if spec.non_regular_only and S.is_regular:
            continue
        if spec.non_symmetric_only and is_symmetric(S):
            continue
        yield S


def contexts(spec: FamilySpec) -> Iterator[RingContext]:
    for S in rings(spec):
        yield ring_context(S, spec.gen_window, spec.max_ideals_per_ring, spec.seed)
