"""Worked-example corpus: recompute each record and compare exactly.

Records live in ``data/fixtures.json``. Each has a ring and a list of
checks ``{"op", "args", "expected"}`` whose ideal arguments use the text
grammar of :mod:`sgmm.parsing`.
"""

from __future__ import annotations

import json
import time
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Optional

from .errors import FixtureMismatch
from .ideal import algebra_closure, canonical_ideal, length_quotient, mu
from .idealization import idealization_data
from .invariants import multiplicity_wrt, reduction_number, is_stable, stable_power_bound
from .parsing import parse_ideal, parse_ring
from .predicates import (
    burch_monomial_witness,
    has_min_mult,
    is_almost_gorenstein,
    is_min_mult_ring,
    is_reflexive,
    is_trace,
    is_ulrich,
)
from .semigroup import is_arf, is_symmetric
from .verify.harness import VerificationReport


def _burch(S, M):
    w = burch_monomial_witness(parse_ideal(S, M)).witness
    return list(w) if w else None


OPS: dict[str, Callable[..., Any]] = {
    "gens": lambda S, E: list(parse_ideal(S, E).generators),
    "base": lambda S, E: parse_ideal(S, E).base,
    "mu": lambda S, E: mu(parse_ideal(S, E)),
    "equal": lambda S, E, F: parse_ideal(S, E) == parse_ideal(S, F),
    "length": lambda S, E, F: length_quotient(parse_ideal(S, E), parse_ideal(S, F)),
    "mult": lambda S, I, M: multiplicity_wrt(parse_ideal(S, I), parse_ideal(S, M)),
    "min_mult": lambda S, M, I: has_min_mult(parse_ideal(S, M), parse_ideal(S, I)).value,
    "ulrich": lambda S, M, I: is_ulrich(parse_ideal(S, M), parse_ideal(S, I)).value,
    "stable": lambda S, I: is_stable(parse_ideal(S, I)),
    "trace": lambda S, I: is_trace(parse_ideal(S, I)).value,
    "reflexive": lambda S, I: is_reflexive(parse_ideal(S, I)).value,
    "burch": _burch,
    "reduction_number": lambda S, I: reduction_number(parse_ideal(S, I)).reduction_number,
    "stable_power_bound": lambda S, I: stable_power_bound(parse_ideal(S, I)),
    "idealization_min_mult": lambda S, M: idealization_data(S, parse_ideal(S, M)).min_mult,
    "e": lambda S: S.multiplicity,
    "edim": lambda S: S.embedding_dimension,
    "symmetric": lambda S: is_symmetric(S),
    "arf": lambda S: is_arf(S),
    "ring_min_mult": lambda S: is_min_mult_ring(S).value,
    "almost_gorenstein": lambda S: is_almost_gorenstein(S).value,
    "rk": lambda S: list(algebra_closure(canonical_ideal(S)).generators),
}


def load_corpus(path: Optional[str | Path] = None) -> list[dict[str, Any]]:
    if path is None:
        text = resources.files("sgmm").joinpath("data/fixtures.json").read_text()
    else:
        text = Path(path).read_text()
    return json.loads(text)["fixtures"]


def evaluate(record: dict[str, Any]) -> list[dict[str, Any]]:
    """Mismatches for one record (empty when it reproduces exactly)."""
    S = parse_ring(record["ring"])
    bad = []
    for check in record["checks"]:
        try:
            got = OPS[check["op"]](S, *check.get("args", []))
        except Exception as exc:  # a crash is reported as a mismatch, not raised
            got = f"error: {type(exc).__name__}: {exc}"
        if got != check["expected"]:
            bad.append({
                "fixture": record["id"],
                "op": check["op"],
                "args": check.get("args", []),
                "expected": check["expected"],
                "got": got,
            })
    return bad


def run_fixtures(path: Optional[str | Path] = None, strict: bool = False) -> VerificationReport:
    start = time.perf_counter()
    corpus = load_corpus(path)
    report = VerificationReport("FIXTURES", {"corpus": str(path) if path else "builtin"})
    for record in corpus:
        report.rings_visited += 1
        report.instances_checked += len(record["checks"])
        report.counterexamples.extend(evaluate(record))
    report.elapsed = time.perf_counter() - start
    if strict and report.counterexamples:
        diff = "\n".join(
            f"{c['fixture']}: {c['op']}{tuple(c['args'])} expected {c['expected']!r}, got {c['got']!r}"
            for c in report.counterexamples
        )
        raise FixtureMismatch(diff)
    return report
