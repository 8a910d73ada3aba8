"""Run suites over families and assemble reports."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from ..errors import UnknownSuite
from ..ideal import SemigroupIdeal
from ..parsing import ideal_to_json
from ..semigroup import is_symmetric
from .family import FamilySpec, ring_context, rings
from .suites import SUITES, Instance


@dataclass
class VerificationReport:
    suite_id: str
    family: dict[str, Any]
    instances_checked: int = 0
    rings_visited: int = 0
    rings_filtered: int = 0
    ideals_per_ring_max: int = 0
    modules_per_ring_max: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.counterexamples

    def to_dict(self, with_elapsed: bool = True) -> dict[str, Any]:
        out = {
            "suite_id": self.suite_id,
            "family": self.family,
            "instances_checked": self.instances_checked,
            "rings_visited": self.rings_visited,
            "rings_filtered": self.rings_filtered,
            "ideals_per_ring_max": self.ideals_per_ring_max,
            "modules_per_ring_max": self.modules_per_ring_max,
            "counterexamples": self.counterexamples,
        }
        if with_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_json(self, with_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(with_elapsed), sort_keys=True, indent=2)

    def summary(self) -> str:
        status = "ok" if self.clean else f"{len(self.counterexamples)} counterexample(s)"
        return (
            f"{self.suite_id}: {status}; {self.instances_checked} instances over "
            f"{self.rings_visited} rings ({self.rings_filtered} filtered) in {self.elapsed:.2f}s"
        )


def _encode(value: Any) -> Any:
    if isinstance(value, SemigroupIdeal):
        return ideal_to_json(value)
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _counterexample(S, inst: Instance) -> dict[str, Any]:
    return {
        "semigroup": list(S.generators),
        "ideals": {k: _encode(v) for k, v in sorted(inst.ideals.items())},
        "verdicts": {k: _encode(v) for k, v in sorted(inst.verdicts.items())},
    }


def _run_ring(suite_id: str, spec: FamilySpec, S) -> tuple[int, list[dict], int, int]:
    ctx = ring_context(S, spec.gen_window, spec.max_ideals_per_ring, spec.seed)
    checked = 0
    bad = []
    for inst in SUITES[suite_id].run(ctx):
        checked += 1
        if not inst.ok:
            bad.append(_counterexample(S, inst))
    return checked, bad, len(ctx.ideals), len(ctx.modules)


def run_suite(suite_id: str, spec: Optional[FamilySpec] = None, workers: int = 1) -> VerificationReport:
    if suite_id not in SUITES:
        raise UnknownSuite(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    spec = spec or FamilySpec()
    suite = SUITES[suite_id]
    report = VerificationReport(suite_id, spec.to_dict())
    start = time.perf_counter()
    targets = []
    for S in rings(spec):
        if (suite.non_symmetric and is_symmetric(S)) or (suite.non_regular and S.is_regular):
            report.rings_filtered += 1
            continue
        targets.append(S)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_ring, [suite_id] * len(targets), [spec] * len(targets), targets))
    else:
        results = [_run_ring(suite_id, spec, S) for S in targets]
    for checked, bad, n_ideals, n_modules in results:
        report.rings_visited += 1
        report.instances_checked += checked
        report.counterexamples.extend(bad)
        report.ideals_per_ring_max = max(report.ideals_per_ring_max, n_ideals)
        report.modules_per_ring_max = max(report.modules_per_ring_max, n_modules)
    report.counterexamples.sort(key=lambda c: json.dumps(c, sort_keys=True))
    report.elapsed = time.perf_counter() - start
    return report


def run_suites(ids: Iterable[str], spec: Optional[FamilySpec] = None, workers: int = 1) -> list[VerificationReport]:
    return [run_suite(i, spec, workers) for i in ids]
