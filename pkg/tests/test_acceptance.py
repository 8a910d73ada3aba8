"""Acceptance criteria, one test each, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

import io
import json
import random
import sys
import tempfile
import time
from contextlib import redirect_stdout
from pathlib import Path


from oracle import semigroups_of_genus
from sgmm.cli import main
from sgmm.errors import NotProper, RegularRing, SgmmError, UnsupportedIndex, ZeroModule
from sgmm.fixtures import run_fixtures
from sgmm.ideal import (
    canonical_ideal,
    colon,
    dual,
    ideal_from_generators,
    is_subset,
    maximal_ideal,
    product,
    unit_ideal,
)
from sgmm.idealization import idealization_data, idealization_syzygy_check
from sgmm.invariants import is_stable, multiplicity_wrt, reduction_number, stable_power_bound
from sgmm.predicates import (
    burch_monomial_witness,
    has_min_mult,
    is_almost_gorenstein,
    is_min_mult_ring,
    is_reflexive,
    is_trace,
    is_ulrich,
)
from sgmm.report import ring_report
from sgmm.semigroup import enumerate_by_genus, sg_new
from sgmm.verify import SUITES, FamilySpec
from sgmm.verify.family import contexts
from sgmm.verify.suites import _pairs

SUITE_BUDGET = 300.0  # seconds for all suites together


# collected here and echoed by the terminal-summary hook in conftest.py
RESULTS: list[str] = []


def _say(n, name, ok, detail):
    line = f"ACCEPTANCE {n} {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_1_fixture_corpus():
    start = time.perf_counter()
    report = run_fixtures()
    took = time.perf_counter() - start
    ok = report.clean and took < 1.0 and report.rings_visited >= 20
    _say(1, "fixture corpus", ok,
         f"{report.rings_visited} records, {report.instances_checked} checks, "
         f"{len(report.counterexamples)} mismatches, {took:.3f}s")


def test_2_theorem_suites():
    out = Path(tempfile.mkdtemp()) / "all.json"
    argv = ["verify", "--suite", "ALL", "--genus-max", "8", "--max-ideals", "200", "--gen-window", "2",
            "--seed", "0", "--json", str(out), "--format", "json"]
    start = time.perf_counter()
    with redirect_stdout(io.StringIO()):  # the report is read back from the file
        code = main(argv)
    took = time.perf_counter() - start
    reports = json.loads(out.read_text())
    bad = {r["suite_id"]: len(r["counterexamples"]) for r in reports if r["counterexamples"]}
    instances = sum(r["instances_checked"] for r in reports)
    ok = code == 0 and not bad and len(reports) == len(SUITES) == 18 and took <= SUITE_BUDGET
    _say(2, "theorem suites", ok,
         f"{len(reports)} suites, {instances} instances, exit {code}, "
         f"counterexamples {bad or 0}, {took:.1f}s of {SUITE_BUDGET:.0f}s")


def test_3_enumeration_oracle():
    expected = [1, 2, 4, 7, 12, 23, 39, 67, 118, 204]
    counts = [0] * 11
    gap_sets = {g: set() for g in range(11)}
    for S in enumerate_by_genus(10):
        counts[S.genus] += 1
        gap_sets[S.genus].add(frozenset(z for z in range(S.conductor) if z not in S))
    brute = {g: set(semigroups_of_genus(g)) for g in range(1, 11)}
    ok = counts[1:] == expected and all(gap_sets[g] == brute[g] for g in range(1, 11))
    _say(3, "enumeration oracle", ok, f"tree {counts[1:]}, brute force {[len(brute[g]) for g in range(1, 11)]}")


def test_4_multiplicity_law():
    checked = failures = 0
    for ctx in contexts(FamilySpec(genus_max=8, max_ideals_per_ring=200)):
        pairs = set(_pairs(ctx))
        pairs.update((M, I) for I in ctx.ideals for M in (ctx.R, ctx.K, ctx.m))
        for M, I in pairs:
            checked += 1
            try:
                # multiplicity_wrt itself asserts e(I, M) = e(I, IM)
                if multiplicity_wrt(I, M) != I.base:
                    failures += 1
            except AssertionError:
                failures += 1
    _say(4, "multiplicity law", failures == 0 and checked > 0, f"{checked} instances, {failures} failures")


def _random_ideal(rng, S, lo):
    hi = 2 * S.conductor + 4
    gens = [rng.randint(lo, hi) for _ in range(rng.randint(1, 4))]
    return ideal_from_generators(S, gens)


def _random_proper(rng, S):
    hi = 2 * S.conductor + 4
    gens = [z for z in (rng.randint(1, hi) for _ in range(rng.randint(1, 4))) if z in S]
    return ideal_from_generators(S, gens or [S.multiplicity])


def test_5_colon_identities():
    rng = random.Random(20240501)
    pool = list(enumerate_by_genus(8))
    failures = 0
    for _ in range(10_000):
        S = rng.choice(pool)
        E, F, G = (_random_ideal(rng, S, -4) for _ in range(3))
        I = _random_proper(rng, S)
        K = canonical_ideal(S)
        if is_subset(G, colon(E, F)) != is_subset(product(G, F), E):
            failures += 1
        if product(I, colon(I, I)) != I:
            failures += 1
        a, b, c = colon(K, product(I, K)), colon(colon(K, K), I), dual(I)
        if not (a == b == c):
            failures += 1
    _say(5, "colon adjunction and identities", failures == 0, f"10000 triples, {failures} failures")


def _degenerate_cases():
    """(label, thunk, expected) where expected is a value or an exception type."""
    N = sg_new([1])
    R, m = unit_ideal(N), maximal_ideal(N)
    S = sg_new([3, 5])
    U = unit_ideal(S)
    return [
        ("N ring report", lambda: ring_report(N).to_dict()["almost_gorenstein"], None),
        ("N min mult ring", lambda: is_min_mult_ring(N).value, True),
        ("N almost Gorenstein", lambda: is_almost_gorenstein(N), RegularRing),
        ("N m stable", lambda: is_stable(m), True),
        ("N reduction of m", lambda: reduction_number(m).reduction_number, 0),
        ("N R min mult wrt m", lambda: has_min_mult(R, m).value, True),
        ("N R Ulrich wrt m", lambda: is_ulrich(R, m).value, True),
        ("N m not trace", lambda: is_trace(m).value, False),
        ("N m reflexive", lambda: is_reflexive(m).value, True),
        ("N canonical is R", lambda: canonical_ideal(N) == R, True),
        ("N idealization R", lambda: idealization_data(N, R).min_mult, True),
        ("N syzygy check", lambda: idealization_syzygy_check(N).value, True),
        ("N Burch m", lambda: burch_monomial_witness(m).value, True),
        ("unit stable", lambda: is_stable(U), NotProper),
        ("unit reduction", lambda: reduction_number(U), NotProper),
        ("unit power bound", lambda: stable_power_bound(U), NotProper),
        ("unit wrt unit", lambda: has_min_mult(U, U), NotProper),
        ("Ulrich wrt unit", lambda: is_ulrich(maximal_ideal(S), U), NotProper),
        ("unit trace", lambda: is_trace(U), NotProper),
        ("unit reflexive", lambda: is_reflexive(U).value, True),
        ("unit multiplicity", lambda: multiplicity_wrt(maximal_ideal(S), U), 3),
        ("zero module", lambda: idealization_data(S, None), ZeroModule),
        ("syzygy index 2", lambda: idealization_syzygy_check(S, 2), UnsupportedIndex),
        ("unit not Burch", lambda: burch_monomial_witness(U).value, False),
    ]


def test_6_degenerate_inputs():
    wrong = []
    cases = _degenerate_cases()
    for label, thunk, expected in cases:
        try:
            got = thunk()
        except SgmmError as exc:
            got = type(exc)
        except Exception as exc:  # anything untyped is a panic
            got = f"panic {type(exc).__name__}"
        if got != expected:
            wrong.append(f"{label}: {got!r}")
    _say(6, "degenerate handling", not wrong, f"{len(cases)} cases" + (f"; {wrong}" if wrong else ""))


if __name__ == "__main__":
    failed = 0
    for fn in (test_1_fixture_corpus, test_2_theorem_suites, test_3_enumeration_oracle,
               test_4_multiplicity_law, test_5_colon_identities, test_6_degenerate_inputs):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
