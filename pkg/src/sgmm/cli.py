"""Command-line entry point: ``sgmm ring|ideal|check|verify|fixtures``.

Every command builds one plain dict and prints it either as JSON or as
``key: value`` lines, so both formats carry the same data. Exit codes:
0 clean, 2 usage or hypothesis error, 3 counterexample, 4 fixture mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from typing import Any, Callable, Optional, Sequence

from .errors import SgmmError
from .fixtures import run_fixtures
from .ideal import mu, unit_ideal
from .idealization import idealization_data, idealization_syzygy_check
from .invariants import is_stable, multiplicity_wrt, reduction_number, stable_power_bound
from .parsing import format_ideal, format_ring, ideal_to_json, parse_ideal, parse_ring
from .predicates import (
    PredicateVerdict,
    burch_monomial_witness,
    has_min_mult,
    is_almost_gorenstein,
    is_min_mult_ring,
    is_reflexive,
    is_trace,
    is_ulrich,
)
from .report import ring_report
from .semigroup import is_arf, is_symmetric
from .verify import SUITES, FamilySpec, run_suite

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_FIXTURE = 0, 2, 3, 4


def render_text(data: Any, indent: str = "") -> str:
    """``key: value`` lines; nested values are compact JSON so nothing is lost."""
    if not isinstance(data, dict):
        return indent + json.dumps(data, sort_keys=True)
    lines = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, separators=(",", ":"))
        elif not isinstance(value, str):
            value = json.dumps(value)
        lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines)


def parse_text(text: str) -> dict[str, Any]:
    """Inverse of :func:`render_text` for one flat block."""
    out: dict[str, Any] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, raw = line.partition(": ")
        try:
            out[key] = json.loads(raw)
        except json.JSONDecodeError:
            out[key] = raw
    return out


def _emit(data: Any, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
    elif isinstance(data, list):
        print("\n\n".join(render_text(d) for d in data))
    else:
        print(render_text(data))


# ---------------------------------------------------------------- ring / ideal

def cmd_ring(args) -> int:
    S = parse_ring(args.spec)
    data = ring_report(S).to_dict()
    data["input"] = format_ring(S)
    _emit(data, args.format)
    return EXIT_OK


def cmd_ideal(args) -> int:
    S = parse_ring(args.ring)
    E = parse_ideal(S, args.spec)
    data = ideal_to_json(E)
    data.update(base=E.base, mu=mu(E), text=format_ideal(E), integral=E.base >= 0)
    _emit(data, args.format)
    return EXIT_OK


# ----------------------------------------------------------------------- check

def _need(args, name: str, default: Optional[str] = None) -> str:
    value = getattr(args, name) or default
    if value is None:
        raise SgmmError(f"this predicate needs --{name}")
    return value


def _verdict(v: PredicateVerdict) -> dict[str, Any]:
    return v.to_dict()


def _bool(value: bool, detail: str = "") -> dict[str, Any]:
    return PredicateVerdict(value, detail=detail).to_dict()


def _check_min_mult(S, a):
    return _verdict(has_min_mult(parse_ideal(S, _need(a, "module")), parse_ideal(S, _need(a, "wrt", "maximal"))))


def _check_ulrich(S, a):
    return _verdict(is_ulrich(parse_ideal(S, _need(a, "module")), parse_ideal(S, _need(a, "wrt", "maximal"))))


def _check_stable(S, a):
    I = parse_ideal(S, _need(a, "ideal"))
    return _bool(is_stable(I))


def _check_reduction(S, a):
    I = parse_ideal(S, _need(a, "ideal"))
    data = reduction_number(I)
    out = PredicateVerdict(
        data.reduction_number <= 1,
        witness=data.reducer,
        detail="reduction number <= 1 (stable)" if data.reduction_number <= 1 else "not stable",
        lengths={"reduction_number": data.reduction_number, "certificate": data.certificate},
    ).to_dict()
    bound = stable_power_bound(I)
    out["stable_power_bound"] = bound
    return out


def _check_multiplicity(S, a):
    I = parse_ideal(S, _need(a, "wrt", "maximal"))
    M = parse_ideal(S, a.module) if a.module else unit_ideal(S)
    e = multiplicity_wrt(I, M)
    return PredicateVerdict(True, detail="multiplicity", lengths={"e": e}).to_dict()


def _check_idealization(S, a):
    D = idealization_data(S, parse_ideal(S, _need(a, "module")))
    out = PredicateVerdict(D.min_mult, detail="e_A == edim_A" if D.min_mult else "e_A > edim_A").to_dict()
    out["lengths"] = {"edim_A": D.edim_A, "e_A": D.e_A}
    out["data"] = D.to_dict()
    return out


CHECKS: dict[str, Callable[..., dict[str, Any]]] = {
    "min-mult": _check_min_mult,
    "ulrich": _check_ulrich,
    "stable": _check_stable,
    "trace": lambda S, a: _verdict(is_trace(parse_ideal(S, _need(a, "ideal")))),
    "reflexive": lambda S, a: _verdict(is_reflexive(parse_ideal(S, _need(a, "ideal")))),
    "burch": lambda S, a: _verdict(burch_monomial_witness(parse_ideal(S, _need(a, "module")))),
    "reduction": _check_reduction,
    "multiplicity": _check_multiplicity,
    "min-mult-ring": lambda S, a: _verdict(is_min_mult_ring(S)),
    "almost-gorenstein": lambda S, a: _verdict(is_almost_gorenstein(S)),
    "gorenstein": lambda S, a: _bool(is_symmetric(S)),
    "arf": lambda S, a: _bool(is_arf(S)),
    "idealization": _check_idealization,
    "idealization-syzygy": lambda S, a: _verdict(idealization_syzygy_check(S, a.index)),
}


def cmd_check(args) -> int:
    S = parse_ring(args.ring)
    data = CHECKS[args.predicate](S, args)
    data["predicate"] = args.predicate
    data["ring"] = format_ring(S)
    inputs = {}
    for name in ("ideal", "module", "wrt"):
        text = getattr(args, name)
        if text:
            inputs[name] = format_ideal(parse_ideal(S, text))
    data["inputs"] = inputs
    _emit(data, args.format)
    return EXIT_OK


# ---------------------------------------------------------------- verify etc.

def family_from_args(args, environ=os.environ) -> FamilySpec:
    """Config file (``--config`` or ``SGMM_CONFIG``) first, then explicit flags."""
    path = args.config or environ.get("SGMM_CONFIG")
    spec = FamilySpec.from_config(path) if path else FamilySpec()
    overrides = {
        "genus_max": args.genus_max,
        "gen_window": args.gen_window,
        "max_ideals_per_ring": args.max_ideals,
        "seed": args.seed,
        "non_symmetric_only": True if args.non_symmetric_only else None,
        "non_regular_only": True if args.non_regular_only else None,
    }
    return replace(spec, **{k: v for k, v in overrides.items() if v is not None})


def cmd_verify(args) -> int:
    spec = family_from_args(args)
    ids = list(SUITES) if args.suite.upper() == "ALL" else [s.strip() for s in args.suite.split(",")]
    reports = [run_suite(i, spec, workers=args.workers) for i in ids]
    dicts = [r.to_dict() for r in reports]
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(dicts[0] if len(dicts) == 1 else dicts, fh, sort_keys=True, indent=2)
    _emit(dicts[0] if len(dicts) == 1 else dicts, args.format)
    for r in reports:
        print(r.summary(), file=sys.stderr)
    return EXIT_OK if all(r.clean for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_fixtures(args) -> int:
    report = run_fixtures(args.corpus)
    data = report.to_dict()
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(data, fh, sort_keys=True, indent=2)
    _emit(data, args.format)
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.clean else EXIT_FIXTURE


# --------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="sgmm", description="Numerical semigroup rings, monomial ideals and minimal multiplicity.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("ring", parents=[fmt], help="invariants of k[[S]]")
    r.add_argument("spec", help='generators, e.g. "3,7,8" or "<3,7,8>"')
    r.set_defaults(func=cmd_ring)

    i = sub.add_parser("ideal", parents=[fmt], help="evaluate an ideal expression")
    i.add_argument("--ring", required=True)
    i.add_argument("spec", help="e.g. power:maximal^2 or closure:6")
    i.set_defaults(func=cmd_ideal)

    c = sub.add_parser("check", parents=[fmt], help="run one predicate")
    c.add_argument("predicate", choices=sorted(CHECKS))
    c.add_argument("--ring", required=True)
    c.add_argument("--ideal")
    c.add_argument("--module")
    c.add_argument("--wrt", help="ideal the module is measured against (default: maximal)")
    c.add_argument("--index", type=int, default=1, help="syzygy index for idealization-syzygy")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", parents=[fmt], help="run theorem suites over a family")
    v.add_argument("--suite", required=True, help=f"suite id, comma list, or ALL ({', '.join(SUITES)})")
    v.add_argument("--genus-max", type=int)
    v.add_argument("--gen-window", type=int)
    v.add_argument("--max-ideals", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--non-symmetric-only", action="store_true")
    v.add_argument("--non-regular-only", action="store_true")
    v.add_argument("--config", help="INI file with a [family] section (or set SGMM_CONFIG)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--json", metavar="PATH", help="also write the report here")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fixtures", parents=[fmt], help="recompute the worked-example corpus")
    f.add_argument("--corpus", help="alternative corpus file")
    f.add_argument("--json", metavar="PATH")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SgmmError, ValueError, OSError) as exc:
        # SgmmError covers parse failures, unknown names and violated hypotheses
        print(f"sgmm: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
