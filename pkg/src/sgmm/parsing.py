"""Text forms for rings and ideals.

Rings: ``<a,b,c>``, ``⟨a,b,c⟩`` or ``a,b,c``.

Ideals use a small prefix grammar, nestable with parentheses::

    a,b,c | gens:a,b,c        ideal generated by t^a, t^b, t^c (negatives allowed)
    unit | maximal | canonical
    conductor                 (R : R[K])
    conductor:a,b             (R : k[[T]]) for T = <a,b>; conductor:1 is (R : Rbar)
    overring | overring:a,b   R[K], or k[[T]], as a fractional ideal of R
    closure:<spec>            integral closure; a bare integer means (t^a)
    dual:<spec>
    power:<spec>^n
    product:<spec>*<spec>
    sum:<spec>+<spec>
    shift:<spec>@z

Binary forms split at their last top-level operator, so they associate to
the left; wrap operands in parentheses to override.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .errors import ParseError, SgmmError
from .ideal import (
    SemigroupIdeal,
    algebra_closure,
    canonical_ideal,
    conductor_ideal,
    dual,
    ideal_from_generators,
    integral_closure,
    maximal_ideal,
    module_sum,
    overring_ideal,
    power,
    principal,
    product,
    shift,
    unit_ideal,
)
from .semigroup import NumericalSemigroup, sg_new

_INT_LIST = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")
_COMPACT = re.compile(r"^\s*\((?P<gens>[^)]*)\)\s*over\s*(?P<ring>.+)$")


def _ints(text: str) -> list[int]:
    if not _INT_LIST.match(text):
        raise ParseError(f"expected a comma-separated integer list, got {text!r}")
    return [int(x) for x in text.split(",")]


def parse_ring(text: str) -> NumericalSemigroup:
    body = text.strip()
    for left, right in (("<", ">"), ("⟨", "⟩")):
        if body.startswith(left) and body.endswith(right):
            body = body[1:-1]
            break
    gens = _ints(body)
    if any(g <= 0 for g in gens):
        raise ParseError(f"semigroup generators must be positive: {text!r}")
    return sg_new(gens)


def format_ring(S: NumericalSemigroup) -> str:
    return ",".join(map(str, S.generators))


def _strip_parens(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")") and _balanced_inner(text):
        text = text[1:-1].strip()
    return text


def _balanced_inner(text: str) -> bool:
    depth = 0
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i < len(text) - 1:
            return False
    return depth == 0


def _split_last(text: str, op: str) -> tuple[str, str]:
    depth = 0
    for i in range(len(text) - 1, -1, -1):
        ch = text[i]
        if ch == ")":
            depth += 1
        elif ch == "(":
            depth -= 1
        elif ch == op and depth == 0:
            return text[:i], text[i + 1 :]
    raise ParseError(f"missing {op!r} in {text!r}")


def _int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}") from None


def parse_ideal(S: NumericalSemigroup, text: str) -> SemigroupIdeal:
    """Evaluate an ideal expression over S."""
    spec = _strip_parens(text)
    if not spec:
        raise ParseError("empty ideal spec")
    m = _COMPACT.match(spec)
    if m:
        if parse_ring(m["ring"]) != S:
            raise ParseError(f"ideal {spec!r} is over a different ring than {S}")
        return ideal_from_generators(S, _ints(m["gens"]))
    if _INT_LIST.match(spec):
        return ideal_from_generators(S, _ints(spec))
    head, _, rest = spec.partition(":")
    head = head.strip()
    try:
        if head == "gens":
            return ideal_from_generators(S, _ints(rest))
        if head == "unit" and not rest:
            return unit_ideal(S)
        if head == "maximal" and not rest:
            return maximal_ideal(S)
        if head == "canonical" and not rest:
            return canonical_ideal(S)
        if head == "conductor":
            T = parse_ring(rest) if rest else algebra_closure(canonical_ideal(S))
            return conductor_ideal(S, T)
        if head == "overring":
            T = parse_ring(rest) if rest else algebra_closure(canonical_ideal(S))
            return overring_ideal(S, T)
        if head == "closure":
            inner = _strip_parens(rest)
            if re.fullmatch(r"-?\d+", inner):
                return integral_closure(principal(S, int(inner)))
            return integral_closure(parse_ideal(S, inner))
        if head == "dual":
            return dual(parse_ideal(S, rest))
        if head == "power":
            left, n = _split_last(rest, "^")
            k = _int(n)
            if k < 0:
                raise ParseError("negative power")
            return power(parse_ideal(S, left), k)
        if head == "product":
            left, right = _split_last(rest, "*")
            return product(parse_ideal(S, left), parse_ideal(S, right))
        if head == "sum":
            left, right = _split_last(rest, "+")
            return module_sum(parse_ideal(S, left), parse_ideal(S, right))
        if head == "shift":
            left, z = _split_last(rest, "@")
            return shift(parse_ideal(S, left), _int(z))
    except ParseError:
        raise
    except SgmmError as exc:
        raise type(exc)(f"{spec!r}: {exc}") from exc
    raise ParseError(f"unknown ideal spec {spec!r}")


def format_ideal(E: SemigroupIdeal) -> str:
    """Compact text ``(g1,...,gk) over <a,b,c>``; parse_ideal reads it back."""
    return str(E)


def ideal_to_json(E: SemigroupIdeal) -> dict[str, Any]:
    out: dict[str, Any] = {"semigroup": list(E.parent.generators), "gens": list(E.generators)}
    if E.base < 0:
        out["base"] = E.base
    return out


def ideal_from_json(obj: dict[str, Any] | str) -> SemigroupIdeal:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None
    try:
        S = sg_new(obj["semigroup"])
        E = ideal_from_generators(S, obj["gens"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad ideal JSON: {exc}") from None
    if "base" in obj and obj["base"] != E.base:
        raise ParseError(f"base {obj['base']} disagrees with generators (least is {E.base})")
    return E
