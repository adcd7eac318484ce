"""Exact computations for W-algebras of centralizers in gl_N.

Rationals are returned as fractions.Fraction; polynomials, lambda-brackets
and vacuum vectors use the same JSON layout as the wcent CLI.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Sequence, Tuple

from . import _wcent
from ._wcent import MissingAssignment

__all__ = [
    "MissingAssignment",
    "basis",
    "bracket",
    "form_tr",
    "form_crit",
    "w_generators",
    "miura_generators",
    "lambda_bracket",
    "membership",
    "ss_vectors",
    "center_check",
    "jacobian",
    "run",
    "to_fraction",
]

Triple = Tuple[int, int, int]


def _parts(partition: Sequence[int] | str) -> list[int]:
    if isinstance(partition, str):
        return [int(x) for x in partition.split(",")]
    return list(partition)


def to_fraction(q: dict) -> Fraction:
    return Fraction(int(q["num"]), int(q["den"]))


def _dump(obj: Any) -> str:
    return obj if isinstance(obj, str) else json.dumps(obj)


def basis(partition) -> list[Triple]:
    return [tuple(e) for e in _wcent.basis(_parts(partition))]


def bracket(partition, a: Triple, b: Triple) -> dict[Triple, Fraction]:
    terms = json.loads(_wcent.bracket(_parts(partition), tuple(a), tuple(b)))
    return {tuple(t["elt"]): to_fraction(t["coeff"]) for t in terms}


def form_tr(partition, a: Triple, b: Triple) -> Fraction:
    return to_fraction(json.loads(_wcent.form_tr(_parts(partition), tuple(a), tuple(b))))


def form_crit(partition, a: Triple, b: Triple) -> Fraction:
    return to_fraction(json.loads(_wcent.form_crit(_parts(partition), tuple(a), tuple(b))))


def w_generators(partition) -> dict:
    return json.loads(_wcent.w_generators(_parts(partition)))


def miura_generators(partition) -> dict:
    return json.loads(_wcent.miura_generators(_parts(partition)))


def lambda_bracket(partition, a, b) -> list:
    return json.loads(_wcent.lambda_bracket(_parts(partition), _dump(a), _dump(b)))


def membership(partition, poly, mode: str = "full") -> dict:
    return json.loads(_wcent.membership(_parts(partition), _dump(poly), mode))


def ss_vectors(partition) -> dict:
    return json.loads(_wcent.ss_vectors(_parts(partition)))


def center_check(partition, vector) -> dict:
    return json.loads(_wcent.center_check(_parts(partition), _dump(vector)))


def jacobian(partition, seed: int = 0) -> dict:
    return json.loads(_wcent.jacobian(_parts(partition), seed))


def run(command: str, partitions: Iterable, mode: str = "full", seed: int = 0, trials: int = 100) -> tuple[int, Any]:
    """Run a CLI command in process; returns (exit code, JSON report)."""
    code, body = _wcent.run(command, [_parts(p) for p in partitions], mode, seed, trials)
    return code, json.loads(body)
