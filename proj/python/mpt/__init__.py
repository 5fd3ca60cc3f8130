"""Exact transience bounds and transient oracles for max-plus linear systems.

Matrix and vector entries may be ints, ``fractions.Fraction``, strings such as
``"-5/2"``, or ``None`` / ``float("-inf")`` for the max-plus zero. Scalars come
back as ``Fraction`` or ``float("-inf")``. Report functions return dicts whose
rational fields are strings, matching the command-line JSON output.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import _core
from ._core import InputError, PreconditionError, ResourceError

Entry = Union[int, Fraction, str, float, None]
NEG_INF = float("-inf")

__all__ = [
    "InputError",
    "PreconditionError",
    "ResourceError",
    "NEG_INF",
    "max_cycle_mean",
    "is_irreducible",
    "power",
    "analyze",
    "exploration_penalty",
    "reduce_walk",
    "generate_ek",
    "generate_cherry",
    "er_bound",
    "schedule",
    "sync",
    "reversal",
    "simulate_work",
]


def _entry(x: Entry) -> str:
    if x is None:
        return "-inf"
    if isinstance(x, str):
        return x
    if isinstance(x, float):
        if x == NEG_INF:
            return "-inf"
        if not math.isfinite(x):
            raise InputError(f"entry {x!r} is not a max-plus scalar")
        x = Fraction(x)
    if isinstance(x, (int, Fraction)):
        return str(x)
    raise InputError(f"unsupported entry type {type(x).__name__}")


def _rows(a: Sequence[Sequence[Entry]]) -> list[list[str]]:
    return [[_entry(x) for x in row] for row in a]


def _vec(v: Optional[Iterable[Entry]]) -> Optional[list[str]]:
    return None if v is None else [_entry(x) for x in v]


def _scalar(s: str) -> Union[Fraction, float]:
    return NEG_INF if s == "-inf" else Fraction(s)


def _matrix(rows: list[list[str]]) -> list[list[Union[Fraction, float]]]:
    return [[_scalar(x) for x in row] for row in rows]


def max_cycle_mean(a):
    return _scalar(_core.max_cycle_mean(_rows(a)))


def is_irreducible(a) -> bool:
    return _core.is_irreducible(_rows(a))


def power(a, n: int):
    return _matrix(_core.power(_rows(a), n))


def analyze(a, v=None, oracle: bool = False) -> dict:
    """Critical analysis, system and matrix bounds, and optionally measured transients."""
    return json.loads(_core.analyze(_rows(a), _vec(v), oracle))


def exploration_penalty(n: int, edges) -> int:
    return _core.exploration_penalty(n, [tuple(e) for e in edges])


def reduce_walk(nodes, d: int, k: int) -> list[int]:
    return _core.reduce_walk(list(nodes), d, k)


def generate_ek(k: int):
    return _matrix(_core.generate_ek(k))


def generate_cherry(l: int, c: int):
    return _matrix(_core.generate_cherry(l, c))


def er_bound(l: int, c: int) -> int:
    return _core.er_bound(l, c)


def schedule(tasks: int, edges, steps: int) -> dict:
    """Earliest schedule; edges are (src, dst, weight, height) with 0-based tasks."""
    return json.loads(_core.schedule(tasks, [tuple(e) for e in edges], steps))


def sync(delays, t0=None, oracle: bool = False) -> dict:
    return json.loads(_core.sync(_rows(delays), _vec(t0), oracle))


def reversal(n: int, edges, mode: str = "routing") -> dict:
    return json.loads(_core.reversal(n, [tuple(e) for e in edges], mode))


def simulate_work(n: int, edges, steps: int) -> list[list[int]]:
    return _core.simulate_work(n, [tuple(e) for e in edges], steps)
