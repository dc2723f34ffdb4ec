"""Exact origin-in-hull classification and random LP boundedness.

Rationals are accepted as ``int``, ``str`` ("3/4") or ``fractions.Fraction``
and returned as ``Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import _originlab as _core
from ._originlab import OriginlabError, __version__

__all__ = [
    "OriginlabError",
    "__version__",
    "p_exact",
    "p_float",
    "window_estimate",
    "rank",
    "solve_feasibility",
    "classify_origin",
    "is_bounded",
    "run_experiment",
    "enumerate_exact",
    "sample_matrix",
    "cli",
]


def _q(x: Any) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, str):
        return x
    raise TypeError(f"expected int, str or Fraction, got {type(x).__name__}")


def _vec(xs: Iterable[Any]) -> list[str]:
    return [_q(x) for x in xs]


def _rows(rows: Iterable[Iterable[Any]]) -> list[list[str]]:
    return [_vec(r) for r in rows]


def _fractions(doc: Any) -> Any:
    """Turns the rational strings of a result document into Fractions."""
    if isinstance(doc, dict):
        return {k: _fractions(v) for k, v in doc.items()}
    if isinstance(doc, list):
        if doc and all(isinstance(x, str) for x in doc):
            try:
                return [Fraction(x) for x in doc]
            except ValueError:
                return doc
        return [_fractions(x) for x in doc]
    return doc


def p_exact(n: int, d: int) -> Fraction:
    """Exact probability that n symmetric points in R^d have the origin in their hull."""
    return Fraction(_core.p_exact(n, d))


def p_float(n: int, d: int) -> float:
    return _core.p_float(n, d)


def window_estimate(d: int, target: float = 0.5) -> int:
    """Smallest n with p_float(n, d) >= target."""
    return _core.window_estimate(d, target)


def rank(rows: Sequence[Sequence[Any]]) -> int:
    return _core.rank(_rows(rows))


def solve_feasibility(m: Sequence[Sequence[Any]], b: Sequence[Any]) -> dict:
    """Witness lambda >= 0 with M lambda = b, or a Farkas vector y."""
    return _fractions(json.loads(_core.solve_feasibility(_rows(m), _vec(b))))


def classify_origin(points: Sequence[Sequence[Any]], method: str = "dependency", float_guide: bool = True) -> dict:
    """Outside / Boundary / Interior of the origin for conv(points), with certificates."""
    return _fractions(json.loads(_core.classify_origin(_rows(points), method, float_guide)))


def is_bounded(a: Sequence[Sequence[Any]], c: Sequence[Any], sandwich: bool = False) -> dict:
    """Boundedness of max <x, c> subject to A x <= 1."""
    return _fractions(json.loads(_core.is_bounded(_rows(a), _vec(c), sandwich)))


def run_experiment(config: dict | str, threads: int = 1) -> dict:
    """Runs a Monte Carlo experiment described by a config (or result) document."""
    text = config if isinstance(config, str) else json.dumps(config)
    return json.loads(_core.run_experiment(text, threads))


def enumerate_exact(spec: dict, n: int, d: int, kind: str = "hull") -> dict:
    """Exact event probabilities for a finite-atom law, by enumerating every matrix."""
    doc = json.loads(_core.enumerate_exact(json.dumps(spec), n, d, kind))
    doc["probabilities"] = {k: Fraction(v) for k, v in doc["probabilities"].items()}
    return doc


def sample_matrix(spec: dict, n: int, d: int, seed: int, trial: int = 0) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in _core.sample_matrix(json.dumps(spec), n, d, seed, trial)]


def cli(*args: str) -> tuple[int, str, str]:
    """Runs the command-line tool in-process; returns (exit code, stdout, stderr)."""
    return _core.cli(list(args))
