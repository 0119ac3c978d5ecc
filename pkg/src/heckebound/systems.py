"""Named Coxeter systems and the JSON configuration format.

A configuration is a JSON object::

    {"rank": 3, "matrix": [[1, 3, 0], [3, 1, 3], [0, 3, 1]], "weights": [1, 1, 1]}

``matrix`` is the Coxeter matrix; an infinite entry is written ``0`` or
``"inf"``.  ``weights`` is optional (default: all ones) and ``name`` is an
optional label.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import INF, CoxeterSystem
from .errors import InvalidSystemError

__all__ = [
    "type_a", "type_b", "type_h3", "dihedral", "affine_a2", "affine_b2", "affine_g2",
    "triangle", "universal", "g2_a3_fork", "CATALOG", "named_system",
    "system_from_config", "load_config", "system_to_config",
]


def _linear(orders, name=None, weights=None):
    n = len(orders) + 1
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, o in enumerate(orders):
        m[i][i + 1] = m[i + 1][i] = o
    return CoxeterSystem(m, weights, name=name)


def type_a(n: int, weights=None) -> CoxeterSystem:
    return _linear([3] * (n - 1), f"A{n}", weights)


def type_b(n: int, weights=None) -> CoxeterSystem:
    return _linear([4] + [3] * (n - 2), f"B{n}", weights)


def type_h3(weights=None) -> CoxeterSystem:
    return _linear([5, 3], "H3", weights)


def dihedral(m, weights=None) -> CoxeterSystem:
    label = "inf" if m == INF else m
    return CoxeterSystem([[1, m], [m, 1]], weights, name=f"I2({label})")


def affine_a2(weights=None) -> CoxeterSystem:
    return CoxeterSystem([[1, 3, 3], [3, 1, 3], [3, 3, 1]], weights, name="affine A2")


def affine_b2(weights=None) -> CoxeterSystem:
    return _linear([4, 4], "affine B2", weights)


def affine_g2(weights=None) -> CoxeterSystem:
    return _linear([6, 3], "affine G2", weights)


def triangle(p, q, r, weights=None) -> CoxeterSystem:
    """Rank 3 with ``m_12 = p``, ``m_23 = q``, ``m_13 = r``."""
    return CoxeterSystem([[1, p, r], [p, 1, q], [r, q, 1]], weights,
                         name=f"triangle({p},{q},{r})")


def universal(n: int, weights=None) -> CoxeterSystem:
    m = [[1 if i == j else INF for j in range(n)] for i in range(n)]
    return CoxeterSystem(m, weights, name=f"universal({n})")


def g2_a3_fork(weights=None) -> CoxeterSystem:
    """``s1 -6- s2``, with ``s3`` and ``s4`` each joined to ``s2`` by a simple bond.

    ``{s2, s3, s4}`` spans ``A3`` and ``{s1, s2}`` spans ``G2``; both have
    longest elements of length 6, yet seven hyperplanes intersect pairwise.
    """
    m = [[1, 6, 2, 2], [6, 1, 3, 3], [2, 3, 1, 2], [2, 3, 2, 1]]
    return CoxeterSystem(m, weights, name="G2-A3 fork")


CATALOG = {
    "A1": lambda: type_a(1),
    "A2": lambda: type_a(2),
    "A3": lambda: type_a(3),
    "B2": lambda: type_b(2),
    "B3": lambda: type_b(3),
    "G2": lambda: dihedral(6),
    "H3": type_h3,
    "I2(7)": lambda: dihedral(7),
    "I2(8)": lambda: dihedral(8),
    "affine-A2": affine_a2,
    "affine-B2": affine_b2,
    "affine-G2": affine_g2,
    "triangle-334": lambda: triangle(3, 3, 4),
    "universal-3": lambda: universal(3),
    "g2-a3-fork": g2_a3_fork,
}


def named_system(name: str) -> CoxeterSystem:
    try:
        return CATALOG[name]()
    except KeyError:
        raise InvalidSystemError(
            f"unknown system {name!r}; choose from {', '.join(CATALOG)}") from None


def _parse_entry(value):
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity", "oo"):
            return INF
        raise InvalidSystemError(f"matrix entry {value!r} is not a number or 'inf'")
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidSystemError(f"matrix entry {value!r} must be an integer")
    return INF if value == 0 else value


def system_from_config(cfg: dict) -> CoxeterSystem:
    if not isinstance(cfg, dict):
        raise InvalidSystemError("configuration must be a JSON object")
    if "matrix" not in cfg:
        raise InvalidSystemError("configuration needs a 'matrix' field")
    matrix = cfg["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise InvalidSystemError("'matrix' must be a list of lists")
    rows = [[_parse_entry(v) for v in row] for row in matrix]
    if "rank" in cfg and cfg["rank"] != len(rows):
        raise InvalidSystemError(f"rank {cfg['rank']} does not match matrix size {len(rows)}")
    return CoxeterSystem(rows, cfg.get("weights"), name=cfg.get("name"))


def load_config(path) -> CoxeterSystem:
    try:
        cfg = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidSystemError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidSystemError(f"config {path} is not valid JSON: {exc}") from exc
    return system_from_config(cfg)


def system_to_config(system: CoxeterSystem) -> dict:
    cfg = {
        "rank": system.rank,
        "matrix": [[0 if m == INF else m for m in row] for row in system.coxeter_matrix],
        "weights": list(system.weights),
    }
    if system.name:
        cfg["name"] = system.name
    return cfg
