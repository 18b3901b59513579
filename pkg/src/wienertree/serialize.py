"""JSON encodings for point sets, trees, paths and solver results.

Floats go through ``json``'s shortest round-trip ``repr``; infinities (unused
DP cells) are written as ``null``.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .dp_convex import ConvexSolution, DPTables
from .errors import InvalidInput
from .geometry import PointSet
from .oracle import OracleResult
from .paths import HamiltonianPath
from .tree import SpanningTree, WienerReport


def pointset_to_json(ps: PointSet) -> dict[str, Any]:
    out: dict[str, Any] = {"points": [[p.x, p.y] for p in ps]}
    if ps.labels is not None:
        out["labels"] = list(ps.labels)
    return out


def pointset_from_json(obj: dict[str, Any]) -> PointSet:
    try:
        coords = obj["points"]
        if any(len(c) != 2 for c in coords):
            raise InvalidInput("every point must be an [x, y] pair")
        return PointSet.from_xy(coords, obj.get("labels"))
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed point set JSON: {exc}") from exc


def tree_to_json(t: SpanningTree) -> dict[str, Any]:
    return {"n": t.n, "edges": [list(e) for e in t.edges]}


def tree_from_json(obj: dict[str, Any]) -> SpanningTree:
    try:
        return SpanningTree(int(obj["n"]), tuple(tuple(e) for e in obj["edges"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed tree JSON: {exc}") from exc


def path_to_json(path: HamiltonianPath) -> dict[str, Any]:
    return {"order": list(path.order)}


def path_from_json(obj: dict[str, Any]) -> HamiltonianPath:
    try:
        return HamiltonianPath(tuple(obj["order"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed path JSON: {exc}") from exc


def report_to_json(report: WienerReport) -> dict[str, Any]:
    return {
        "wiener": report.wiener,
        "weight": report.weight,
        "per_edge_contribution": [
            {
                "edge": list(row.edge),
                "count_p": row.count_p,
                "count_q": row.count_q,
                "length": row.length,
                "contribution": row.contribution,
            }
            for row in report.per_edge_contribution
        ],
    }


def solution_to_json(sol: ConvexSolution) -> dict[str, Any]:
    return {"wiener": sol.wiener, "tree": tree_to_json(sol.tree), "order": list(sol.order)}


def _matrix(a) -> list[list[Any]]:
    return [[None if math.isinf(v) else float(v) for v in row] for row in a.tolist()]


def tables_to_json(tables: DPTables) -> dict[str, Any]:
    def choices(c):
        return [[None if k < 0 else [k, l] for k, l in row] for row in c.tolist()]

    return {
        "n": tables.n,
        "m_right": _matrix(tables.m_right),
        "m_left": _matrix(tables.m_left),
        "choice_right": choices(tables.choice_right),
        "choice_left": choices(tables.choice_left),
    }


def oracle_to_json(res: OracleResult) -> dict[str, Any]:
    witness = res.best_witness
    return {
        "value": res.best_value,
        "count": res.enumerated_count,
        "witness": tree_to_json(witness)
        if isinstance(witness, SpanningTree)
        else path_to_json(witness),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"
