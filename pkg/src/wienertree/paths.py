"""Hamiltonian-path Wiener tooling.

Along a path the i-th edge separates the first ``i`` nodes from the other
``n - i``, so a path's Wiener index is a fixed-weight sum of its edge lengths.

The four-anchor construction (``twelve_config_wiener``) puts ``m`` points at
(0, 0), ``m`` at (6, 0), and single points at (5, 1) and (5, -1). Each cluster
is treated as a super-node with zero internal cost, and the 12 undirected
orders of the four super-nodes are scored. For large ``m`` the cheapest order
crosses itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple, Optional

from .errors import InvalidInput
from .geometry import Point, PointSet, distance, segments_cross
from .tree import SpanningTree, complete_graph_wiener


@dataclass(frozen=True)
class HamiltonianPath:
    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))

    def __len__(self) -> int:
        return len(self.order)

    def is_valid(self, n: Optional[int] = None) -> bool:
        n = len(self.order) if n is None else n
        return sorted(self.order) == list(range(n))

    def canonical(self) -> tuple[int, ...]:
        """The orientation whose first node is smaller than its last."""
        o = self.order
        return o if len(o) < 2 or o[0] < o[-1] else o[::-1]

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.order, self.order[1:]))

    def as_tree(self) -> SpanningTree:
        return SpanningTree(len(self.order), tuple(self.edges()))


def _check_path(path: HamiltonianPath, ps: PointSet) -> None:
    if not path.is_valid(len(ps)):
        raise InvalidInput(f"{path.order} is not a permutation of 0..{len(ps) - 1}")


def path_wiener(path: HamiltonianPath, ps: PointSet) -> float:
    _check_path(path, ps)
    n = len(path)
    total = 0.0
    for i, (u, v) in enumerate(path.edges(), start=1):
        total += i * (n - i) * distance(ps[u], ps[v])
    return total


def unit_path_wiener(n: int) -> int:
    """Wiener index of a path of ``n`` nodes with unit edges: C(n + 1, 3)."""
    if n < 1:
        raise InvalidInput("n must be at least 1")
    return math.comb(n + 1, 3)


def is_path_planar(path: HamiltonianPath, ps: PointSet) -> bool:
    """True iff no two non-adjacent path edges properly cross."""
    _check_path(path, ps)
    edges = path.edges()
    pts = ps.points
    for a in range(len(edges)):
        p, q = edges[a]
        for b in range(a + 2, len(edges)):
            r, s = edges[b]
            if segments_cross(pts[p], pts[q], pts[r], pts[s]):
                return False
    return True


class SuperNode(NamedTuple):
    name: str
    anchor: Point
    multiplicity: int


# A super-node configuration is an ordered 4-tuple of SuperNode.
SuperNodeConfig = tuple[SuperNode, ...]

LEFT_ANCHOR = Point(0.0, 0.0)
RIGHT_ANCHOR = Point(6.0, 0.0)
APEX_P = Point(5.0, 1.0)
APEX_Q = Point(5.0, -1.0)


def super_nodes(m: int) -> tuple[SuperNode, ...]:
    if m < 1:
        raise InvalidInput("cluster multiplicity must be at least 1")
    return (
        SuperNode("L", LEFT_ANCHOR, m),
        SuperNode("R", RIGHT_ANCHOR, m),
        SuperNode("p", APEX_P, 1),
        SuperNode("q", APEX_Q, 1),
    )


def config_wiener(config: SuperNodeConfig) -> float:
    """Each link between consecutive super-nodes costs its length times the
    number of points before it times the number after it."""
    total_count = sum(s.multiplicity for s in config)
    before = 0
    total = 0.0
    for a, b in zip(config, config[1:]):
        before += a.multiplicity
        total += distance(a.anchor, b.anchor) * before * (total_count - before)
    return total


def config_name(config: SuperNodeConfig) -> str:
    return "-".join(s.name for s in config)


def is_config_planar(config: SuperNodeConfig) -> bool:
    """Planarity judged on the anchors, clusters collapsed to a point."""
    ps = PointSet(tuple(s.anchor for s in config))
    return is_path_planar(HamiltonianPath(range(len(config))), ps)


def twelve_config_wiener(m: int) -> list[tuple[SuperNodeConfig, float]]:
    """All 12 undirected super-node orders with their values, cheapest first.

    Orders are generated lexicographically over (L, R, p, q) keeping the
    orientation whose first super-node precedes its last; the sort is stable.
    """
    nodes = super_nodes(m)
    rows = []
    for perm in permutations(range(4)):
        if perm[0] < perm[-1]:
            config = tuple(nodes[i] for i in perm)
            rows.append((config, config_wiener(config)))
    return sorted(rows, key=lambda row: row[1])


def minimiser_is_planar(m: int, rel_tol: float = 1e-9) -> bool:
    """Whether some cheapest configuration (ties within ``rel_tol``) is planar."""
    rows = twelve_config_wiener(m)
    best = rows[0][1]
    return any(
        is_config_planar(config)
        for config, value in rows
        if value <= best + rel_tol * max(1.0, best)
    )


def nonplanar_threshold(m_max: int = 1000) -> Optional[int]:
    """Smallest ``m*`` such that every cheapest configuration is non-planar for
    all ``m`` in ``[m*, m_max]``; None if a planar minimiser exists at ``m_max``.
    """
    threshold = None
    for m in range(1, m_max + 1):
        if minimiser_is_planar(m):
            threshold = None
        elif threshold is None:
            threshold = m
    return threshold


class GridBound(NamedTuple):
    value: float
    bound: int
    ok: bool
    ratio: float  # path Wiener over complete-graph Wiener


def grid_path_bound_check(
    ps: PointSet, path: HamiltonianPath, tol: float = 1e-9
) -> GridBound:
    """Compare a path's Wiener index with C(n + 1, 3), valid when all
    pairwise distances are at least 1."""
    pts = ps.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if distance(pts[i], pts[j]) < 1.0 - tol:
                raise InvalidInput(
                    f"points {i} and {j} are closer than 1; the bound does not apply"
                )
    value = path_wiener(path, ps)
    bound = unit_path_wiener(len(ps))
    full = complete_graph_wiener(ps) if len(ps) > 1 else 0.0
    ratio = value / full if full > 0 else math.nan
    return GridBound(value, bound, value >= bound - tol, ratio)
