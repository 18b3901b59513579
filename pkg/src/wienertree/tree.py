"""Spanning trees over point indices and their Wiener index.

The Wiener index is computed two independent ways: by summing tree path
lengths over all pairs (one traversal per source), and by charging every
edge ``|pq|`` times the product of the component sizes it separates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidInput
from .geometry import PointSet, distance, segments_cross

REL_TOL = 1e-9

Edge = tuple[int, int]


@dataclass(frozen=True)
class SpanningTree:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )

    def canonical(self) -> tuple[Edge, ...]:
        """Sorted edge list with ``u < v`` in every pair; equal for equal trees."""
        return tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """``adj[u]`` lists ``(v, edge_index)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            adj[v].append((u, e))
        return adj


@dataclass(frozen=True)
class EdgeContribution:
    edge: Edge
    count_p: int  # nodes on the p side once the edge is removed
    count_q: int
    length: float
    contribution: float


@dataclass(frozen=True)
class WienerReport:
    wiener: float
    weight: float
    per_edge_contribution: tuple[EdgeContribution, ...] = field(repr=False)


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def validate(t: SpanningTree) -> bool:
    if t.n < 1 or len(t.edges) != t.n - 1:
        return False
    dsu = _DisjointSet(t.n)
    for u, v in t.edges:
        if not (0 <= u < t.n and 0 <= v < t.n) or u == v:
            return False
        if not dsu.union(u, v):
            return False
    # n - 1 edges without a cycle are connected
    return True


def _check(t: SpanningTree, ps: PointSet) -> None:
    if t.n != len(ps):
        raise InvalidInput(f"tree has {t.n} nodes but there are {len(ps)} points")
    if not validate(t):
        raise InvalidInput("edge list is not a spanning tree")


def _distances_from(adj, ps: PointSet, src: int) -> list[float]:
    dist = [0.0] * len(adj)
    seen = [False] * len(adj)
    seen[src] = True
    stack = [src]
    pts = ps.points
    while stack:
        u = stack.pop()
        du = dist[u]
        for v, _ in adj[u]:
            if not seen[v]:
                seen[v] = True
                dist[v] = du + distance(pts[u], pts[v])
                stack.append(v)
    return dist


def wiener_pairwise(t: SpanningTree, ps: PointSet) -> float:
    """Sum of tree path lengths over all unordered pairs, one traversal per source."""
    _check(t, ps)
    adj = t.adjacency()
    total = 0.0
    for s in range(t.n):
        dist = _distances_from(adj, ps, s)
        total += sum(dist[s + 1 :])
    return total


def delta_from(t: SpanningTree, ps: PointSet, v: int) -> float:
    """Total tree distance from node ``v`` to every node."""
    _check(t, ps)
    if not 0 <= v < t.n:
        raise InvalidInput(f"node index {v} out of range for n={t.n}")
    return sum(_distances_from(t.adjacency(), ps, v))


def subtree_sizes(t: SpanningTree, root: int = 0) -> tuple[list[int], list[int]]:
    """Subtree sizes and parents with the tree hung from ``root``."""
    adj = t.adjacency()
    parent = [-1] * t.n
    order = [root]
    seen = [False] * t.n
    seen[root] = True
    for u in order:
        for v, _ in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
    size = [1] * t.n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    return size, parent


def wiener_edge_contribution(t: SpanningTree, ps: PointSet) -> WienerReport:
    _check(t, ps)
    size, parent = subtree_sizes(t)
    rows = []
    wiener = 0.0
    weight = 0.0
    for p, q in t.edges:
        if parent[q] == p:
            count_q = size[q]
            count_p = t.n - count_q
        else:
            count_p = size[p]
            count_q = t.n - count_p
        length = distance(ps[p], ps[q])
        contrib = count_p * count_q * length
        rows.append(EdgeContribution((p, q), count_p, count_q, length, contrib))
        wiener += contrib
        weight += length
    return WienerReport(wiener, weight, tuple(rows))


def wiener(t: SpanningTree, ps: PointSet) -> float:
    return wiener_edge_contribution(t, ps).wiener


def tree_weight(t: SpanningTree, ps: PointSet) -> float:
    _check(t, ps)
    return sum(distance(ps[u], ps[v]) for u, v in t.edges)


def complete_graph_wiener(ps: PointSet) -> float:
    """Sum of Euclidean distances over all unordered pairs of points."""
    pts = ps.points
    return sum(
        distance(pts[i], pts[j]) for i in range(len(pts)) for j in range(i + 1, len(pts))
    )


def crossing_pairs(t: SpanningTree, ps: PointSet) -> list[tuple[int, int]]:
    """Pairs ``(e, f)`` of edge positions, ``e < f``, whose segments properly cross."""
    _check(t, ps)
    pts = ps.points
    out = []
    edges = t.edges
    for e in range(len(edges)):
        a, b = edges[e]
        for f in range(e + 1, len(edges)):
            c, d = edges[f]
            if segments_cross(pts[a], pts[b], pts[c], pts[d]):
                out.append((e, f))
    return out


def _edge_position(t: SpanningTree, edge: Edge) -> int:
    u, v = edge
    for i, (a, b) in enumerate(t.edges):
        if (a, b) == (u, v) or (a, b) == (v, u):
            return i
    raise InvalidInput(f"edge {edge} is not in the tree")


def _replace(t: SpanningTree, pos: int, edge: Edge) -> SpanningTree:
    edges = list(t.edges)
    edges[pos] = edge
    return SpanningTree(t.n, tuple(edges))


def uncross(t: SpanningTree, ps: PointSet, e1: Edge, e2: Edge) -> SpanningTree:
    """Remove one crossing by an edge swap that strictly lowers the Wiener index.

    Dropping both crossing edges leaves three components. With ``a``, ``b``
    the endpoints sharing the middle component and ``c``, ``d`` their partners,
    the candidates are T' = T - (b,d) + (a,d) and T'' = T - (a,c) + (b,c).
    The cheaper one is returned, T' on a tie within tolerance.
    """
    _check(t, ps)
    i1 = _edge_position(t, e1)
    i2 = _edge_position(t, e2)
    a, c = t.edges[i1]
    b, d = t.edges[i2]
    if not segments_cross(ps[a], ps[c], ps[b], ps[d]):
        raise InvalidInput(f"edges {e1} and {e2} do not properly cross")

    dsu = _DisjointSet(t.n)
    for k, (u, v) in enumerate(t.edges):
        if k not in (i1, i2):
            dsu.union(u, v)
    root = dsu.find
    # orient so that a and b are the endpoints in the middle component
    if root(a) not in (root(b), root(d)):
        a, c = c, a
    if root(b) != root(a):
        b, d = d, b

    t1 = _replace(t, i2, (a, d))
    t2 = _replace(t, i1, (b, c))
    w1 = wiener(t1, ps)
    w2 = wiener(t2, ps)
    if w2 < w1 - REL_TOL * max(1.0, abs(w1)):
        return t2
    return t1


def untangle(
    t: SpanningTree, ps: PointSet, max_steps: Optional[int] = None
) -> tuple[SpanningTree, int]:
    """Uncross repeatedly (first crossing pair each time) until no crossings remain.

    Returns the crossing-free tree and the number of swaps performed.
    """
    steps = 0
    while True:
        pairs = crossing_pairs(t, ps)
        if not pairs:
            return t, steps
        if max_steps is not None and steps >= max_steps:
            raise RuntimeError(f"no crossing-free tree after {steps} swaps")
        e, f = pairs[0]
        t = uncross(t, ps, t.edges[e], t.edges[f])
        steps += 1

