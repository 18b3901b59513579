"""Exact minimum-Wiener spanning tree for points in strictly convex position.

Points are relabelled ``0..n-1`` in clockwise order. For an interval
``[i, j]`` of that order two quantities are tabulated, each minimised over
spanning trees ``T`` of the interval's points::

    right[i, j] = W(T) + (n - (j - i + 1)) * dist_from(p_j, T)   # rooted at p_j
    left[i, j]  = W(T) + (n - (j - i + 1)) * dist_from(p_i, T)   # rooted at p_i

The second term charges every path from the root to the ``n - (j - i + 1)``
points outside the interval. Because an optimal tree is crossing-free, the
root's edge towards the far end of the interval splits it into at most three
contiguous sub-intervals, giving the two recurrences in ``_fill_right`` and
``_fill_left``. The answer is ``left[0, n - 1]`` (no outside points).

Cells are filled by increasing interval length; every read hits a strictly
shorter interval. Each cell costs O(n^2), so the tables take O(n^4).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InternalError, InvalidInput
from .geometry import PointSet, convex_clockwise_order
from .tree import SpanningTree, wiener

# Cell with no recorded choice (diagonal, or i > j).
NO_CHOICE = -1


@dataclass(frozen=True)
class DPTables:
    """Filled DP tables, indexed by positions in the clockwise order.

    ``m_right[i, j]`` is the tree value rooted at the interval's right end,
    ``m_left[i, j]`` at its left end. Unused cells (``i > j``) hold ``inf``.
    ``choice_*[i, j]`` holds the minimising ``(k, l)`` or ``(-1, -1)``.
    """

    n: int
    m_right: np.ndarray
    m_left: np.ndarray
    choice_right: np.ndarray
    choice_left: np.ndarray
    printed_recurrence: bool = False

    @property
    def value(self) -> float:
        return float(self.m_left[0, self.n - 1])


@dataclass(frozen=True)
class ConvexSolution:
    wiener: float
    tree: SpanningTree
    order: tuple[int, ...]


def _ordered(ps: PointSet) -> list[int]:
    n = len(ps)
    if n < 2:
        raise InvalidInput("need at least 2 points")
    if n == 2:
        return sorted(range(2), key=lambda i: (ps[i].x, ps[i].y))
    return convex_clockwise_order(ps)


def _fill_right(M_r, M_l, C_r, D, n, i, j):
    # Root p_j attaches to p_k; p_k's side is [i, l], glued at p_k from a tree
    # on [i, k] (rooted right) and a tree on [k, l] (rooted left); p_j keeps
    # [l + 1, j]. The edge (k, j) separates l - i + 1 points from the rest.
    ks = slice(i, j)
    ls = np.arange(i, j)
    coef = (ls - i + 1) * (n - ls + i - 1)
    cand = (
        M_r[i, ks][:, None]
        + M_l[ks, ks]
        + M_r[i + 1 : j + 1, j][None, :]
        + coef[None, :] * D[ks, j][:, None]
    )
    flat = int(np.argmin(cand))
    k, l = divmod(flat, j - i)
    M_r[i, j] = cand[k, l]
    C_r[i, j] = (i + k, i + l)


def _fill_left(M_r, M_l, C_l, D, n, i, j, printed):
    # Root p_i attaches to p_k; p_i keeps [i, l]; p_k's side is [l + 1, j],
    # glued at p_k from [l + 1, k] (rooted right) and [k, j] (rooted left).
    ls = np.arange(i, j)
    coef = (j - ls) * (n - j + ls)
    last = M_r[i + 1 : j + 1, j] if printed else M_l[i + 1 : j + 1, j]
    cand = (
        M_l[i, i:j][None, :]
        + M_r[i + 1 : j + 1, i + 1 : j + 1].T
        + last[:, None]
        + coef[None, :] * D[i, i + 1 : j + 1][:, None]
    )
    flat = int(np.argmin(cand))
    k, l = divmod(flat, j - i)
    M_l[i, j] = cand[k, l]
    C_l[i, j] = (i + 1 + k, i + l)


def _tables_for(D: np.ndarray, printed: bool = False) -> DPTables:
    n = D.shape[0]
    M_r = np.full((n, n), np.inf)
    M_l = np.full((n, n), np.inf)
    np.fill_diagonal(M_r, 0.0)
    np.fill_diagonal(M_l, 0.0)
    C_r = np.full((n, n, 2), NO_CHOICE, dtype=np.int64)
    C_l = np.full((n, n, 2), NO_CHOICE, dtype=np.int64)
    for length in range(2, n + 1):
        for i in range(0, n - length + 1):
            j = i + length - 1
            _fill_right(M_r, M_l, C_r, D, n, i, j)
            _fill_left(M_r, M_l, C_l, D, n, i, j, printed)
    for arr in (M_r, M_l, C_r, C_l):
        arr.setflags(write=False)
    return DPTables(n, M_r, M_l, C_r, C_l, printed)


def dp_tables(ps: PointSet, *, printed_recurrence: bool = False) -> DPTables:
    """Fill both tables for ``ps`` (positions follow ``convex_clockwise_order``).

    ``printed_recurrence=True`` reads the right-rooted table for the last
    sub-interval ``[k, j]`` of the left recurrence instead of the left-rooted
    one. That variant is kept only to demonstrate that it undercuts the true
    optimum; it does not describe any tree.
    """
    order = _ordered(ps)
    D = ps.distance_matrix()[np.ix_(order, order)]
    return _tables_for(D, printed_recurrence)


def reconstruct_tree(tables: DPTables, order) -> SpanningTree:
    """Edges of a tree attaining ``tables.value``, in original point indices."""
    n = tables.n
    order = list(order)
    if len(order) != n:
        raise InvalidInput("order length does not match the tables")
    if tables.printed_recurrence:
        raise InternalError("the printed-recurrence tables do not encode a tree")
    edges = []
    stack = [("L", 0, n - 1)]
    while stack:
        side, i, j = stack.pop()
        if i == j:
            continue
        if i > j:
            raise InternalError(f"empty interval [{i}, {j}] reached")
        if side == "R":
            k, l = (int(v) for v in tables.choice_right[i, j])
            if not (i <= k <= l < j):
                raise InternalError(f"bad right choice {(k, l)} at {(i, j)}")
            edges.append((order[k], order[j]))
            stack += [("R", i, k), ("L", k, l), ("R", l + 1, j)]
        else:
            k, l = (int(v) for v in tables.choice_left[i, j])
            if not (i <= l < k <= j):
                raise InternalError(f"bad left choice {(k, l)} at {(i, j)}")
            edges.append((order[i], order[k]))
            stack += [("L", i, l), ("R", l + 1, k), ("L", k, j)]
    if len(edges) != n - 1:
        raise InternalError(f"reconstruction produced {len(edges)} edges for n={n}")
    return SpanningTree(n, tuple(edges))


def solve_convex(ps: PointSet) -> ConvexSolution:
    n = len(ps)
    order = _ordered(ps)
    if n == 2:
        tree = SpanningTree(2, ((order[0], order[1]),))
        return ConvexSolution(wiener(tree, ps), tree, tuple(order))
    if n == 3:
        a, b, c = order
        best: Optional[tuple[float, SpanningTree]] = None
        # the three spanning trees are the paths centred at a, b, c
        for centre, u, v in ((a, b, c), (b, a, c), (c, a, b)):
            tree = SpanningTree(3, ((centre, u), (centre, v)))
            w = wiener(tree, ps)
            if best is None or w < best[0]:
                best = (w, tree)
        return ConvexSolution(best[0], best[1], tuple(order))
    D = ps.distance_matrix()[np.ix_(order, order)]
    tables = _tables_for(D)
    tree = reconstruct_tree(tables, order)
    return ConvexSolution(tables.value, tree, tuple(order))
