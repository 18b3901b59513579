"""Point-set generators: random convex sets, grids, the Partition reduction
instance and the four-anchor path counterexample."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInput
from .geometry import Point, PointSet, is_strictly_convex_position
from .paths import APEX_P, APEX_Q, LEFT_ANCHOR, RIGHT_ANCHOR
from .tree import SpanningTree

MIN_ANGLE_GAP = 1e-3
PARTITION_WARN_N = 12


def gen_random_convex(n: int, seed: int) -> PointSet:
    """``n`` points in strictly convex position, counter-clockwise, deterministic per seed.

    Angles are sorted uniform draws with a minimum circular gap; radii are
    jittered in [0.9, 1.1]. A jitter that breaks convexity is redrawn, and
    after every 20 failed draws the jitter half-width is halved (on the unit
    circle itself the points are always convex).
    """
    if n < 3:
        raise InvalidInput("a convex instance needs n >= 3")
    rng = np.random.default_rng(seed)
    while True:
        angles = np.sort(rng.uniform(0.0, 2 * math.pi, n))
        gaps = np.diff(np.append(angles, angles[0] + 2 * math.pi))
        if gaps.min() >= MIN_ANGLE_GAP:
            break
    spread = 0.1
    attempts = 0
    while True:
        radii = 1.0 + rng.uniform(-spread, spread, n)
        ps = PointSet.from_xy(np.c_[radii * np.cos(angles), radii * np.sin(angles)])
        if is_strictly_convex_position(ps):
            return ps
        attempts += 1
        if attempts % 20 == 0:
            spread /= 2


def gen_grid(w: int, h: int) -> PointSet:
    """Integer points ``(a, b)``, ``0 <= a < w``, ``0 <= b < h``, row by row."""
    if w < 1 or h < 1:
        raise InvalidInput("grid dimensions must be positive")
    return PointSet.from_xy([(a, b) for b in range(h) for a in range(w)])


@dataclass(frozen=True)
class PartitionInstance:
    """Point set, budget and cost threshold built from a Partition input.

    Index layout: the ``n**3`` cluster points first, then the circle points
    ``p_i``, then the gadget points ``l_i``, then ``r_i``.
    """

    X: tuple[int, ...]
    R: int
    points: PointSet
    B: float
    W: float
    cluster: tuple[int, ...]
    circle: tuple[int, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.X)

    def roles(self) -> dict[str, list[int]]:
        return {
            "center-cluster": list(self.cluster),
            "circle": list(self.circle),
            "gadget-l": list(self.left),
            "gadget-r": list(self.right),
        }


def partition_budget(n: int, R: int) -> Fraction:
    return (n * n + Fraction(7, 4)) * R


def partition_threshold(n: int, R: int) -> Fraction:
    return (
        3 * n**5 + Fraction(45, 4) * n**3 - 9 * n**2 + Fraction(27, 4) * n - Fraction(13, 4)
    ) * R


def gen_partition_instance(X: Sequence[int]) -> PartitionInstance:
    X = tuple(int(x) for x in X)
    n = len(X)
    if n < 2:
        raise InvalidInput("Partition input needs at least 2 numbers")
    if any(x < 1 for x in X):
        raise InvalidInput("Partition numbers must be positive integers")
    R = sum(X)
    if R % 2:
        raise InvalidInput(f"the numbers sum to {R}, which is odd")
    if n > PARTITION_WARN_N:
        warnings.warn(
            f"n={n} gives {n**3 + 3 * n} points; verification is quadratic or worse",
            stacklevel=2,
        )

    radius = n * R
    coords: list[tuple[float, float]] = [(0.0, 0.0)] * n**3
    circle, left, right = [], [], []
    # gadget points sit outside the circle, symmetric about the radial ray;
    # half-angle asin(1/4) makes the pair x_i / 2 apart at distance x_i from p_i
    half = math.asin(0.25)
    for i, x in enumerate(X):
        theta = 2 * math.pi * i / n
        ux, uy = math.cos(theta), math.sin(theta)
        tx, ty = -uy, ux
        px, py = radius * ux, radius * uy
        c, s = x * math.cos(half), x * math.sin(half)
        circle.append((px, py))
        left.append((px + c * ux + s * tx, py + c * uy + s * ty))
        right.append((px + c * ux - s * tx, py + c * uy - s * ty))
    coords += circle + left + right
    labels = (
        ["center-cluster"] * n**3 + ["circle"] * n + ["gadget-l"] * n + ["gadget-r"] * n
    )
    base = n**3
    return PartitionInstance(
        X=X,
        R=R,
        points=PointSet.from_xy(coords, labels),
        B=float(partition_budget(n, R)),
        W=float(partition_threshold(n, R)),
        cluster=tuple(range(base)),
        circle=tuple(range(base, base + n)),
        left=tuple(range(base + n, base + 2 * n)),
        right=tuple(range(base + 2 * n, base + 3 * n)),
    )


def build_partition_tree(inst: PartitionInstance, S: Iterable[int]) -> SpanningTree:
    """The tree pairing gadget ``i`` with subset membership (0-based indices into X).

    A star from the first cluster point reaches every other cluster point and
    every circle point; each ``p_i`` links to ``l_i``; ``r_i`` hangs from
    ``p_i`` when ``i`` is in ``S`` and from ``l_i`` otherwise.
    """
    S = set(S)
    if not S <= set(range(inst.n)):
        raise InvalidInput(f"subset indices must lie in 0..{inst.n - 1}")
    s = inst.cluster[0]
    edges = [(s, c) for c in inst.cluster[1:]]
    edges += [(s, p) for p in inst.circle]
    for i in range(inst.n):
        p, l, r = inst.circle[i], inst.left[i], inst.right[i]
        edges.append((p, l))
        edges.append((p, r) if i in S else (l, r))
    return SpanningTree(len(inst.points), tuple(edges))


@dataclass(frozen=True)
class PathCounterexampleInstance:
    m: int
    epsilon: float
    points: PointSet

    @property
    def n(self) -> int:
        return 2 * self.m + 2


def gen_path_counterexample(m: int, epsilon: float = 0.0) -> PathCounterexampleInstance:
    """Clusters of ``m`` points spread evenly on radius-``epsilon`` circles around
    (0, 0) and (6, 0), plus p = (5, 1) and q = (5, -1). Index order: left
    cluster, right cluster, p, q."""
    if m < 1:
        raise InvalidInput("m must be at least 1")
    if epsilon < 0:
        raise InvalidInput("epsilon must be non-negative")

    def cluster(anchor: Point) -> list[tuple[float, float]]:
        return [
            (
                anchor.x + epsilon * math.cos(2 * math.pi * k / m),
                anchor.y + epsilon * math.sin(2 * math.pi * k / m),
            )
            for k in range(m)
        ]

    coords = cluster(LEFT_ANCHOR) + cluster(RIGHT_ANCHOR) + [APEX_P, APEX_Q]
    labels = ["cluster-left"] * m + ["cluster-right"] * m + ["apex", "apex"]
    return PathCounterexampleInstance(m, float(epsilon), PointSet.from_xy(coords, labels))
