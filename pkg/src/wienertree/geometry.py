"""Planar primitives: distances, orientation, proper crossings, convex position."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import InvalidInput

# Absolute tolerance on the signed-area (cross product) test.
ORIENT_TOL = 1e-12

ROLES = (
    "plain",
    "circle",
    "center-cluster",
    "gadget-l",
    "gadget-r",
    "cluster-left",
    "cluster-right",
    "apex",
)


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class PointSet:
    """Ordered planar points; index ``i`` names ``points[i]`` everywhere downstream.

    ``labels`` is either ``None`` or one role tag per point (see ``ROLES``).
    Coincident points are allowed here; the convex-position operations reject them.
    """

    points: tuple[Point, ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        pts = tuple(Point(float(p[0]), float(p[1])) for p in self.points)
        if not pts:
            raise InvalidInput("a point set needs at least one point")
        for i, p in enumerate(pts):
            if not (math.isfinite(p.x) and math.isfinite(p.y)):
                raise InvalidInput(f"point {i} has a non-finite coordinate: {p}")
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(pts):
                raise InvalidInput(
                    f"{len(labels)} labels given for {len(pts)} points"
                )
            bad = [lab for lab in labels if lab not in ROLES]
            if bad:
                raise InvalidInput(f"unknown role label(s): {sorted(set(bad))}")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_xy(cls, coords: Sequence[Sequence[float]], labels=None) -> "PointSet":
        return cls(tuple(Point(float(x), float(y)) for x, y in coords), labels)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def distance_matrix(self):
        import numpy as np

        xy = np.asarray(self.points, dtype=float)
        diff = xy[:, None, :] - xy[None, :, :]
        return np.hypot(diff[..., 0], diff[..., 1])


def distance(a: Point, b: Point) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


def cross(o: Point, a: Point, b: Point) -> float:
    """Twice the signed area of triangle (o, a, b); positive for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(o: Point, a: Point, b: Point, tol: float = ORIENT_TOL) -> int:
    """+1 counter-clockwise, -1 clockwise, 0 collinear within ``tol``."""
    c = cross(o, a, b)
    if c > tol:
        return 1
    if c < -tol:
        return -1
    return 0


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff segments ab and cd meet at a single point interior to both.

    Touching at an endpoint, collinear overlap and zero-length segments all
    count as not crossing.
    """
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if 0 in (o1, o2, o3, o4):
        return False
    return o1 != o2 and o3 != o4


def _hull_ccw(ps: PointSet) -> list[int]:
    # Andrew's monotone chain; collinear points (within tolerance) are dropped.
    idx = sorted(range(len(ps)), key=lambda i: (ps[i].x, ps[i].y))
    pts = ps.points
    if len(idx) < 3:
        return idx

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and cross(pts[out[-2]], pts[out[-1]], pts[i]) <= ORIENT_TOL:
                out.pop()
            out.append(i)
        return out

    lower = chain(idx)
    upper = chain(reversed(idx))
    return lower[:-1] + upper[:-1]


def convexity_violation(ps: PointSet) -> Optional[int]:
    """Index of a point that keeps ``ps`` out of strictly convex position, or None."""
    if len(ps) < 3:
        raise InvalidInput("convex position needs at least 3 points")
    seen: dict[Point, int] = {}
    for i, p in enumerate(ps):
        if p in seen:
            return i
        seen[p] = i
    hull = set(_hull_ccw(ps))
    for i in range(len(ps)):
        if i not in hull:
            return i
    return None


def is_strictly_convex_position(ps: PointSet) -> bool:
    return convexity_violation(ps) is None


def convex_clockwise_order(ps: PointSet) -> list[int]:
    """Indices of ``ps`` in clockwise hull order, starting at the lexicographic minimum."""
    bad = convexity_violation(ps)
    if bad is not None:
        raise InvalidInput(
            f"points are not in strictly convex position (point {bad} at {tuple(ps[bad])})"
        )
    ccw = _hull_ccw(ps)
    # monotone chain starts at the lexicographic minimum and walks counter-clockwise
    return [ccw[0]] + ccw[:0:-1]
