import math

import pytest

from conftest import random_points, random_tree
from wienertree.errors import InvalidInput
from wienertree.geometry import PointSet
from wienertree.oracle import enumerate_spanning_trees
from wienertree.tree import (
    SpanningTree,
    complete_graph_wiener,
    crossing_pairs,
    delta_from,
    tree_weight,
    uncross,
    untangle,
    validate,
    wiener,
    wiener_edge_contribution,
    wiener_pairwise,
)

LINE3 = PointSet.from_xy([(0, 0), (1, 0), (2, 0)])
PATH3 = SpanningTree(3, ((0, 1), (1, 2)))
# centre plus three points at unit distance
STAR_PTS = PointSet.from_xy([(0, 0), (1, 0), (-0.5, math.sqrt(3) / 2), (-0.5, -math.sqrt(3) / 2)])
STAR = SpanningTree(4, ((0, 1), (0, 2), (0, 3)))
SQUARE = PointSet.from_xy([(0, 0), (1, 0), (1, 1), (0, 1)])


def test_validate():
    assert validate(SpanningTree(3, ((0, 1), (1, 2))))
    assert not validate(SpanningTree(3, ((0, 1), (0, 1))))
    assert not validate(SpanningTree(4, ((0, 1), (1, 2), (2, 0))))
    assert not validate(SpanningTree(3, ((0, 1), (1, 3))))
    assert not validate(SpanningTree(3, ((0, 0), (1, 2))))
    assert validate(SpanningTree(1, ()))


def test_wiener_small_cases():
    two = PointSet.from_xy([(0, 0), (3, 4)])
    assert wiener_pairwise(SpanningTree(2, ((0, 1),)), two) == 5.0
    assert wiener_pairwise(PATH3, LINE3) == 4.0


def test_edge_contribution_rows():
    rep = wiener_edge_contribution(PATH3, LINE3)
    assert [(r.count_p, r.count_q, r.contribution) for r in rep.per_edge_contribution] == [
        (1, 2, 2.0),
        (2, 1, 2.0),
    ]
    assert rep.wiener == 4.0
    assert rep.weight == 2.0


def test_star():
    rep = wiener_edge_contribution(STAR, STAR_PTS)
    for row in rep.per_edge_contribution:
        assert (row.count_p, row.count_q) == (3, 1)
        assert row.length == pytest.approx(1.0)
    assert rep.wiener == pytest.approx(9.0)
    assert tree_weight(STAR, STAR_PTS) == pytest.approx(3.0)


def test_unit_path_five():
    ps = PointSet.from_xy([(i, 0) for i in range(5)])
    t = SpanningTree(5, tuple((i, i + 1) for i in range(4)))
    assert wiener(t, ps) == 20.0


@pytest.mark.parametrize("n", [2, 3, 8, 17, 64])
def test_dual_method_agreement(n, rng):
    for _ in range(10):
        ps = random_points(n, rng)
        t = random_tree(n, rng)
        a = wiener_pairwise(t, ps)
        b = wiener_edge_contribution(t, ps).wiener
        assert abs(a - b) <= 1e-9 * max(1.0, a)


@pytest.mark.parametrize("n", [2, 5, 12, 30])
def test_report_invariants(n, rng):
    ps = random_points(n, rng)
    t = random_tree(n, rng)
    rep = wiener_edge_contribution(t, ps)
    for row in rep.per_edge_contribution:
        assert row.count_p + row.count_q == n
        assert row.count_p >= 1 and row.count_q >= 1
    assert math.fsum(r.contribution for r in rep.per_edge_contribution) == pytest.approx(
        rep.wiener, rel=1e-12
    )


def test_delta_from():
    assert delta_from(PATH3, LINE3, 1) == 2.0
    assert delta_from(PATH3, LINE3, 0) == 3.0
    with pytest.raises(InvalidInput):
        delta_from(PATH3, LINE3, 3)


@pytest.mark.parametrize("n", [2, 6, 25])
def test_handshake_identity(n, rng):
    ps = random_points(n, rng)
    t = random_tree(n, rng)
    total = sum(delta_from(t, ps, v) for v in range(n))
    assert total == pytest.approx(2 * wiener_pairwise(t, ps), rel=1e-12)


def test_size_mismatch():
    with pytest.raises(InvalidInput):
        wiener_pairwise(PATH3, SQUARE)
    with pytest.raises(InvalidInput):
        wiener_edge_contribution(PATH3, SQUARE)
    with pytest.raises(InvalidInput):
        tree_weight(PATH3, SQUARE)


def test_complete_graph_wiener():
    tri = PointSet.from_xy([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)])
    assert complete_graph_wiener(tri) == pytest.approx(3.0)
    assert complete_graph_wiener(PointSet.from_xy([(0, 0), (0, 7)])) == 7.0


def test_complete_graph_wiener_3x3_grid():
    ps = PointSet.from_xy([(a, b) for b in range(3) for a in range(3)])
    # counted by offset class (dx, dy): 12 axis pairs at 1, 6 at 2,
    # 8 at sqrt 2, 8 at sqrt 5, 2 at sqrt 8
    expected = 12 + 12 + 8 * math.sqrt(2) + 8 * math.sqrt(5) + 2 * math.sqrt(8)
    assert complete_graph_wiener(ps) == pytest.approx(expected, rel=1e-12)


def test_crossing_pairs():
    t = SpanningTree(4, ((0, 2), (1, 3), (0, 1)))
    assert crossing_pairs(t, SQUARE) == [(0, 1)]
    assert crossing_pairs(STAR, STAR_PTS) == []
    star_on_square = SpanningTree(4, ((2, 0), (2, 1), (2, 3)))
    assert crossing_pairs(star_on_square, SQUARE) == []


def test_zero_length_edges_are_legal():
    ps = PointSet.from_xy([(0, 0), (0, 0), (1, 0)])
    t = SpanningTree(3, ((0, 1), (1, 2)))
    rep = wiener_edge_contribution(t, ps)
    assert rep.per_edge_contribution[0].contribution == 0.0
    assert rep.wiener == 2.0
    assert crossing_pairs(t, ps) == []


def test_uncross_quadrilateral_against_enumeration():
    t = SpanningTree(4, ((0, 2), (1, 3), (0, 1)))
    out = uncross(t, SQUARE, (0, 2), (1, 3))
    assert validate(out)
    assert crossing_pairs(out, SQUARE) == []
    assert wiener(out, SQUARE) < wiener(t, SQUARE)
    all_trees = {tr.canonical(): wiener(tr, SQUARE) for tr in enumerate_spanning_trees(4)}
    assert len(all_trees) == 16
    assert out.canonical() in all_trees
    assert wiener(out, SQUARE) == all_trees[out.canonical()]
    # both swaps give a star (at 0 and at 1) of value 6 + 3*sqrt(2); the tie goes to T'
    assert wiener(t, SQUARE) == pytest.approx(4 + 6 * math.sqrt(2))
    assert out.canonical() == ((0, 1), (0, 2), (0, 3))
    assert wiener(out, SQUARE) == pytest.approx(6 + 3 * math.sqrt(2))


def test_uncross_rejects_bad_input():
    t = SpanningTree(4, ((0, 1), (1, 2), (2, 3)))
    with pytest.raises(InvalidInput):
        uncross(t, SQUARE, (0, 1), (2, 3))
    with pytest.raises(InvalidInput):
        uncross(t, SQUARE, (0, 2), (1, 3))


def test_uncross_strictly_improves(rng):
    done = 0
    while done < 200:
        n = rng.randint(4, 10)
        ps = random_points(n, rng)
        t = random_tree(n, rng)
        pairs = crossing_pairs(t, ps)
        if not pairs:
            continue
        e, f = pairs[rng.randrange(len(pairs))]
        out = uncross(t, ps, t.edges[e], t.edges[f])
        assert validate(out)
        assert wiener(out, ps) < wiener(t, ps)
        done += 1


def test_untangle_terminates(rng):
    for _ in range(30):
        n = rng.randint(4, 10)
        ps = random_points(n, rng)
        t = random_tree(n, rng)
        out, steps = untangle(t, ps, max_steps=10_000)
        assert crossing_pairs(out, ps) == []
        if steps:
            assert wiener(out, ps) < wiener(t, ps)
