"""Exhaustive ground truth: every labelled tree, every Hamiltonian path.

Trees come from Prüfer sequences taken in lexicographic order. The
``enumerate_spanning_trees`` generator is the plain one-tree-at-a-time
decoder. The minimisers decode the same sequences in numpy batches, one batch
per leading symbol, and score each tree with the edge-contribution formula.
Component sizes depend only on the tree's shape, so a batch's coefficients
are computed once and reused for every point set of that size.
"""

from __future__ import annotations

import heapq
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Optional, Union

import numpy as np

from .errors import Infeasible, InvalidInput, LimitExceeded
from .geometry import PointSet
from .paths import HamiltonianPath
from .tree import SpanningTree

TREE_MAX_N = 9
PATH_MAX_N = 10
REL_TOL = 1e-9


@dataclass(frozen=True)
class OracleResult:
    best_value: float
    best_witness: Union[SpanningTree, HamiltonianPath]
    enumerated_count: int


def _guard(n: int, cap: int, force: bool) -> None:
    if n < 2:
        raise InvalidInput("need at least 2 points")
    if n > cap and not force:
        raise LimitExceeded(
            f"exhaustive search over n={n} exceeds the cap of {cap}; "
            "pass force=True (CLI: --force) to run it anyway"
        )


def prufer_decode(seq, n: int) -> SpanningTree:
    """Tree for one Prüfer sequence; edges listed in removal order."""
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return SpanningTree(n, tuple(edges))


def enumerate_spanning_trees(n: int, *, force: bool = False) -> Iterator[SpanningTree]:
    """Every labelled tree on ``n`` nodes exactly once (``n ** (n - 2)`` of them)."""
    _guard(n, TREE_MAX_N, force)
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def _sequences(n: int, lead: Optional[int]) -> np.ndarray:
    if n == 2:
        return np.zeros((1, 0), dtype=np.int64)
    free = n - 3
    idx = np.arange(n**free, dtype=np.int64)
    cols = [np.full(idx.shape, lead, dtype=np.int64)]
    for c in range(free):
        cols.append((idx // n ** (free - 1 - c)) % n)
    return np.stack(cols, axis=1)


def _decode_batch(seqs: np.ndarray, n: int):
    """Vectorised Prüfer decoding.

    Returns ``(u, v, coef)`` arrays of shape (batch, n - 1) where edge ``e``
    of tree ``t`` joins ``u[t, e]`` and ``v[t, e]`` and splits the tree into
    parts whose sizes multiply to ``coef[t, e]``.
    """
    batch = seqs.shape[0]
    rows = np.arange(batch)
    degree = np.ones((batch, n), dtype=np.int64)
    for c in range(seqs.shape[1]):
        np.add.at(degree, (rows, seqs[:, c]), 1)
    # size of the part hanging below each node, rooted at the last survivor
    size = np.ones((batch, n), dtype=np.int64)
    u = np.empty((batch, n - 1), dtype=np.int64)
    v = np.empty((batch, n - 1), dtype=np.int64)
    coef = np.empty((batch, n - 1), dtype=np.float64)
    for c in range(seqs.shape[1]):
        leaf = np.argmax(degree == 1, axis=1)
        parent = seqs[:, c]
        u[:, c] = leaf
        v[:, c] = parent
        s = size[rows, leaf]
        coef[:, c] = s * (n - s)
        size[rows, parent] += s
        degree[rows, leaf] = 0
        degree[rows, parent] -= 1
    last_u = np.argmax(degree == 1, axis=1)
    degree[rows, last_u] = 0
    last_v = np.argmax(degree == 1, axis=1)
    u[:, -1] = last_u
    v[:, -1] = last_v
    s = size[rows, last_u]
    coef[:, -1] = s * (n - s)
    return u, v, coef


@lru_cache(maxsize=None)
def _cached_chunk(n: int, lead: Optional[int]):
    out = _decode_batch(_sequences(n, lead), n)
    for arr in out:
        arr.setflags(write=False)
    return out


def _tree_chunks(n: int):
    leads = [None] if n == 2 else list(range(n))
    for lead in leads:
        if n <= 8:
            yield _cached_chunk(n, lead)
        else:
            yield _decode_batch(_sequences(n, lead), n)


def _scan_trees(ps: PointSet, budget: Optional[float], threads: int, rel_tol: float):
    n = len(ps)
    D = ps.distance_matrix()
    limit = None if budget is None else budget + rel_tol * max(1.0, abs(budget))

    def score(chunk):
        u, v, coef = chunk
        lengths = D[u, v]
        values = (coef * lengths).sum(axis=1)
        if limit is not None:
            values = np.where(lengths.sum(axis=1) <= limit, values, np.inf)
        best = int(np.argmin(values))
        return float(values[best]), u[best], v[best], values.shape[0]

    chunks = _tree_chunks(n)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(score, chunks))
    else:
        results = [score(c) for c in chunks]
    count = 0
    best = None
    # chunks are in lexicographic order, so the first strict minimum wins
    for value, bu, bv, size in results:
        count += size
        if best is None or value < best[0]:
            best = (value, bu, bv)
    value, bu, bv = best
    witness = SpanningTree(n, tuple(zip(bu.tolist(), bv.tolist())))
    return value, witness, count


def min_wiener_tree_bruteforce(
    ps: PointSet, *, force: bool = False, threads: int = 1
) -> OracleResult:
    _guard(len(ps), TREE_MAX_N, force)
    value, witness, count = _scan_trees(ps, None, threads, REL_TOL)
    return OracleResult(value, witness, count)


def budgeted_min_wiener(
    ps: PointSet,
    budget: float,
    *,
    force: bool = False,
    threads: int = 1,
    rel_tol: float = REL_TOL,
) -> OracleResult:
    """Minimum Wiener index over trees with total length at most ``budget``.

    Raises ``Infeasible`` when no tree fits the budget.
    """
    _guard(len(ps), TREE_MAX_N, force)
    value, witness, count = _scan_trees(ps, float(budget), threads, rel_tol)
    if math.isinf(value):
        raise Infeasible(f"no spanning tree has weight <= {budget}")
    return OracleResult(value, witness, count)


def enumerate_hamiltonian_paths(n: int, *, force: bool = False) -> Iterator[HamiltonianPath]:
    """Each undirected Hamiltonian path once, as the orientation with first < last."""
    _guard(n, PATH_MAX_N, force)
    for perm in permutations(range(n)):
        if perm[0] < perm[-1]:
            yield HamiltonianPath(perm)


def _path_chunks(n: int):
    for first in range(n):
        rest = [v for v in range(n) if v != first]
        tails = np.array(list(permutations(rest)), dtype=np.int64).reshape(-1, n - 1)
        tails = tails[tails[:, -1] > first]
        if tails.shape[0]:
            yield np.hstack([np.full((tails.shape[0], 1), first), tails])


def min_wiener_path_bruteforce(
    ps: PointSet, *, force: bool = False, threads: int = 1
) -> OracleResult:
    n = len(ps)
    _guard(n, PATH_MAX_N, force)
    D = ps.distance_matrix()
    i = np.arange(1, n)
    weights = (i * (n - i)).astype(np.float64)

    def score(perms):
        values = (D[perms[:, :-1], perms[:, 1:]] * weights).sum(axis=1)
        best = int(np.argmin(values))
        return float(values[best]), perms[best], perms.shape[0]

    chunks = _path_chunks(n)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(score, chunks))
    else:
        results = [score(c) for c in chunks]
    count = 0
    best = None
    for value, perm, size in results:
        count += size
        if best is None or value < best[0]:
            best = (value, perm)
    return OracleResult(best[0], HamiltonianPath(tuple(best[1].tolist())), count)
