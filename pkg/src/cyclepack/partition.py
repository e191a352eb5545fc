"""Degree-constrained 2-partitions and their multiway folding.

degree_partition splits a graph into classes (A, B) where A induces min
degree >= s and B induces min degree >= t.  Three hypotheses are strong
enough to guarantee existence:

  stiebitz      min degree >= s + t + 1
  kaneko        triangle free and min degree >= s + t
  diwan         girth >= 5, s, t >= 2 and min degree >= s + t - 1

The search itself never depends on which hypothesis applies: it is a
potential-descent local search with seeded restarts, plus an exhaustive
branch and bound for small vertex counts so that failures below the
threshold are impossible, not just unlikely.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from .errors import PreconditionUnmet, SearchExhausted
from .graphs import Graph, girth
from . import verify

log = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 24
RESTARTS = 50
MOVES_PER_RESTART_FACTOR = 10

MODES = ("auto", "stiebitz", "kaneko", "diwan")


@dataclass(frozen=True)
class VertexPartition:
    """A partition of all vertices with per-class degree guarantees.

    guarantees[i] is the induced min degree promised inside class i, or
    the cross-cut degree of each vertex when cross is True (bipartitions
    produced by max-cut).  Use verified() to get a checked instance.
    """

    classes: tuple[tuple[int, ...], ...]
    guarantees: tuple[int, ...]
    cross: bool = False

    @staticmethod
    def verified(g, classes, guarantees, cross: bool = False) -> "VertexPartition":
        classes = tuple(tuple(sorted(c)) for c in classes)
        guarantees = tuple(guarantees)
        bad = verify.partition_violation(g, classes, guarantees, cross)
        if bad:
            raise AssertionError(f"partition failed verification: {bad}")
        return VertexPartition(classes, guarantees, cross)

    def as_dict(self) -> dict:
        return {
            "classes": [list(c) for c in self.classes],
            "guarantees": list(self.guarantees),
            "cross": self.cross,
        }


def _check_mode(g: Graph, s: int, t: int, mode: str) -> str:
    """Resolve auto and enforce the hypothesis of the chosen mode."""
    if mode not in MODES:
        raise PreconditionUnmet(f"unknown mode {mode!r}")
    d = g.min_degree()
    if mode == "auto":
        if s >= 2 and t >= 2 and d >= s + t - 1 and girth(g) >= 5:
            return "diwan"
        if d >= s + t and g.is_triangle_free():
            return "kaneko"
        if d >= s + t + 1:
            return "stiebitz"
        raise PreconditionUnmet(
            f"no hypothesis applies: min degree {d}, demands ({s},{t})"
        )
    if mode == "stiebitz" and d < s + t + 1:
        raise PreconditionUnmet(f"stiebitz needs min degree {s + t + 1}, have {d}")
    if mode == "kaneko":
        if not g.is_triangle_free():
            raise PreconditionUnmet("kaneko needs a triangle-free graph")
        if d < s + t:
            raise PreconditionUnmet(f"kaneko needs min degree {s + t}, have {d}")
    if mode == "diwan":
        if s < 2 or t < 2:
            raise PreconditionUnmet("diwan needs both demands >= 2")
        if girth(g) < 5:
            raise PreconditionUnmet("diwan needs girth >= 5")
        if d < s + t - 1:
            raise PreconditionUnmet(f"diwan needs min degree {s + t - 1}, have {d}")
    return mode


def _deficiency(demand: int, same: int) -> int:
    return demand - same if same < demand else 0


def _local_search(g: Graph, s: int, t: int, side, max_moves: int):
    """Strict potential descent from the given start sides.

    Potential: total degree deficiency over both classes.  A move flips
    one deficient vertex; among strictly improving moves the largest
    potential drop wins, ties broken by cut change then vertex id.
    Returns (success, final potential).
    """
    n = g.n
    demands = (s, t)
    same = [sum(1 for w in g.neighbors(v) if side[w] == side[v]) for v in range(n)]
    counts = [side.count(0), side.count(1)]
    phi = sum(_deficiency(demands[side[v]], same[v]) for v in range(n))
    for _ in range(max_moves):
        if phi == 0:
            return True, 0
        best = None
        for v in range(n):
            sv = side[v]
            if _deficiency(demands[sv], same[v]) == 0:
                continue
            if counts[sv] == 1:
                continue
            delta = _deficiency(demands[1 - sv], g.degree(v) - same[v]) - _deficiency(
                demands[sv], same[v]
            )
            for w in g.neighbors(v):
                dw = demands[side[w]]
                if side[w] == sv:
                    if same[w] <= dw:
                        delta += 1
                elif same[w] < dw:
                    delta -= 1
            if delta < 0:
                # cut change when v flips: same-side neighbors become cross
                dcut = 2 * same[v] - g.degree(v)
                key = (delta, dcut, v)
                if best is None or key < best:
                    best = key
        if best is None:
            return False, phi
        delta, _, v = best
        sv = side[v]
        side[v] = 1 - sv
        counts[sv] -= 1
        counts[1 - sv] += 1
        for w in g.neighbors(v):
            same[w] += 1 if side[w] == side[v] else -1
        same[v] = g.degree(v) - same[v]
        phi += delta
    return phi == 0, phi


def _exhaustive(g: Graph, s: int, t: int):
    """Branch and bound over all 2-colorings, vertices assigned in id order.

    Prune: an assigned vertex whose same-side demand cannot be met even if
    every unassigned neighbor joins its side kills the branch.
    """
    n = g.n
    demands = (s, t)
    side = [-1] * n
    same = [0] * n
    unassigned_nbrs = [g.degree(v) for v in range(n)]

    def feasible(v) -> bool:
        return same[v] + unassigned_nbrs[v] >= demands[side[v]]

    def assign(v, c) -> bool:
        side[v] = c
        ok = True
        for w in g.neighbors(v):
            unassigned_nbrs[w] -= 1
            if side[w] == c:
                same[w] += 1
                same[v] += 1
        for w in g.neighbors(v):
            if side[w] >= 0 and not feasible(w):
                ok = False
        return ok and feasible(v)

    def undo(v, c):
        for w in g.neighbors(v):
            unassigned_nbrs[w] += 1
            if side[w] == c:
                same[w] -= 1
        same[v] = 0
        side[v] = -1

    def rec(v) -> bool:
        if v == n:
            return 0 < sum(1 for x in side if x == 0) < n
        for c in (0, 1):
            if assign(v, c) and rec(v + 1):
                return True
            undo(v, c)
        return False

    if rec(0):
        return list(side)
    return None


def degree_partition(
    g: Graph, s: int, t: int, mode: str = "auto", seed: int = 0
) -> VertexPartition:
    """Partition into (A, B) with induced min degrees >= s and >= t.

    Local search with RESTARTS seeded restarts; below EXHAUSTIVE_MAX_N
    vertices a failed search falls through to exhaustive branch and bound,
    so SearchExhausted is only possible on larger graphs.
    """
    if s < 0 or t < 0:
        raise PreconditionUnmet("demands must be nonnegative")
    if g.n < 2:
        raise PreconditionUnmet("need at least two vertices")
    _check_mode(g, s, t, mode)
    rng = random.Random(seed)
    max_moves = MOVES_PER_RESTART_FACTOR * g.n * max(1, s + t)
    best_phi = None
    for _ in range(RESTARTS):
        side = [rng.randint(0, 1) for _ in range(g.n)]
        if len(set(side)) < 2:
            side[rng.randrange(g.n)] ^= 1
        ok, phi = _local_search(g, s, t, side, max_moves)
        if ok:
            classes = (
                tuple(v for v in range(g.n) if side[v] == 0),
                tuple(v for v in range(g.n) if side[v] == 1),
            )
            return VertexPartition.verified(g, classes, (s, t))
        if best_phi is None or phi < best_phi:
            best_phi = phi
    if g.n <= EXHAUSTIVE_MAX_N:
        side = _exhaustive(g, s, t)
        if side is not None:
            classes = (
                tuple(v for v in range(g.n) if side[v] == 0),
                tuple(v for v in range(g.n) if side[v] == 1),
            )
            return VertexPartition.verified(g, classes, (s, t))
        # under any of the three hypotheses this is unreachable
        raise SearchExhausted(
            f"exhaustive search found no ({s},{t})-partition", completed=True
        )
    log.warning(
        "degree_partition gave up: n=%d demands=(%d,%d) best potential %s",
        g.n, s, t, best_phi,
    )
    raise SearchExhausted(
        f"no ({s},{t})-partition found in {RESTARTS} restarts",
        best_potential=best_phi,
    )


def multiway_degree_partition(
    g: Graph, demands, mode: str = "stiebitz", seed: int = 0
) -> VertexPartition:
    """Split into len(demands) classes, class i inducing min degree >= demands[i].

    Folds degree_partition left to right: peel off class 0 against the
    combined demand of the rest, then recurse on the remainder.  Needs
    min degree >= sum(d_i + 1) - 1.
    """
    demands = list(demands)
    if not demands:
        raise PreconditionUnmet("no demands")
    need = sum(d + 1 for d in demands) - 1
    if g.min_degree() < need:
        raise PreconditionUnmet(
            f"min degree {g.min_degree()} < {need} for demands {demands}"
        )
    classes: list[tuple[int, ...]] = []
    current = g
    ids = tuple(range(g.n))  # current-graph vertex -> original id
    for i, d in enumerate(demands[:-1]):
        rest = sum(x + 1 for x in demands[i + 1:]) - 1
        part = degree_partition(current, d, rest, mode=mode, seed=seed + i)
        classes.append(tuple(ids[v] for v in part.classes[0]))
        sub, parent = current.induced(part.classes[1])
        ids = tuple(ids[p] for p in parent)
        current = sub
    classes.append(ids)
    return VertexPartition.verified(g, tuple(classes), tuple(demands))
