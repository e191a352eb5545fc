"""Path-plus-apex witnesses: a path P and an outside vertex x with exactly
k+1 neighbors on P.  Such a pair packs k nested distinct-length cycles
through x, and minimum-cardinality pairs constrain how many neighbors any
external vertex can have inside the witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeTooLow, InvalidSchema, NotOptimal
from .graphs import Cycle, Graph
from . import verify

EXACT_THRESHOLD = 16


def _canonical_path(path: tuple[int, ...]) -> tuple[int, ...]:
    rev = tuple(reversed(path))
    return path if path <= rev else rev


@dataclass(frozen=True)
class PathVertexSchema:
    """Path plus apex; cardinality counts the path vertices and the apex.

    certified_optimal marks schemas produced by an exhaustive minimization,
    the only ones the external-degree report accepts.
    """

    path: tuple[int, ...]
    apex: int
    k: int
    certified_optimal: bool = False

    @property
    def cardinality(self) -> int:
        return len(self.path) + 1

    def vertex_set(self) -> frozenset:
        return frozenset(self.path) | {self.apex}

    def check(self, g: Graph):
        bad = verify.schema_violation(g, self.path, self.apex, self.k)
        if bad:
            raise InvalidSchema(bad)


def find_schema(g: Graph, k: int) -> PathVertexSchema:
    """Greedy witness: grow a maximal path, apex the tip, trim the prefix.

    The tip of a maximal path has all its neighbors on the path, at least
    k+1 of them under the degree hypothesis; cutting the path just before
    the right neighbor leaves exactly k+1.  Requires min degree >= k+1.
    """
    if k < 1:
        raise InvalidSchema("k must be positive")
    if g.min_degree() < k + 1:
        raise DegreeTooLow(f"min degree {g.min_degree()} < {k + 1}")
    path = [0]
    seen = {0}
    while True:
        ext = next((w for w in g.neighbors(path[-1]) if w not in seen), None)
        if ext is None:
            break
        path.append(ext)
        seen.add(ext)
    apex = path.pop()
    pos = {v: i for i, v in enumerate(path)}
    hits = sorted(pos[w] for w in g.neighbors(apex))
    cut = hits[len(hits) - (k + 1)]  # keep the last k+1 neighbors
    trimmed = tuple(path[cut:])
    s = PathVertexSchema(_canonical_path(trimmed), apex, k)
    s.check(g)
    return s


def _shrink(g: Graph, s: PathVertexSchema) -> PathVertexSchema:
    """Apply the local cardinality-decreasing moves until none fires.

    Moves, tried in order: drop a path end that is not an apex neighbor;
    re-apex on an external vertex with k+2 or more path neighbors; reroute
    the path through an external neighbor of both ends and the apex to
    drop a non-neighbor path vertex.  Each strictly shrinks, so the loop
    terminates.
    """
    k = s.k
    path = list(s.path)
    apex = s.apex
    changed = True
    while changed:
        changed = False
        while path and not g.has_edge(apex, path[0]):
            path.pop(0)
            changed = True
        while path and not g.has_edge(apex, path[-1]):
            path.pop()
            changed = True
        inside = set(path) | {apex}
        swapped = False
        for y in range(g.n):
            if y in inside:
                continue
            hits = [i for i, v in enumerate(path) if g.has_edge(y, v)]
            if len(hits) >= k + 2:
                cut = hits[len(hits) - (k + 1)]
                path = path[cut:]
                apex = y
                changed = swapped = True
                break
        if swapped:
            continue
        for y in range(g.n):
            if y in inside or not g.has_edge(apex, y):
                continue
            if not (g.has_edge(y, path[0]) and g.has_edge(y, path[-1])):
                continue
            hits = sum(1 for v in path if g.has_edge(y, v))
            if hits != k + 1:
                continue
            holes = [i for i, v in enumerate(path) if not g.has_edge(apex, v)]
            if not holes:
                continue
            i = holes[-1]  # both ends are apex neighbors here, so i <= len-2
            rerouted = path[i + 2:] + [y] + path[:i]
            # drops path[i] (a non-neighbor) and path[i+1] (a neighbor) while
            # y joins, so the apex keeps exactly k+1 path neighbors
            if all(g.has_edge(a, b) for a, b in zip(rerouted, rerouted[1:])):
                path = rerouted
                changed = True
                break
    out = PathVertexSchema(_canonical_path(tuple(path)), apex, k)
    out.check(g)
    return out


def _exact_minimum(g: Graph, k: int, upper: int) -> PathVertexSchema | None:
    """Exhaustive minimum-cardinality schema, apexes in increasing id order.

    A minimum schema's path ends at apex neighbors, so the search walks
    paths between apex neighbors, counting apex hits, pruned by the best
    cardinality so far.  Deterministically returns the first minimum in
    (apex, path) order.
    """
    best_len = upper  # path length bound, exclusive
    best = None
    for apex in range(g.n):
        nbrs = g.neighbor_set(apex)
        if len(nbrs) < k + 1:
            continue
        path: list[int] = []
        on_path = set()

        def rec(v, hits):
            nonlocal best, best_len
            path.append(v)
            on_path.add(v)
            hits += 1 if v in nbrs else 0
            if hits == k + 1:
                if v in nbrs and len(path) < best_len:
                    best_len = len(path)
                    best = PathVertexSchema(
                        _canonical_path(tuple(path)), apex, k, certified_optimal=True
                    )
            elif len(path) < best_len - 1:
                for w in g.neighbors(v):
                    if w != apex and w not in on_path:
                        rec(w, hits)
            on_path.discard(v)
            path.pop()

        for start in sorted(nbrs):
            rec(start, 0)
    return best


def optimize_schema(
    g: Graph, k: int, exact_threshold: int = EXACT_THRESHOLD
) -> PathVertexSchema:
    """Minimum-cardinality schema when the graph is small enough, otherwise
    the greedy witness improved by local shrinking.

    certified_optimal on the result tells which branch ran.
    """
    greedy = _shrink(g, find_schema(g, k))
    if g.n <= exact_threshold:
        exact = _exact_minimum(g, k, upper=len(greedy.path) + 1)
        if exact is not None:
            return exact
        # the greedy witness is already minimum; stamp it
        out = PathVertexSchema(greedy.path, greedy.apex, k, certified_optimal=True)
        out.check(g)
        return out
    return greedy


@dataclass(frozen=True)
class ExternalReport:
    """Neighbor counts into a schema from every outside vertex.

    consistent is True when no outside vertex exceeds k+2 neighbors in the
    witness and every vertex attaining k+2 does so in the only permitted
    shape: adjacent to the apex, every path vertex adjacent to the apex,
    and the witness at its minimum size k+2.
    """

    counts: dict
    consistent: bool
    violations: tuple[str, ...]


def schema_external_report(g: Graph, s: PathVertexSchema) -> ExternalReport:
    """Check the optimality consequences on external degrees.

    Only meaningful for certified minimum schemas; raises NotOptimal for
    anything else.
    """
    if not s.certified_optimal:
        raise NotOptimal("report requires an exhaustively minimized schema")
    s.check(g)
    inside = s.vertex_set()
    counts = {}
    violations = []
    for y in range(g.n):
        if y in inside:
            continue
        c = sum(1 for v in inside if g.has_edge(y, v))
        counts[y] = c
        if c > s.k + 2:
            violations.append(f"vertex {y} has {c} > {s.k + 2} neighbors in the witness")
        elif c == s.k + 2:
            if not g.has_edge(y, s.apex):
                violations.append(f"vertex {y} attains {c} but misses the apex")
            if any(not g.has_edge(s.apex, v) for v in s.path):
                violations.append(
                    f"vertex {y} attains {c} but some path vertex misses the apex"
                )
            if len(inside) != s.k + 2:
                violations.append(
                    f"vertex {y} attains {c} on a witness of size {len(inside)}"
                )
    return ExternalReport(counts, not violations, tuple(violations))


def schema_cycles(g: Graph, s: PathVertexSchema) -> list[Cycle]:
    """The k nested cycles a schema packs through its apex.

    Each cycle runs from the first apex neighbor along the path to a later
    apex neighbor and back through the apex; the k choices of endpoint
    give k pairwise distinct lengths.
    """
    s.check(g)
    hits = [i for i, v in enumerate(s.path) if g.has_edge(s.apex, v)]
    first = hits[0]
    out = []
    for j in hits[1:]:
        out.append(Cycle.make((s.apex,) + s.path[first : j + 1]))
    return out
