"""Elementary cycle machinery: enumeration, endpoint fans, parity tricks.

The enumerators are the workhorses behind both the basic extraction
procedures here and the exact packing oracle.  All of them are
deterministic: roots ascend, neighbor lists are sorted, and an undirected
cycle is reported once (minimum vertex first, smaller-successor direction).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameters, BadResidue, DegreeTooLow, SearchExhausted
from .graphs import Cycle, Digraph, Graph
from .partition import VertexPartition

DEFAULT_SEARCH_BUDGET = 10**7


class _BudgetHit(Exception):
    """Internal control flow; callers translate into their own error type."""


class ExpansionBudget:
    """Counts node expansions across a search and trips at the limit."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_SEARCH_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise _BudgetHit


def iter_all_cycles(g, allowed=None, budget: ExpansionBudget | None = None):
    """Yield every simple cycle of g as a canonical vertex tuple.

    Depth first from each root in increasing id order; only vertices with
    larger ids are visited, so each cycle appears exactly once, rooted at
    its minimum vertex.  Digraph cycles follow arc direction and include
    digons.  Not ordered by length.
    """
    directed = isinstance(g, Digraph)
    nbrs = g.out if directed else g.neighbors
    least = 2 if directed else 3
    verts = sorted(allowed) if allowed is not None else range(g.n)
    member = set(verts)
    on_path = [False] * g.n
    for root in verts:
        path = [root]
        on_path[root] = True
        iters = [iter(nbrs(root))]
        while iters:
            advanced = False
            for w in iters[-1]:
                if w == root and len(path) >= least and (directed or path[1] < path[-1]):
                    yield tuple(path)
                    continue
                if w <= root or w not in member or on_path[w]:
                    continue
                if budget:
                    budget.spend()
                path.append(w)
                on_path[w] = True
                iters.append(iter(nbrs(w)))
                advanced = True
                break
            if not advanced:
                iters.pop()
                on_path[path.pop()] = False


def _distances_to(g, root: int, member: set, reverse: bool) -> dict[int, int]:
    # BFS distances within the allowed set; for digraphs with reverse=True
    # this is the distance from each vertex TO the root along arcs.
    if isinstance(g, Digraph):
        step = g.into if reverse else g.out
    else:
        step = g.neighbors
    dist = {root: 0}
    queue = [root]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for w in step(u):
            if w in member and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def iter_cycles_of_length(g, length: int, allowed=None, budget: ExpansionBudget | None = None):
    """Yield the simple cycles of exactly this length, canonically ordered.

    Handles Graph and Digraph; digraph cycles follow arc direction and may
    be digons.  Pruned by distance-to-root so sparse graphs stay cheap.
    """
    directed = isinstance(g, Digraph)
    if length < (2 if directed else 3):
        return
    verts = sorted(allowed) if allowed is not None else list(range(g.n))
    member = set(verts)
    if length > len(member):
        return
    nbrs = g.out if directed else g.neighbors
    closes = (lambda u, r: g.has_arc(u, r)) if directed else (lambda u, r: g.has_edge(u, r))
    on_path = [False] * g.n
    for root in verts:
        dist = _distances_to(g, root, member, reverse=True)
        if len(dist) < length:
            member.discard(root)
            continue
        path = [root]
        on_path[root] = True
        iters = [iter(nbrs(root))]
        while iters:
            advanced = False
            p = len(path)
            if p == length:
                u = path[-1]
                if closes(u, root) and (directed or path[1] < path[-1]):
                    yield tuple(path)
                iters.pop()
                on_path[path.pop()] = False
                continue
            for w in iters[-1]:
                if w <= root or w not in member or on_path[w]:
                    continue
                if dist.get(w, length + 1) > length - p:
                    continue
                if budget:
                    budget.spend()
                path.append(w)
                on_path[w] = True
                iters.append(iter(nbrs(w)))
                advanced = True
                break
            if not advanced:
                iters.pop()
                on_path[path.pop()] = False
        # roots are exhausted in increasing order; later cycles use larger ids only
        member.discard(root)


def has_cycle_of_length(g, length: int, allowed=None, budget: ExpansionBudget | None = None) -> bool:
    for _ in iter_cycles_of_length(g, length, allowed, budget):
        return True
    return False


def maximal_path_cycles(g: Graph, k: int) -> tuple[list[Cycle], int]:
    """k cycles of pairwise distinct lengths through one common vertex.

    Grows a path greedily until its tip has every neighbor on the path;
    each on-path neighbor except the immediate predecessor closes a cycle
    of its own length, and the k longest are returned together with the
    common tip vertex.  Requires min degree >= k+1.
    """
    if k < 1:
        raise BadParameters("k must be positive")
    if g.min_degree() < k + 1:
        raise DegreeTooLow(f"min degree {g.min_degree()} < {k + 1}")
    path = [0]
    on_path = {0}
    while True:
        tip = path[-1]
        ext = next((w for w in g.neighbors(tip) if w not in on_path), None)
        if ext is None:
            break
        path.append(ext)
        on_path.add(ext)
    tip = path[-1]
    pos = {v: i for i, v in enumerate(path)}
    starts = sorted(pos[w] for w in g.neighbors(tip))
    starts = [i for i in starts if i <= len(path) - 3]  # drop the predecessor's 2-cycle
    if len(starts) < k:
        raise DegreeTooLow(f"only {len(starts)} usable fan cycles at the path tip")
    chosen = starts[:k]  # earliest starts give the k longest cycles
    cycles = [Cycle.make(path[i:]) for i in sorted(chosen, reverse=True)]
    return cycles, tip


def maxcut_bipartition(g: Graph, k: int) -> VertexPartition:
    """Bipartition where every vertex has >= k neighbors across the cut.

    Plain local search: flip any vertex with more same-side than cross
    neighbors, which strictly grows the cut.  At a local optimum each
    vertex v has cross degree >= ceil(d(v)/2) >= k given min degree 2k-1.
    """
    if k < 1:
        raise BadParameters("k must be positive")
    if g.min_degree() < 2 * k - 1:
        raise DegreeTooLow(f"min degree {g.min_degree()} < {2 * k - 1}")
    side = [0] * g.n
    cross = [0] * g.n
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            same = g.degree(v) - cross[v]
            if same > cross[v]:
                side[v] ^= 1
                for w in g.neighbors(v):
                    if side[w] == side[v]:
                        cross[w] -= 1
                    else:
                        cross[w] += 1
                cross[v] = same
                improved = True
    classes = (
        tuple(v for v in range(g.n) if side[v] == 0),
        tuple(v for v in range(g.n) if side[v] == 1),
    )
    return VertexPartition.verified(g, classes, (k, k), cross=True)


def even_distinct_cycles(g: Graph, k: int) -> tuple[list[Cycle], int]:
    """k cycles of pairwise distinct even lengths through a common vertex.

    Max-cut gives cross degree >= k+1 everywhere; the cross edges form a
    bipartite subgraph, so the endpoint fan there only closes even cycles.
    Requires min degree >= 2k+1.
    """
    if k < 1:
        raise BadParameters("k must be positive")
    if g.min_degree() < 2 * k + 1:
        raise DegreeTooLow(f"min degree {g.min_degree()} < {2 * k + 1}")
    part = maxcut_bipartition(g, k + 1)
    left = set(part.classes[0])
    cross_edges = [(u, v) for u, v in g.edges() if (u in left) != (v in left)]
    cross_graph = Graph(g.n, cross_edges)
    return maximal_path_cycles(cross_graph, k)


@dataclass(frozen=True)
class ResidueSearch:
    """Outcome of a residue-targeted cycle search.

    status is "found", "exhausted" (budget hit, search truncated), or
    "completed-empty" (every simple cycle was enumerated and none fits,
    which is a definitive absence proof).
    """

    status: str
    cycle: Cycle | None
    explored: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def residue_cycle(g: Graph, c: int, r: int, budget: int = DEFAULT_SEARCH_BUDGET) -> ResidueSearch:
    """Search for a cycle of length congruent to c mod r."""
    if r < 2:
        raise BadResidue(f"modulus {r} must be at least 2")
    if not (0 <= c < r):
        raise BadResidue(f"residue {c} outside [0,{r})")
    meter = ExpansionBudget(budget)
    try:
        for cyc in iter_all_cycles(g, budget=meter):
            if len(cyc) % r == c:
                return ResidueSearch("found", Cycle.make(cyc), meter.used)
    except _BudgetHit:
        return ResidueSearch("exhausted", None, meter.used)
    return ResidueSearch("completed-empty", None, meter.used)


def divisible_distinct_cycles(
    g: Graph, k: int, r: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> list[Cycle]:
    """k cycles of pairwise distinct lengths, all divisible by r.

    Residue targeting does the work: spread k targets over multiples of r
    in a larger modulus, so the lengths come out distinct by congruence.
    An even modulus only reaches even residues, hence the case split; for
    even k with odd r the odd-k construction runs with k+1 targets and the
    k shortest results are kept.
    """
    if k < 1 or r < 2:
        raise BadParameters("need k >= 1 and r >= 2")
    pad = k % 2 == 0 and r % 2 == 1
    need = 2 * (k + 1) * r - 1 if pad else 2 * k * r - 1
    if g.min_degree() < need:
        raise DegreeTooLow(f"min degree {g.min_degree()} < {need}")
    count = k + 1 if pad else k
    modulus = count * r
    if r % 2 == 0:
        targets = [(i * r) % modulus for i in range(count)]
    else:
        targets = [(2 * i * r) % modulus for i in range(count)]
    found = []
    for c in targets:
        res = residue_cycle(g, c, modulus, budget)
        if res.status == "completed-empty":
            raise SearchExhausted(
                f"no cycle of length {c} mod {modulus}; the search completed, "
                "so this residue class is provably missing",
                completed=True,
            )
        if res.status == "exhausted":
            raise SearchExhausted(
                f"budget exhausted searching length {c} mod {modulus}",
                completed=False,
            )
        found.append(res.cycle)
    found.sort(key=lambda cy: cy.length)
    return found[:k]
