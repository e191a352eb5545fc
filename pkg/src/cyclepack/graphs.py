"""Immutable simple graphs and digraphs on dense vertex ids 0..n-1.

Everything downstream (finders, oracles, certificate checks) goes through
this module, so it stays dependency free and deliberately small: adjacency
queries, induced subgraphs with parent-id maps, biconnected blocks, girth,
strong components, canonical cycles, and the edge-list text format.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

from .errors import BadParameters, GraphFormatError


class Graph:
    """Simple undirected graph. Vertices are 0..n-1, no loops, no parallels."""

    __slots__ = ("n", "_nbr", "_sets", "_m")

    def __init__(self, n: int, edges):
        if n < 0:
            raise BadParameters("vertex count must be nonnegative")
        adj = [[] for _ in range(n)]
        seen = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameters(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise BadParameters(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise BadParameters(f"parallel edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            m += 1
        self.n = n
        self._m = m
        self._nbr = tuple(tuple(sorted(a)) for a in adj)
        self._sets = tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbr[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._nbr[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self._nbr), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self._nbr), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self):
        for u in range(self.n):
            for v in self._nbr[u]:
                if u < v:
                    yield (u, v)

    def degree_class(self, d: int) -> tuple[int, ...]:
        """Vertices of degree exactly d."""
        return tuple(v for v in range(self.n) if len(self._nbr[v]) == d)

    def degree_count(self, d: int) -> int:
        return len(self.degree_class(d))

    def induced(self, vertices) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph plus the parent ids of its vertices.

        Vertex i of the child is parent[i] in self; parent is sorted.
        """
        parent = tuple(sorted(set(vertices)))
        index = {p: i for i, p in enumerate(parent)}
        edges = [
            (index[u], index[v])
            for u in parent
            for v in self._nbr[u]
            if u < v and v in index
        ]
        return Graph(len(parent), edges), parent

    def is_triangle_free(self) -> bool:
        for u, v in self.edges():
            if self._sets[u] & self._sets[v]:
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._nbr == other._nbr
        )

    def __hash__(self):
        return hash((self.n, self._nbr))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self._m})"


class Digraph:
    """Simple directed graph. No loops, no parallel arcs; digons allowed."""

    __slots__ = ("n", "_out", "_in", "_out_sets", "_in_sets", "_m")

    def __init__(self, n: int, arcs):
        if n < 0:
            raise BadParameters("vertex count must be nonnegative")
        out = [[] for _ in range(n)]
        into = [[] for _ in range(n)]
        seen = set()
        m = 0
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameters(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise BadParameters(f"self-loop at {u}")
            if (u, v) in seen:
                raise BadParameters(f"parallel arc ({u},{v})")
            seen.add((u, v))
            out[u].append(v)
            into[v].append(u)
            m += 1
        self.n = n
        self._m = m
        self._out = tuple(tuple(sorted(a)) for a in out)
        self._in = tuple(tuple(sorted(a)) for a in into)
        self._out_sets = tuple(frozenset(a) for a in out)
        self._in_sets = tuple(frozenset(a) for a in into)

    @property
    def m(self) -> int:
        return self._m

    def out(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def into(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_set(self, v: int) -> frozenset:
        return self._out_sets[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def min_out_degree(self) -> int:
        return min((len(a) for a in self._out), default=0)

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._out_sets[u]

    def arcs(self):
        for u in range(self.n):
            for v in self._out[u]:
                yield (u, v)

    def regular_degree(self) -> int | None:
        """r when every vertex has out- and in-degree r, else None."""
        if self.n == 0:
            return None
        r = len(self._out[0])
        for v in range(self.n):
            if len(self._out[v]) != r or len(self._in[v]) != r:
                return None
        return r

    def induced(self, vertices) -> tuple["Digraph", tuple[int, ...]]:
        parent = tuple(sorted(set(vertices)))
        index = {p: i for i, p in enumerate(parent)}
        arcs = [
            (index[u], index[v])
            for u in parent
            for v in self._out[u]
            if v in index
        ]
        return Digraph(len(parent), arcs), parent

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self._out == other._out
        )

    def __hash__(self):
        return hash((self.n, self._out))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self._m})"


def _canonical_cycle(vertices: tuple[int, ...], directed: bool) -> tuple[int, ...]:
    i = vertices.index(min(vertices))
    fwd = vertices[i:] + vertices[:i]
    if directed:
        return fwd
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return fwd if fwd[1] <= rev[1] else rev


@dataclass(frozen=True)
class Cycle:
    """A simple cycle as a canonical vertex sequence.

    Canonical form: rotated so the minimum vertex id comes first; for
    undirected cycles, of the two traversal directions the one with the
    lexicographically smaller successor of the minimum is kept.
    """

    vertices: tuple[int, ...]
    directed: bool = False

    @staticmethod
    def make(seq, directed: bool = False) -> "Cycle":
        vs = tuple(seq)
        if len(set(vs)) != len(vs):
            raise BadParameters("cycle repeats a vertex")
        least = 2 if directed else 3
        if len(vs) < least:
            raise BadParameters(f"cycle length {len(vs)} below minimum {least}")
        return Cycle(_canonical_cycle(vs, directed), directed)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def translate(self, parent: tuple[int, ...]) -> "Cycle":
        """Map child-graph vertex ids back through an induced-subgraph parent map."""
        return Cycle.make(tuple(parent[v] for v in self.vertices), self.directed)


def cycle_violation(g, vertices, directed: bool | None = None) -> str | None:
    """First invariant a claimed cycle breaks in g, or None if it is valid.

    Works for Graph and Digraph; this is the primitive every certificate
    check is built from, so it recomputes everything from adjacency alone.
    """
    vs = tuple(vertices)
    if directed is None:
        directed = isinstance(g, Digraph)
    if directed != isinstance(g, Digraph):
        return "cycle orientation does not match graph type"
    least = 2 if directed else 3
    if len(vs) < least:
        return f"length {len(vs)} below minimum {least}"
    if len(set(vs)) != len(vs):
        return "repeated vertex"
    for v in vs:
        if not (0 <= v < g.n):
            return f"vertex {v} out of range"
    for i, u in enumerate(vs):
        v = vs[(i + 1) % len(vs)]
        if directed:
            if not g.has_arc(u, v):
                return f"missing arc ({u},{v})"
        else:
            if not g.has_edge(u, v):
                return f"missing edge ({u},{v})"
    return None


@dataclass(frozen=True)
class Block:
    """A biconnected component: its vertex set and induced edge set."""

    vertices: frozenset
    edges: frozenset


def blocks(g: Graph) -> list[Block]:
    """Biconnected components via the edge-stack lowpoint algorithm.

    Every edge lies in exactly one block; bridges become K2 blocks;
    isolated vertices appear in no block.
    """
    n = g.n
    disc = [0] * n
    low = [0] * n
    timer = 1
    out: list[Block] = []
    estack: list[tuple[int, int]] = []

    for root in range(n):
        if disc[root]:
            continue
        # iterative DFS; frames hold (vertex, parent, neighbor iterator)
        stack = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    # the one tree edge back; simple graphs have no parallel copy
                    continue
                if not disc[w]:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp = []
                    while estack and estack[-1] != (u, v):
                        comp.append(estack.pop())
                    if estack:
                        comp.append(estack.pop())
                    if comp:
                        vs = frozenset(x for e in comp for x in e)
                        es = frozenset((a, b) if a < b else (b, a) for a, b in comp)
                        out.append(Block(vs, es))
    return out


def cut_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices lying in at least two blocks."""
    count = {}
    for b in blocks(g):
        for v in b.vertices:
            count[v] = count.get(v, 0) + 1
    return tuple(sorted(v for v, c in count.items() if c >= 2))


def girth(g: Graph):
    """Length of a shortest cycle, math.inf for forests.

    Runs a BFS from every vertex; the shortest cycle through the root is
    detected at the first non-tree edge closing two root paths.
    """
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            if dist[u] * 2 >= best:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def strong_components(d: Digraph) -> list[list[int]]:
    """Strongly connected components in topological order of the condensation.

    The first component has no incoming arcs from later ones; for a
    tournament the list is the unique domination chain.
    """
    n = d.n
    index = [0] * n
    low = [0] * n
    onstack = [False] * n
    sstack: list[int] = []
    comps: list[list[int]] = []
    timer = 1

    for root in range(n):
        if index[root]:
            continue
        work = [(root, iter(d.out(root)))]
        index[root] = low[root] = timer
        timer += 1
        sstack.append(root)
        onstack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if not index[w]:
                    index[w] = low[w] = timer
                    timer += 1
                    sstack.append(w)
                    onstack[w] = True
                    work.append((w, iter(d.out(w))))
                    advanced = True
                    break
                if onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = sstack.pop()
                    onstack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    comps.reverse()
    return comps


# --- edge-list text format ---------------------------------------------------
#
# First line: "U n m" or "D n m".  Then exactly m lines "u v", one edge or
# arc each, 0-based ids, single spaces, newline terminated.  Lines starting
# with "#" are comments and may appear anywhere.


def parse_edgelist(text: str):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty input")
    head = lines[0].split()
    if len(head) != 3 or head[0] not in ("U", "D"):
        raise GraphFormatError(f"bad header {lines[0]!r}; expected 'U n m' or 'D n m'")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise GraphFormatError(f"bad header counts in {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header says m={m} but found {len(body)} edge lines")
    pairs = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"bad edge line {ln!r}") from None
    try:
        return Graph(n, pairs) if head[0] == "U" else Digraph(n, pairs)
    except BadParameters as e:
        raise GraphFormatError(str(e)) from None


def format_edgelist(g) -> str:
    """Canonical serialization: sorted edges, single spaces, trailing newline."""
    if isinstance(g, Digraph):
        lines = [f"D {g.n} {g.m}"]
        lines += [f"{u} {v}" for u, v in sorted(g.arcs())]
    else:
        lines = [f"U {g.n} {g.m}"]
        lines += [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def graph_sha256(g) -> str:
    """Content hash of the canonical edge-list serialization."""
    return hashlib.sha256(format_edgelist(g).encode("ascii")).hexdigest()
