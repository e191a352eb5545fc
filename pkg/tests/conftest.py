"""Shared test helpers: the stored small-graph corpus and seeded random
instance builders used across the suite."""

import json
import pathlib
import random

from cyclepack.graphs import Graph

DATA = pathlib.Path(__file__).parent / "data"

_corpus_cache = None


def corpus_graphs():
    global _corpus_cache
    if _corpus_cache is None:
        rows = []
        with (DATA / "small_graphs.jsonl").open(encoding="utf-8") as fh:
            for line in fh:
                row = json.loads(line)
                rows.append(Graph(row["n"], [tuple(e) for e in row["edges"]]))
        _corpus_cache = rows
    return _corpus_cache


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def random_min_degree_graph(n: int, dmin: int, seed: int) -> Graph:
    """Sparse random graph patched so every vertex reaches degree dmin."""
    rng = random.Random(seed)
    edges = set()
    for _ in range(n * dmin):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for v in range(n):
        while deg[v] < dmin:
            w = rng.randrange(n)
            e = (min(v, w), max(v, w))
            if w == v or e in edges:
                continue
            edges.add(e)
            deg[v] += 1
            deg[w] += 1
    return Graph(n, sorted(edges))


def random_bipartite_min_degree(n1: int, n2: int, dmin: int, seed: int) -> Graph:
    """Random bipartite graph with min degree >= dmin; triangle-free by shape."""
    assert dmin <= min(n1, n2)
    rng = random.Random(seed)
    edges = set()
    for _ in range(2 * dmin * (n1 + n2)):
        u = rng.randrange(n1)
        w = n1 + rng.randrange(n2)
        edges.add((u, w))
    deg = [0] * (n1 + n2)
    for u, w in edges:
        deg[u] += 1
        deg[w] += 1
    for v in range(n1 + n2):
        while deg[v] < dmin:
            w = n1 + rng.randrange(n2) if v < n1 else rng.randrange(n1)
            e = (min(v, w), max(v, w))
            if e in edges:
                continue
            edges.add(e)
            deg[v] += 1
            deg[w] += 1
    return Graph(n1 + n2, sorted(edges))
