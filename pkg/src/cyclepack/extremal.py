"""Witness families and the executable tightness registry.

Deterministic families are bit-exact under a fixed labeling; randomized
families take a seed and reject invalid samples.  Each tightness claim
re-derives its negative side with the exact oracle and its positive side
with the matching finder, so the registry is a machine check rather than
a citation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .dicycles import Tournament
from .errors import BadParameters, GenerationFailed, NotFound
from .graphs import Digraph, Graph, girth
from .packing import (
    even_degree_threshold,
    exact_packing_oracle,
    find_disjoint_distinct,
    find_disjoint_distinct_trianglefree,
    find_disjoint_even_distinct,
    plain_degree_threshold,
    triangle_free_degree_threshold,
)
from .profiles import EVEN, PLAIN

REJECTION_LIMIT = 2000

# point-line incidences of the seven-point projective plane
_FANO_LINES = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameters("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParameters("both sides need at least one vertex")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def heawood_graph() -> Graph:
    edges = [
        (point, 7 + line_id)
        for line_id, line in enumerate(_FANO_LINES)
        for point in line
    ]
    g = Graph(14, edges)
    assert g.m == 21 and g.min_degree() == g.max_degree() == 3 and girth(g) == 6
    return g


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges)


def _pairing_sample(d: int, n: int, rng) -> set | None:
    stubs = [v for v in range(n) for _ in range(d)]
    rng.shuffle(stubs)
    edges = set()
    for i in range(0, len(stubs), 2):
        u, v = stubs[i], stubs[i + 1]
        if u == v:
            return None
        e = (u, v) if u < v else (v, u)
        if e in edges:
            return None
        edges.add(e)
    return edges


def random_regular_graph(d: int, n: int, seed: int) -> Graph:
    """Seeded d-regular graph by the pairing model with whole-sample
    rejection.  Practical for small d; the rejection rate grows quickly
    with d and the budget errors out honestly."""
    if d < 0 or d >= n or (d * n) % 2:
        raise BadParameters(f"no {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(REJECTION_LIMIT):
        edges = _pairing_sample(d, n, rng)
        if edges is not None:
            return Graph(n, edges)
    raise GenerationFailed(f"pairing model rejected {REJECTION_LIMIT} samples for d={d}, n={n}")


def random_cubic_graph(n: int, seed: int) -> Graph:
    return random_regular_graph(3, n, seed)


def rotational_tournament(n: int) -> Tournament:
    """Vertex i beats the next (n-1)/2 vertices mod n; regular, odd n."""
    if n < 1 or n % 2 == 0:
        raise BadParameters("rotational tournaments need odd n")
    half = (n - 1) // 2
    arcs = [(i, (i + j) % n) for i in range(n) for j in range(1, half + 1)]
    return Tournament(n, arcs)


def random_tournament(n: int, seed: int) -> Tournament:
    if n < 1:
        raise BadParameters("tournament needs n >= 1")
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Tournament(n, arcs)


def random_regular_tournament(n: int, seed: int) -> Tournament:
    """Regular tournament: rotational start, shuffled by reversing cyclic
    triangles, which keeps every out-degree at (n-1)/2."""
    base = rotational_tournament(n)
    out = {u: set(base.out(u)) for u in range(n)}
    rng = random.Random(seed)
    for _ in range(20 * n * n):
        u, v, w = rng.sample(range(n), 3)
        if v in out[u] and w in out[v] and u in out[w]:
            out[u].discard(v)
            out[v].discard(w)
            out[w].discard(u)
            out[v].add(u)
            out[w].add(v)
            out[u].add(w)
    return Tournament(n, [(u, v) for u in range(n) for v in out[u]])


def bidirected_complete(n: int) -> Digraph:
    if n < 1:
        raise BadParameters("needs n >= 1")
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
    return Digraph(n, arcs)


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise BadParameters("directed cycle needs n >= 2")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def _constrained_permutation(n: int, forbidden, rng, tries: int = 200):
    # uniform-ish value choice among unused, skipping forbidden images;
    # dead ends restart the permutation
    for _ in range(tries):
        remaining = set(range(n))
        image = []
        for v in range(n):
            pool = sorted(remaining - forbidden[v])
            if not pool:
                break
            pick = pool[rng.randrange(len(pool))]
            image.append(pick)
            remaining.discard(pick)
        else:
            return image
    return None


def random_regular_digraph(r: int, n: int, seed: int) -> Digraph:
    """Seeded digraph with every in- and out-degree r, as the union of r
    arc-disjoint loopless permutations sampled one at a time."""
    if r < 1 or r >= n:
        raise BadParameters(f"no {r}-regular digraph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(REJECTION_LIMIT):
        forbidden = [{v} for v in range(n)]
        layers = []
        for _ in range(r):
            image = _constrained_permutation(n, forbidden, rng)
            if image is None:
                break
            layers.append(image)
            for v, w in enumerate(image):
                forbidden[v].add(w)
        if len(layers) == r:
            return Digraph(n, [(v, w) for image in layers for v, w in enumerate(image)])
    raise GenerationFailed(f"could not stack {r} disjoint permutations on {n} vertices")


# --- block-constrained families for the one-cycle-length lemmas --------------


def triangle_block_graph(pieces: int, seed: int) -> Graph:
    """Connected graph whose blocks are triangles and bridges, min degree 2.

    Bridges never dangle: each one immediately carries a triangle on its
    far end, so only cut vertices touch two blocks.
    """
    if pieces < 1:
        raise BadParameters("needs at least one piece")
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    n = 3
    for _ in range(pieces - 1):
        anchor = rng.randrange(n)
        if rng.random() < 0.3:
            edges.append((anchor, n))
            anchor = n
            n += 1
        edges.append((anchor, n))
        edges.append((anchor, n + 1))
        edges.append((n, n + 1))
        n += 2
    return Graph(n, edges)


def square_block_graph(pieces: int, seed: int) -> Graph:
    """Connected graph whose blocks are complete bipartite K(2,s) pieces
    and bridges, min degree 2."""
    if pieces < 1:
        raise BadParameters("needs at least one piece")
    rng = random.Random(seed)

    edges: list[tuple[int, int]] = []
    n = 0

    def attach(hub: int) -> None:
        nonlocal n
        s = rng.choice((2, 2, 3))
        other = n
        n += 1
        for _ in range(s):
            mid = n
            n += 1
            edges.append((hub, mid))
            edges.append((other, mid))

    first_hub = 0
    n = 1
    attach(first_hub)
    for _ in range(pieces - 1):
        anchor = rng.randrange(n)
        if rng.random() < 0.3:
            edges.append((anchor, n))
            anchor = n
            n += 1
        attach(anchor)
    return Graph(n, edges)


# --- the family grammar shared with the command line -------------------------


def gen(spec: str):
    """Build a graph from a family spec like `complete:7` or
    `random_regular:3,20,1`.  Deterministic families ignore no arguments;
    seeded families require the seed spelled out."""
    name, _, arg_text = spec.partition(":")
    args = []
    if arg_text:
        for piece in arg_text.split(","):
            try:
                args.append(int(piece))
            except ValueError:
                raise BadParameters(f"non-integer argument {piece!r} in {spec!r}") from None

    def arity(want: int):
        if len(args) != want:
            raise BadParameters(f"{name} takes {want} argument(s), got {len(args)}")
        return args

    if name == "complete":
        return complete_graph(*arity(1))
    if name == "complete_bipartite":
        return complete_bipartite(*arity(2))
    if name == "heawood":
        arity(0)
        return heawood_graph()
    if name == "petersen":
        arity(0)
        return petersen_graph()
    if name == "random_cubic":
        return random_cubic_graph(*arity(2))
    if name == "random_regular":
        return random_regular_graph(*arity(3))
    if name == "regular_tournament":
        return rotational_tournament(*arity(1))
    if name == "random_tournament":
        return random_tournament(*arity(2))
    if name == "random_regular_digraph":
        return random_regular_digraph(*arity(3))
    if name == "bidirected_complete":
        return bidirected_complete(*arity(1))
    if name == "directed_cycle":
        return directed_cycle(*arity(1))
    raise BadParameters(f"unknown family {name!r}")


# --- tightness claims --------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    passed: bool
    transcript: tuple[str, ...]


def _oracle_line(tag: str, g, k: int, profile) -> tuple[bool, str]:
    out = exact_packing_oracle(g, k, profile)
    if out.found:
        lengths = sorted(out.packing.lengths())
        return True, f"{tag}: found lengths {lengths} after {out.explored} nodes"
    return False, f"{tag}: proved absent after {out.explored} nodes (exhaustive)"


def _finder_line(tag: str, finder, g, k: int) -> tuple[bool, str]:
    try:
        packing = finder(g, k)
    except NotFound:
        return False, f"{tag}: not found"
    return True, f"{tag}: found lengths {sorted(packing.lengths())} ({packing.finder})"


def _claim_plain(k: int) -> ClaimResult:
    bound = plain_degree_threshold(k)
    found_small, l1 = _oracle_line(f"complete:{bound} oracle k={k}", complete_graph(bound), k, PLAIN)
    found_big, l2 = _finder_line(
        f"complete:{bound + 1} finder k={k}", find_disjoint_distinct, complete_graph(bound + 1), k
    )
    return ClaimResult("plain-degree", (not found_small) and found_big, (l1, l2))


def _claim_trianglefree(k: int) -> ClaimResult:
    bound = triangle_free_degree_threshold(k)
    small = complete_bipartite(bound - 1, bound - 1)
    big = complete_bipartite(bound, bound)
    found_small, l1 = _oracle_line(
        f"complete_bipartite:{bound - 1},{bound - 1} oracle k={k}", small, k, PLAIN
    )
    found_big, l2 = _finder_line(
        f"complete_bipartite:{bound},{bound} finder k={k}",
        find_disjoint_distinct_trianglefree,
        big,
        k,
    )
    return ClaimResult("trianglefree-degree", (not found_small) and found_big, (l1, l2))


def _claim_even(k: int) -> ClaimResult:
    bound = even_degree_threshold(k)
    found_small, l1 = _oracle_line(
        f"complete:{bound} oracle k={k} even", complete_graph(bound), k, EVEN
    )
    found_big, l2 = _finder_line(
        f"complete:{bound + 1} finder k={k} even",
        find_disjoint_even_distinct,
        complete_graph(bound + 1),
        k,
    )
    return ClaimResult("even-degree", (not found_small) and found_big, (l1, l2))


def _claim_large_order(k: int) -> ClaimResult:
    if k != 2:
        raise BadParameters("the large-order instance is registered for k=2")
    # small side g(2)-1 = 4; two disjoint distinct even cycles would need
    # 2+3 = 5 small-side vertices, so absence must be proved
    g = complete_bipartite(4, 10)
    found, line = _oracle_line("complete_bipartite:4,10 oracle k=2", g, 2, PLAIN)
    note = "min degree 4 sits one below the triangle-free bound 5"
    return ClaimResult("large-order", not found, (line, note))


def _claim_heawood(k: int) -> ClaimResult:
    if k != 2:
        raise BadParameters("the girth-6 cage instance is registered for k=2")
    found, line = _oracle_line("heawood oracle k=2", heawood_graph(), 2, PLAIN)
    return ClaimResult("heawood", not found, (line,))


def _claim_tournament(k: int) -> ClaimResult:
    if k != 2:
        raise BadParameters("the tournament floor instance is registered for k=2")
    t = rotational_tournament(5)
    found, line = _oracle_line("regular_tournament:5 oracle k=2", t, 2, PLAIN)
    note = "5 vertices cannot carry lengths 3 and 4 at once"
    return ClaimResult("tournament-degree", not found, (line, note))


_CLAIMS = {
    "plain-degree": (_claim_plain, (2, 3)),
    "trianglefree-degree": (_claim_trianglefree, (2, 3)),
    "even-degree": (_claim_even, (2,)),
    "large-order": (_claim_large_order, (2,)),
    "heawood": (_claim_heawood, (2,)),
    "tournament-degree": (_claim_tournament, (2,)),
}


def claim_ids() -> tuple[str, ...]:
    return tuple(sorted(_CLAIMS))


def tightness_check(claim: str, k: int = 2) -> ClaimResult:
    """Run one registered tightness claim and report pass/fail with a
    transcript of the oracle and finder runs."""
    if claim not in _CLAIMS:
        raise BadParameters(f"unknown claim {claim!r}; known: {', '.join(claim_ids())}")
    fn, supported = _CLAIMS[claim]
    if k not in supported:
        raise BadParameters(f"claim {claim!r} is registered for k in {supported}")
    return fn(k)
