"""Vertex-disjoint cycle packings with pairwise distinct lengths.

Two routes produce packings and they are kept separate on purpose.  The
constructive finders follow the degree-threshold recursions: peel off a
class for the smaller problem, extract a fan of candidate cycles from the
other class, keep the lowest fresh length.  The exact oracle decides the
packing question outright on small graphs by branch and bound over length
vectors, and is the ground truth the finders are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParameters,
    DegreeTooLow,
    NotFound,
    NotTriangleFree,
    ResourceBudgetExceeded,
    SearchExhausted,
)
from .cycles import (
    ExpansionBudget,
    _BudgetHit,
    divisible_distinct_cycles,
    even_distinct_cycles,
    has_cycle_of_length,
    iter_cycles_of_length,
    maximal_path_cycles,
    residue_cycle,
)
from .graphs import Cycle, Digraph, Graph, blocks
from .partition import degree_partition, multiway_degree_partition
from .profiles import EVEN, PLAIN, Profile, divisible, residues
from . import verify

ORACLE_MAX_N = 20
DEFAULT_ORACLE_BUDGET = 10**7


def plain_degree_threshold(k: int) -> int:
    return (k * k + 5 * k - 2) // 2


def triangle_free_degree_threshold(k: int) -> int:
    return k * (k + 3) // 2


def even_degree_threshold(k: int) -> int:
    return k * k + 3 * k - 1


def divisible_degree_threshold(k: int, r: int) -> int:
    if r % 2 == 0:
        return k * (k + 1) * r - 1
    if k % 2 == 1:
        return (k * k + 2 * k - 1) * r - 1
    return k * (k + 2) * r - 1


def residue_system_degree_threshold(r: int) -> int:
    return 2 * r * r - 1


@dataclass(frozen=True)
class CyclePacking:
    """Vertex-disjoint cycles of pairwise distinct lengths.

    Cycles are sorted by length, except residue systems which are ordered
    by residue class (cycle i has length congruent to i).  finder records
    which route produced the witness.
    """

    cycles: tuple[Cycle, ...]
    profile: Profile = PLAIN
    finder: str = "constructive"

    @property
    def k(self) -> int:
        return len(self.cycles)

    def lengths(self) -> tuple[int, ...]:
        return tuple(c.length for c in self.cycles)

    def length_set(self) -> set[int]:
        return {c.length for c in self.cycles}

    def check(self, g):
        bad = verify.packing_violation(g, [c.vertices for c in self.cycles], self.profile)
        if bad:
            raise AssertionError(f"packing failed verification: {bad}")


@dataclass(frozen=True)
class OracleOutcome:
    """Found with a packing, or a completed proof of absence."""

    packing: CyclePacking | None
    explored: int
    exhaustive: bool

    @property
    def found(self) -> bool:
        return self.packing is not None


def _min_completion(count: int, lower: int, admits) -> int:
    total = 0
    length = lower
    while count:
        if admits(length):
            total += length
            count -= 1
        length += 1
    return total


def _plain_vectors(k: int, n: int, min_len: int, admits):
    """Strictly increasing admissible length vectors with sum <= n, lex order."""

    def rec(prefix, lo, left):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        length = lo
        while not admits(length):
            length += 1
        while length + _min_completion(k - len(prefix) - 1, length + 1, admits) <= left:
            yield from rec(prefix + [length], length + 1, left - length)
            length += 1
            while not admits(length):
                length += 1

    yield from rec([], min_len, n)


def _residue_vectors(r: int, n: int, min_len: int):
    """Length vectors (l_0..l_{r-1}) with l_i = i mod r, sum <= n, lex order."""
    starts = []
    for i in range(r):
        length = i if i >= min_len else i + r * ((min_len - i + r - 1) // r)
        starts.append(length)
    tail = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        tail[i] = tail[i + 1] + starts[i]

    def rec(prefix, i, left):
        if i == r:
            yield tuple(prefix)
            return
        length = starts[i]
        while length + tail[i + 1] <= left:
            yield from rec(prefix + [length], i + 1, left - length)
            length += r

    yield from rec([], 0, n)


def _realize(g, lengths, meter) -> list[tuple] | None:
    """First packing realizing the exact length vector, in canonical order."""
    chosen: list[tuple] = []

    def rec(i, allowed):
        if i == len(lengths):
            return True
        for cyc in iter_cycles_of_length(g, lengths[i], allowed, meter):
            chosen.append(cyc)
            if rec(i + 1, allowed - set(cyc)):
                return True
            chosen.pop()
        return False

    if rec(0, frozenset(range(g.n))):
        return chosen
    return None


def exact_packing_oracle(
    g, k: int, profile: Profile = PLAIN, budget: int = DEFAULT_ORACLE_BUDGET
) -> OracleOutcome:
    """Decide whether g packs k disjoint cycles fitting the profile.

    Complete at desk scale: length vectors ascend lexicographically and
    every vector is realized by canonical-order cycle search, so the first
    witness found is the canonically smallest and a miss on all vectors is
    a proof of absence.  Raises ResourceBudgetExceeded past the node budget.
    """
    if k < 1:
        raise BadParameters("k must be positive")
    if profile.kind == "residues" and profile.modulus != k:
        raise BadParameters(f"residue systems mod {profile.modulus} fix k = {profile.modulus}")
    directed = isinstance(g, Digraph)
    min_len = 2 if directed else 3
    meter = ExpansionBudget(budget)
    spectrum: dict[int, bool] = {}

    def present(length: int) -> bool:
        if length not in spectrum:
            spectrum[length] = has_cycle_of_length(g, length, None, meter)
        return spectrum[length]

    if profile.kind == "residues":
        vectors = _residue_vectors(profile.modulus, g.n, min_len)
    else:
        vectors = _plain_vectors(k, g.n, min_len, profile.admits)
    try:
        for vec in vectors:
            if any(not present(length) for length in set(vec)):
                continue
            raw = _realize(g, vec, meter)
            if raw is not None:
                packing = CyclePacking(
                    tuple(Cycle.make(c, directed) for c in raw), profile, finder="oracle"
                )
                packing.check(g)
                return OracleOutcome(packing, meter.used, True)
    except _BudgetHit:
        raise ResourceBudgetExceeded(
            f"packing oracle exceeded {budget} expansions", explored=meter.used
        ) from None
    return OracleOutcome(None, meter.used, True)


def _lowest_fresh(menu: list[Cycle], used: set[int]) -> Cycle:
    for c in sorted(menu, key=lambda x: x.length):
        if c.length not in used:
            return c
    raise AssertionError("fresh length must exist by pigeonhole")


def _recursive_packing(g: Graph, k: int, threshold, mode, second_demand, extract) -> list[Cycle]:
    """Shared peel-and-recurse skeleton for the constructive finders.

    Splits off a class guaranteeing the (k-1)-problem, extracts a k-menu
    of distinct-length cycles from the other class, and keeps the lowest
    length the recursion has not already used.
    """
    if k == 1:
        return [extract(g, 1)[0]]
    part = degree_partition(g, threshold(k - 1), second_demand(k), mode=mode)
    sub1, par1 = g.induced(part.classes[0])
    sub2, par2 = g.induced(part.classes[1])
    got = [c.translate(par1) for c in _recursive_packing(sub1, k - 1, threshold, mode, second_demand, extract)]
    menu = [c.translate(par2) for c in extract(sub2, k)]
    got.append(_lowest_fresh(menu, {c.length for c in got}))
    return got


def _finish(g, cycles: list[Cycle], profile: Profile, finder: str) -> CyclePacking:
    packing = CyclePacking(tuple(sorted(cycles, key=lambda c: c.length)), profile, finder)
    packing.check(g)
    return packing


def _oracle_or_raise(g, k, profile, budget) -> CyclePacking:
    out = exact_packing_oracle(g, k, profile, budget)
    if out.found:
        return out.packing
    raise NotFound(
        f"no {k} disjoint cycles fitting {profile} exist",
        exhaustive=out.exhaustive,
        explored=out.explored,
    )


def find_disjoint_distinct(
    g: Graph, k: int, oracle_n: int = ORACLE_MAX_N, budget: int = DEFAULT_ORACLE_BUDGET
) -> CyclePacking:
    """k disjoint cycles of distinct lengths.

    Constructive under min degree >= plain_degree_threshold(k); smaller
    degrees fall back to the exact oracle when the graph is small enough,
    otherwise DegreeTooLow.  The oracle fallback can answer NotFound.
    """
    if k < 1:
        raise BadParameters("k must be positive")
    if g.min_degree() >= plain_degree_threshold(k):
        cycles = _recursive_packing(
            g, k, plain_degree_threshold, "stiebitz",
            lambda kk: kk + 1, lambda h, kk: maximal_path_cycles(h, kk)[0],
        )
        return _finish(g, cycles, PLAIN, "constructive")
    if g.n <= oracle_n:
        return _oracle_or_raise(g, k, PLAIN, budget)
    raise DegreeTooLow(
        f"min degree {g.min_degree()} < {plain_degree_threshold(k)} and n={g.n} "
        f"is past the oracle limit {oracle_n}"
    )


def find_disjoint_distinct_trianglefree(
    g: Graph, k: int, oracle_n: int = ORACLE_MAX_N, budget: int = DEFAULT_ORACLE_BUDGET
) -> CyclePacking:
    """k disjoint distinct-length cycles in a triangle-free graph, at the
    lower triangle-free degree threshold."""
    if k < 1:
        raise BadParameters("k must be positive")
    if not g.is_triangle_free():
        raise NotTriangleFree("graph contains a triangle")
    if g.min_degree() >= triangle_free_degree_threshold(k):
        cycles = _recursive_packing(
            g, k, triangle_free_degree_threshold, "kaneko",
            lambda kk: kk + 1, lambda h, kk: maximal_path_cycles(h, kk)[0],
        )
        return _finish(g, cycles, PLAIN, "constructive")
    if g.n <= oracle_n:
        return _oracle_or_raise(g, k, PLAIN, budget)
    raise DegreeTooLow(
        f"min degree {g.min_degree()} < {triangle_free_degree_threshold(k)} and "
        f"n={g.n} is past the oracle limit {oracle_n}"
    )


def find_disjoint_even_distinct(
    g: Graph, k: int, oracle_n: int = ORACLE_MAX_N, budget: int = DEFAULT_ORACLE_BUDGET
) -> CyclePacking:
    """k disjoint cycles of distinct even lengths."""
    if k < 1:
        raise BadParameters("k must be positive")
    if g.min_degree() >= even_degree_threshold(k):
        cycles = _recursive_packing(
            g, k, even_degree_threshold, "stiebitz",
            lambda kk: 2 * kk + 1, lambda h, kk: even_distinct_cycles(h, kk)[0],
        )
        return _finish(g, cycles, EVEN, "constructive")
    if g.n <= oracle_n:
        return _oracle_or_raise(g, k, EVEN, budget)
    raise DegreeTooLow(
        f"min degree {g.min_degree()} < {even_degree_threshold(k)} and n={g.n} "
        f"is past the oracle limit {oracle_n}"
    )


def find_disjoint_divisible(
    g: Graph, k: int, r: int, oracle_n: int = ORACLE_MAX_N, budget: int = DEFAULT_ORACLE_BUDGET
) -> CyclePacking:
    """k disjoint cycles of distinct lengths all divisible by r (r >= 3)."""
    if k < 1:
        raise BadParameters("k must be positive")
    if r < 3:
        raise BadParameters("r must be at least 3")
    profile = divisible(r)
    if g.min_degree() >= divisible_degree_threshold(k, r):

        def demand(kk):
            # the extraction pads to kk+1 targets when kk is even and r odd
            if kk % 2 == 0 and r % 2 == 1:
                return 2 * (kk + 1) * r - 1
            return 2 * kk * r - 1

        cycles = _recursive_packing(
            g, k, lambda kk: divisible_degree_threshold(kk, r), "stiebitz",
            demand, lambda h, kk: divisible_distinct_cycles(h, kk, r),
        )
        return _finish(g, cycles, profile, "constructive")
    if g.n <= oracle_n:
        return _oracle_or_raise(g, k, profile, budget)
    raise DegreeTooLow(
        f"min degree {g.min_degree()} < {divisible_degree_threshold(k, r)} and "
        f"n={g.n} is past the oracle limit {oracle_n}"
    )


def find_residue_system(
    g: Graph, r: int, oracle_n: int = ORACLE_MAX_N, budget: int = DEFAULT_ORACLE_BUDGET
) -> CyclePacking:
    """r disjoint cycles, one length in each residue class mod r (odd r).

    Constructive route: split into r classes of induced min degree 2r-1
    and aim one residue target into each class.
    """
    if r < 3 or r % 2 == 0:
        raise BadParameters("residue systems need an odd modulus r >= 3")
    profile = residues(r)
    if g.min_degree() >= residue_system_degree_threshold(r):
        part = multiway_degree_partition(g, [2 * r - 1] * r)
        cycles = []
        for i, cls in enumerate(part.classes):
            sub, parent = g.induced(cls)
            res = residue_cycle(sub, i % r, r, budget)
            if not res.found:
                raise SearchExhausted(
                    f"residue {i} mod {r} not found in its class ({res.status})",
                    completed=res.status == "completed-empty",
                )
            cycles.append(res.cycle.translate(parent))
        packing = CyclePacking(tuple(cycles), profile, "constructive")
        packing.check(g)
        return packing
    if g.n <= oracle_n:
        return _oracle_or_raise(g, r, profile, budget)
    raise DegreeTooLow(
        f"min degree {g.min_degree()} < {residue_system_degree_threshold(r)} and "
        f"n={g.n} is past the oracle limit {oracle_n}"
    )


def find_two_distinct(g: Graph, budget: int = DEFAULT_ORACLE_BUDGET) -> CyclePacking:
    """Two disjoint cycles of distinct lengths, by exhaustive search.

    Equivalent to the oracle at k=2: shortest first lengths, partner in
    the residual graph.  NotFound carries the exhaustiveness flag.
    """
    return _oracle_or_raise(g, 2, PLAIN, budget)


# --- structure of graphs with only one cycle length --------------------------


@dataclass(frozen=True)
class StructureClassification:
    """Block-level shape of a graph with at most one cycle length.

    all-triangles: every block is an edge or a triangle.
    all-squares: every block is an edge or a complete bipartite K_{2,s}.
    bound is the implied lower bound on degree-2 vertices (None otherwise).
    """

    kind: str
    n2: int
    bound: float | None

    @property
    def bound_holds(self) -> bool | None:
        if self.bound is None:
            return None
        return self.n2 >= self.bound


def _is_edge_block(b) -> bool:
    return len(b.vertices) == 2


def _is_triangle_block(b) -> bool:
    return len(b.vertices) == 3 and len(b.edges) == 3


def _is_k2s_block(b) -> bool:
    # bipartition by BFS over the block's own edges, then a complete check
    adj: dict[int, list[int]] = {v: [] for v in b.vertices}
    for u, v in b.edges:
        adj[u].append(v)
        adj[v].append(u)
    start = min(b.vertices)
    color = {start: 0}
    queue = [start]
    while queue:
        u = queue.pop()
        for w in adj[u]:
            if w not in color:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return False
    sides = [sum(1 for c in color.values() if c == 0), sum(1 for c in color.values() if c == 1)]
    return min(sides) == 2 and max(sides) >= 2 and len(b.edges) == sides[0] * sides[1]


def uniform_cycle_structure(g: Graph) -> StructureClassification:
    """Classify a graph whose cycles all share one length, via its blocks.

    Graphs without any cycle, or with a block of any other shape, come
    back as other-or-mixed.
    """
    bl = blocks(g)
    n2 = g.degree_count(2)
    cyclic = [b for b in bl if len(b.vertices) >= 3]
    if cyclic:
        if all(_is_edge_block(b) or _is_triangle_block(b) for b in bl):
            return StructureClassification("all-triangles", n2, g.n / 3 + 2)
        if all(_is_edge_block(b) or _is_k2s_block(b) for b in bl):
            return StructureClassification("all-squares", n2, g.n / 5 + 2)
    return StructureClassification("other-or-mixed", n2, None)
