"""Directed-side algorithms: tournaments and random-coloring finders.

The tournament half is fully deterministic: Hamiltonian cycles by the
classic insertion argument, long cycles through the dominated strong
component, shortening by unit shortcuts, and the disjoint-distinct
recursion built on those.  The second half covers regular and dense
digraphs with Las-Vegas coloring finders whose acceptance condition is
re-checked independently, plus a numeric report that evaluates every
inequality the guarantees rest on.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .cycles import ExpansionBudget, iter_cycles_of_length
from .errors import (
    BadLength,
    BadParameters,
    DegreeTooLow,
    NotRegular,
    NotStrong,
    RetriesExhausted,
    TooSmall,
)
from .graphs import Cycle, Digraph, cycle_violation, strong_components
from .packing import CyclePacking
from .profiles import PLAIN

RELATIVE_SLACK = 1e-12
SHORTEN_BUDGET = 10**7


def tournament_degree_threshold(k: int) -> int:
    # ceil((k^2 + 4k - 3) / 2)
    return (k * k + 4 * k - 2) // 2


class Tournament(Digraph):
    """Digraph with exactly one arc per unordered vertex pair."""

    __slots__ = ()

    def __init__(self, n: int, arcs):
        super().__init__(n, arcs)
        for u in range(n):
            for v in range(u + 1, n):
                fwd = self.has_arc(u, v)
                bwd = self.has_arc(v, u)
                if fwd and bwd:
                    raise BadParameters(f"digon between {u} and {v} in a tournament")
                if not (fwd or bwd):
                    raise BadParameters(f"missing arc between {u} and {v}")

    def induced(self, vertices) -> tuple["Tournament", tuple[int, ...]]:
        sub, parent = Digraph.induced(self, vertices)
        return Tournament(sub.n, sub.arcs()), parent


def _some_triangle(t: Tournament) -> list[int]:
    for u in range(t.n):
        for w in t.out(u):
            for x in t.out(w):
                if t.has_arc(x, u):
                    return [u, w, x]
    raise AssertionError("a strong tournament on >= 3 vertices has a 3-cycle")


def camion_hamiltonian(t: Tournament) -> Cycle:
    """Hamiltonian cycle of a strong tournament, by incremental insertion.

    Start from a 3-cycle and insert outside vertices one at a time.  When
    no single vertex fits between consecutive cycle vertices, the outside
    splits into dominators and dominated, and strongness supplies an arc
    from the dominated side to a dominator; inserting that pair restores
    progress.
    """
    if t.n < 3:
        raise TooSmall(f"no Hamiltonian cycle on {t.n} < 3 vertices")
    if len(strong_components(t)) != 1:
        raise NotStrong("tournament is not strongly connected")
    cycle = _some_triangle(t)
    outside = [v for v in range(t.n) if v not in cycle]
    while outside:
        inserted = None
        for v in outside:
            size = len(cycle)
            for i in range(size):
                if t.has_arc(cycle[i], v) and t.has_arc(v, cycle[(i + 1) % size]):
                    cycle.insert(i + 1, v)
                    inserted = v
                    break
            if inserted is not None:
                break
        if inserted is not None:
            outside.remove(inserted)
            continue
        # every outside vertex beats the whole cycle or loses to it
        dominators = [v for v in outside if all(t.has_arc(v, c) for c in cycle)]
        dominated = [v for v in outside if v not in dominators]
        pair = None
        for b in dominated:
            for a in dominators:
                if t.has_arc(b, a):
                    pair = (b, a)
                    break
            if pair:
                break
        if pair is None:
            raise AssertionError("strong tournament must link dominated side to a dominator")
        b, a = pair
        cycle[1:1] = [b, a]
        outside.remove(b)
        outside.remove(a)
    return Cycle.make(tuple(cycle), directed=True)


def tournament_long_cycle(t: Tournament) -> Cycle:
    """Directed cycle of length at least 2 * min-out-degree + 1.

    A strong tournament is Hamiltonian and already big enough; otherwise
    the dominated strong component keeps the full minimum out-degree and
    the recursion lands there.
    """
    if t.min_out_degree() < 1:
        raise DegreeTooLow("some vertex has out-degree 0")
    comps = strong_components(t)
    if len(comps) == 1:
        return camion_hamiltonian(t)
    sub, parent = t.induced(comps[-1])
    return tournament_long_cycle(sub).translate(parent)


def tournament_cycle_shorten(t: Tournament, c: Cycle, target: int) -> Cycle:
    """Directed cycle of exactly the target length within the vertices of c.

    Unit shortcuts (an arc skipping the next cycle vertex) shrink one
    vertex at a time; when none exists the subtournament on the remaining
    vertices is searched exhaustively, which must succeed because it is
    strong.
    """
    bad = cycle_violation(t, c.vertices, directed=True)
    if bad:
        raise BadParameters(f"not a directed cycle of this tournament: {bad}")
    if target < 3 or target > c.length:
        raise BadLength(f"target {target} outside [3, {c.length}]")
    verts = list(c.vertices)
    while len(verts) > target:
        size = len(verts)
        cut = None
        for i in range(size):
            if t.has_arc(verts[i], verts[(i + 2) % size]):
                cut = (i + 1) % size
                break
        if cut is not None:
            verts.pop(cut)
            continue
        sub, parent = t.induced(verts)
        for found in iter_cycles_of_length(sub, target, None, ExpansionBudget(SHORTEN_BUDGET)):
            return Cycle.make(found, directed=True).translate(parent)
        raise AssertionError("strong subtournament carries every cycle length")
    return Cycle.make(tuple(verts), directed=True)


def tournament_disjoint_distinct(t: Tournament, k: int) -> CyclePacking:
    """k disjoint directed cycles of distinct lengths in a tournament.

    Induction on k: take k-1 such cycles, shorten the i-th shortest to
    length i+2, and close with a long cycle of the residual tournament,
    whose min out-degree stays >= (k+1)/2 after the removals.
    """
    if k < 1:
        raise BadParameters("k must be positive")
    need = tournament_degree_threshold(k)
    if t.min_out_degree() < need:
        raise DegreeTooLow(f"min out-degree {t.min_out_degree()} < {need} for k={k}")
    if k == 1:
        packing = CyclePacking((tournament_long_cycle(t),), PLAIN, "constructive")
        packing.check(t)
        return packing
    inner = tournament_disjoint_distinct(t, k - 1).cycles
    shortened = [
        tournament_cycle_shorten(t, cyc, i + 2) for i, cyc in enumerate(inner, start=1)
    ]
    used = set()
    for cyc in shortened:
        used.update(cyc.vertices)
    sub, parent = t.induced(v for v in range(t.n) if v not in used)
    final = tournament_long_cycle(sub).translate(parent)
    ordered = sorted(shortened + [final], key=lambda cc: cc.length)
    packing = CyclePacking(tuple(ordered), PLAIN, "constructive")
    packing.check(t)
    return packing


def dipath_distinct_cycles(d: Digraph, k: int) -> list[Cycle]:
    """k directed cycles of distinct lengths through one endpoint.

    The endpoint of a greedily grown maximal directed path has all its
    out-neighbors on the path; each such arc closes a cycle, and distinct
    re-entry points give distinct lengths.  Digons count (length 2).
    Returns the k longest, ascending.
    """
    if k < 1:
        raise BadParameters("k must be positive")
    if d.min_out_degree() < k:
        raise DegreeTooLow(f"min out-degree {d.min_out_degree()} < {k}")
    path = [0]
    on_path = {0}
    while True:
        step = None
        for w in d.out(path[-1]):
            if w not in on_path:
                step = w
                break
        if step is None:
            break
        path.append(step)
        on_path.add(step)
    tip = path[-1]
    assert all(w in on_path for w in d.out(tip))
    position = {v: i for i, v in enumerate(path)}
    starts = sorted(position[w] for w in d.out(tip))[:k]
    return [Cycle.make(tuple(path[i:]), directed=True) for i in reversed(starts)]


# --- Las-Vegas partition finders ---------------------------------------------


def regular_degree_requirement(k: int) -> float:
    """Regular degree at which the random coloring guarantee kicks in."""
    if k < 2:
        raise BadParameters("the guarantee is stated for k >= 2")
    return (k * k / 2) * (1 + 7 * (math.log(k) / k) ** (1 / 3))


@dataclass(frozen=True)
class ProbabilisticBudget:
    """Parameters of the random-coloring arguments plus derived constants.

    k target cycles, r the (out-)degree, n the order (0 when unused), and
    optionally the order-growth constants c > 1, 0 < d < 1.  Derived
    quantities follow the displayed formulas: shift = floor(k^(2/3)
    (ln k)^(1/3)), span = k + shift, normalizer = span(span+1)/2, and the
    class probabilities p_j = (j + shift) / normalizer, which sum to less
    than 1 so a vertex may stay uncolored.
    """

    k: int
    r: int
    n: int = 0
    c: float | None = None
    d: float | None = None
    retries: int = 1000

    def __post_init__(self):
        if self.k < 2:
            raise BadParameters("budgets need k >= 2")
        if self.r < 1 or self.n < 0 or self.retries < 1:
            raise BadParameters("r, n, and retries must be positive")
        if (self.c is None) != (self.d is None):
            raise BadParameters("c and d come together or not at all")
        if self.c is not None and not (self.c > 1 and 0 < self.d < 1):
            raise BadParameters("need c > 1 and 0 < d < 1")

    @property
    def shift(self) -> int:
        return math.floor(self.k ** (2 / 3) * math.log(self.k) ** (1 / 3))

    @property
    def span(self) -> int:
        return self.k + self.shift

    @property
    def normalizer(self) -> int:
        return self.span * (self.span + 1) // 2

    def probability(self, j: int) -> float:
        if not 1 <= j <= self.k:
            raise BadParameters(f"class index {j} outside 1..{self.k}")
        return (j + self.shift) / self.normalizer

    def probabilities(self) -> tuple[float, ...]:
        return tuple(self.probability(j) for j in range(1, self.k + 1))

    @property
    def color_mass(self) -> float:
        # sum of p_j in closed form
        return (self.k * (self.k + 1) // 2 + self.k * self.shift) / self.normalizer

    @property
    def degree_requirement(self) -> float:
        return regular_degree_requirement(self.k)


@dataclass(frozen=True)
class Inequality:
    """One numeric verdict: value versus bound, with relative slack."""

    name: str
    value: float
    bound: float
    sense: str  # "le" or "ge"; strict variants share the slack policy

    @property
    def ok(self) -> bool:
        if self.sense == "le":
            return self.value <= self.bound * (1 + RELATIVE_SLACK)
        return self.value >= self.bound * (1 - RELATIVE_SLACK)


_REGULAR_VERDICTS = (
    "degree-requirement",
    "color-mass",
    "chernoff-precondition",
    "lll-colors",
    "lll-degrees",
    "lll-degrees-term",
)


@dataclass(frozen=True)
class BoundsReport:
    budget: ProbabilisticBudget
    inequalities: tuple[Inequality, ...]
    c0: float | None
    required_r: float | None

    def inequality(self, name: str) -> Inequality:
        for ineq in self.inequalities:
            if ineq.name == name:
                return ineq
        raise KeyError(name)

    @property
    def regular_ok(self) -> bool:
        """All verdicts of the regular-digraph argument."""
        return all(self.inequality(name).ok for name in _REGULAR_VERDICTS)

    @property
    def all_ok(self) -> bool:
        return all(ineq.ok for ineq in self.inequalities)

    def chernoff_tail(self, j: int) -> float:
        """Per-class tail bound on too few out-neighbors landing in class j."""
        b = self.budget
        t = (math.log(b.k) / b.k) ** (1 / 3)
        return math.exp(-16 * t * t * b.r * b.probability(j) / 3)


def _weighted_exp_sum(k: int, shift: int, eps: float) -> float:
    """sum over j=1..k of (j + shift) * exp(-eps * (j + shift)), eps > 0.

    Closed form via geometric sums; expm1 keeps 1-x stable for small eps.
    """
    x = math.exp(-eps)
    one_minus = -math.expm1(-eps)
    xk = math.exp(-eps * k)
    geo = x * (1 - xk) / one_minus
    lin = x * (1 - (k + 1) * xk + k * xk * x) / (one_minus * one_minus)
    return math.exp(-eps * shift) * (lin + shift * geo)


def probabilistic_bounds_report(budget: ProbabilisticBudget) -> BoundsReport:
    """Evaluate every inequality behind the two coloring guarantees.

    Verdicts use double precision with a relative slack of 1e-12 so a
    far-from-tight inequality cannot flip on rounding.  Entries that need
    the order n, or the growth constants c and d, appear only when those
    are supplied.
    """
    k, r, n = budget.k, budget.r, budget.n
    t = (math.log(k) / k) ** (1 / 3)
    shift = budget.shift
    s = budget.normalizer
    p_low = (shift + 1) / s

    # colors-missing event: k classes, each absent from r fixed vertices
    pr_missing = k * (1 - p_low) ** r
    # degree event: colored j with fewer than j out-neighbors in class j
    eps = 16 * t * t * r / (3 * s)
    pr_degree = _weighted_exp_sum(k, shift, eps) / s
    term_cap = 1 / (4 * r * r * k)

    def term(j: int) -> float:
        p = (j + shift) / s
        return p * math.exp(-16 * t * t * r * p / 3)

    # p * exp(-a p) peaks at p = 1/a; check both ends and the peak
    peak = s / (16 * t * t * r / 3) - shift
    candidates = {1, k, math.floor(peak), math.ceil(peak)}
    worst_term = max(term(j) for j in candidates if 1 <= j <= k)

    entries = [
        Inequality("degree-requirement", r, budget.degree_requirement, "ge"),
        Inequality("color-mass", budget.color_mass, 1.0, "le"),
        Inequality("chernoff-precondition", (1 - 4 * t) * r, s, "ge"),
        Inequality("lll-colors", 4 * r * r * pr_missing, 1.0, "le"),
        Inequality("lll-degrees", 4 * r * r * pr_degree, 1.0, "le"),
        Inequality("lll-degrees-term", worst_term, term_cap, "le"),
        Inequality("out-degree-floor", r, 2 * k * k, "ge"),
        Inequality("color-presence", r, k * math.log(2 * k), "ge"),
    ]
    if n >= 1:
        union = n * math.exp(-r / (12 * k)) + k * math.exp(-r / k)
        entries.append(Inequality("union-bound", union, 1.0, "le"))
    c0 = required_r = None
    if budget.c is not None:
        c, d = budget.c, budget.d
        entries.append(
            Inequality("order-threshold", r, (24 * k * math.log(c)) ** (1 / (1 - d)), "ge")
        )
        c0 = max(2.0, (24 * math.log(c)) ** (1 / (1 - d)))
        required_r = c0 * max(k ** (1 / (1 - d)), k * k)
        entries.append(Inequality("small-order-requirement", r, required_r, "ge"))
        if n >= 1:
            try:
                limit = c ** (r**d)
            except OverflowError:
                limit = math.inf
            entries.append(Inequality("order-limit", n, limit, "le"))
    return BoundsReport(budget, tuple(entries), c0, required_r)


def regular_guarantee_onset(limit: int = 10**6, start: int = 2) -> int | None:
    """Smallest k whose regular-argument verdicts all pass at the stated
    degree, or None below the limit.  The sweep is O(1) per k."""
    for k in range(start, limit + 1):
        b = ProbabilisticBudget(k, math.ceil((k * k / 2) * (1 + 7 * (math.log(k) / k) ** (1 / 3))))
        if probabilistic_bounds_report(b).regular_ok:
            return k
    return None


def _induced_out_degree(d: Digraph, v: int, members: frozenset) -> int:
    return len(d.out_set(v) & members)


def _extract_distinct(d: Digraph, classes: list[list[int]], demands: list[int]):
    """One fresh-length cycle per class, largest class first, or None.

    Class i's menu has demands[i] distinct lengths; picking the largest
    unused can still collide for small menus, in which case the caller
    resamples.
    """
    order = sorted(range(len(classes)), key=lambda i: -demands[i])
    used: set[int] = set()
    chosen = []
    for i in order:
        sub, parent = d.induced(classes[i])
        menu = dipath_distinct_cycles(sub, demands[i])
        pick = None
        for cyc in reversed(menu):
            if cyc.length not in used:
                pick = cyc
                break
        if pick is None:
            return None, f"class {i + 1} offers no fresh length from {sorted(c.length for c in menu)}"
        used.add(pick.length)
        chosen.append(pick.translate(parent))
    return chosen, None


def regular_partition_finder(
    d: Digraph, k: int, seed: int = 0, retries: int = 1000, force: bool = False
) -> CyclePacking:
    """k disjoint distinct-length directed cycles in a regular digraph.

    Las-Vegas: color vertices with class probabilities p_j (some stay
    uncolored), accept when class j induces min out-degree >= j for every
    j, then pull one fresh length per class.  Every accepted coloring is
    re-validated by an independent degree recount, so a returned packing
    is correct regardless of how lucky the sampling was.
    """
    if k < 2:
        raise BadParameters("k must be at least 2")
    r = d.regular_degree()
    if r is None:
        raise NotRegular("in- and out-degrees are not all equal")
    budget = ProbabilisticBudget(k, r, d.n, retries=retries)
    if r < budget.degree_requirement and not force:
        raise DegreeTooLow(
            f"degree {r} below the guarantee {budget.degree_requirement:.2f} "
            f"for k={k}; pass force=True to attempt anyway"
        )
    probs = budget.probabilities()
    rng = random.Random(seed)
    failures: list[str] = []
    for attempt in range(retries):
        classes: list[list[int]] = [[] for _ in range(k)]
        for v in range(d.n):
            u = rng.random()
            acc = 0.0
            for j, p in enumerate(probs):
                acc += p
                if u < acc:
                    classes[j].append(v)
                    break
            # else uncolored: v joins no class
        reason = None
        for j in range(k):
            members = frozenset(classes[j])
            if not members:
                reason = f"attempt {attempt}: class {j + 1} is empty"
                break
            for v in classes[j]:
                have = sum(1 for w in d.out(v) if w in members)
                if have < j + 1:
                    reason = (
                        f"attempt {attempt}: vertex {v} has {have} out-neighbours "
                        f"in class {j + 1}, needs {j + 1}"
                    )
                    break
            if reason:
                break
        if reason:
            failures.append(reason)
            continue
        # independent recount before extraction
        for j in range(k):
            members = frozenset(classes[j])
            assert min(_induced_out_degree(d, v, members) for v in classes[j]) >= j + 1
        chosen, why = _extract_distinct(d, classes, list(range(1, k + 1)))
        if chosen is None:
            failures.append(f"attempt {attempt}: {why}")
            continue
        packing = CyclePacking(
            tuple(sorted(chosen, key=lambda cc: cc.length)), PLAIN, "probabilistic"
        )
        packing.check(d)
        return packing
    raise RetriesExhausted(
        f"no acceptable coloring within {retries} attempts", failures=failures
    )


def uniform_partition_finder(
    d: Digraph, k: int, seed: int = 0, retries: int = 1000
) -> CyclePacking:
    """k disjoint distinct-length cycles via uniform coloring.

    Needs min out-degree >= 2k^2.  Accept when every color is used and
    every vertex keeps at least k same-color out-neighbors; each class
    then has a k-length menu, so the fresh-length pick cannot run dry.
    """
    if k < 1:
        raise BadParameters("k must be positive")
    if d.min_out_degree() < 2 * k * k:
        raise DegreeTooLow(f"min out-degree {d.min_out_degree()} < {2 * k * k}")
    rng = random.Random(seed)
    failures: list[str] = []
    for attempt in range(retries):
        color = [rng.randrange(k) for _ in range(d.n)]
        classes: list[list[int]] = [[] for _ in range(k)]
        for v, j in enumerate(color):
            classes[j].append(v)
        reason = None
        for j in range(k):
            if not classes[j]:
                reason = f"attempt {attempt}: color {j + 1} unused"
                break
        if reason is None:
            sets = [frozenset(cl) for cl in classes]
            for v in range(d.n):
                have = sum(1 for w in d.out(v) if w in sets[color[v]])
                if have < k:
                    reason = (
                        f"attempt {attempt}: vertex {v} keeps {have} same-color "
                        f"out-neighbours, needs {k}"
                    )
                    break
        if reason:
            failures.append(reason)
            continue
        for j in range(k):
            members = frozenset(classes[j])
            assert min(_induced_out_degree(d, v, members) for v in classes[j]) >= k
        chosen, why = _extract_distinct(d, classes, [k] * k)
        if chosen is None:
            failures.append(f"attempt {attempt}: {why}")
            continue
        packing = CyclePacking(
            tuple(sorted(chosen, key=lambda cc: cc.length)), PLAIN, "probabilistic"
        )
        packing.check(d)
        return packing
    raise RetriesExhausted(
        f"no acceptable coloring within {retries} attempts", failures=failures
    )
