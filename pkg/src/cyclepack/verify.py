"""Independent re-validation of every witness the finders emit.

Deliberately imports nothing but the graph core and the profile type, so a
certificate check never shares code with the search that produced the
certificate.  Each function returns None for a valid witness and a short
description of the first violated invariant otherwise.
"""

from __future__ import annotations

from .graphs import Digraph, cycle_violation
from .profiles import Profile


def packing_violation(g, cycles, profile: Profile, directed: bool | None = None) -> str | None:
    """Check a list of vertex sequences as a disjoint distinct-length packing."""
    if directed is None:
        directed = isinstance(g, Digraph)
    seqs = [tuple(c) for c in cycles]
    for i, seq in enumerate(seqs):
        bad = cycle_violation(g, seq, directed)
        if bad:
            return f"cycle {i}: {bad}"
    used: set[int] = set()
    for i, seq in enumerate(seqs):
        overlap = used.intersection(seq)
        if overlap:
            return f"cycle {i} reuses vertex {min(overlap)}"
        used.update(seq)
    lengths = [len(s) for s in seqs]
    if len(set(lengths)) != len(lengths):
        return f"duplicate cycle length in {sorted(lengths)}"
    if profile.kind == "residues":
        r = profile.modulus
        if len(seqs) != r:
            return f"residue system mod {r} needs exactly {r} cycles, got {len(seqs)}"
        for i, seq in enumerate(seqs):
            if len(seq) % r != i:
                return f"cycle {i} has length {len(seq)} != {i} mod {r}"
    else:
        for i, ln in enumerate(lengths):
            if not profile.admits(ln):
                return f"cycle {i} length {ln} violates profile {profile}"
    return None


def partition_violation(g, classes, guarantees, cross: bool = False) -> str | None:
    """Check a vertex partition against per-class degree guarantees.

    Default mode: every vertex of class i has >= guarantees[i] neighbors
    inside its own class.  cross=True flips the requirement to neighbors
    outside the class (the max-cut guarantee); it only makes sense for a
    bipartition.  For digraphs the induced requirement is on out-degree.
    """
    classes = [tuple(c) for c in classes]
    if len(classes) != len(guarantees):
        return "class/guarantee count mismatch"
    if cross and len(classes) != 2:
        return "cross mode needs exactly two classes"
    seen: set[int] = set()
    for i, cls in enumerate(classes):
        if not cls:
            return f"class {i} is empty"
        dup = seen.intersection(cls)
        if dup:
            return f"vertex {min(dup)} in two classes"
        seen.update(cls)
    if seen != set(range(g.n)):
        missing = min(set(range(g.n)) - seen)
        return f"vertex {missing} in no class"
    directed = isinstance(g, Digraph)
    members = [set(c) for c in classes]
    for i, cls in enumerate(classes):
        need = guarantees[i]
        for v in cls:
            nbrs = g.out(v) if directed else g.neighbors(v)
            inside = sum(1 for w in nbrs if w in members[i])
            have = len(nbrs) - inside if cross else inside
            if have < need:
                where = "across the cut" if cross else f"inside class {i}"
                return f"vertex {v} has {have} < {need} neighbors {where}"
    return None


def schema_violation(g, path, apex: int, k: int) -> str | None:
    """Check a (path, apex) pair as a k-fan witness.

    The apex must avoid the path, the path must exist edge by edge, and
    the apex must have exactly k+1 neighbors among the path vertices.
    """
    p = tuple(path)
    if k < 1:
        return "k must be positive"
    if not (0 <= apex < g.n):
        return f"apex {apex} out of range"
    if len(set(p)) != len(p):
        return "path repeats a vertex"
    if apex in p:
        return "apex lies on the path"
    for v in p:
        if not (0 <= v < g.n):
            return f"path vertex {v} out of range"
    for u, v in zip(p, p[1:]):
        if not g.has_edge(u, v):
            return f"missing path edge ({u},{v})"
    hits = sum(1 for v in p if g.has_edge(apex, v))
    if hits != k + 1:
        return f"apex has {hits} path neighbors, needs exactly {k + 1}"
    if len(p) + 1 < k + 2:
        return f"cardinality {len(p) + 1} below minimum {k + 2}"
    return None
