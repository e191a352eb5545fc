"""Certificate documents: build, serialize, and independently re-check.

A certificate binds a result to a graph by content hash.  Checking one
uses only the graph primitives and the neutral validators, never the
finder code, so a certificate that passes here is evidence independent
of whatever produced it.
"""

from __future__ import annotations

import json

from .errors import CyclePackError, InvalidCertificate
from .graphs import Digraph, graph_sha256
from .profiles import Profile
from . import verify

FORMAT = "cyclepack/certificate-v1"


def packing_certificate(g, packing) -> dict:
    """Certificate for a found packing (anything with cycles/profile/finder)."""
    return {
        "format": FORMAT,
        "graph_hash": graph_sha256(g),
        "directed": isinstance(g, Digraph),
        "profile": packing.profile.encode(),
        "k": len(packing.cycles),
        "status": "found",
        "finder": packing.finder,
        "cycles": [list(c.vertices) for c in packing.cycles],
        "lengths": [c.length for c in packing.cycles],
    }


def absence_certificate(g, k: int, profile: Profile, explored: int, exhaustive: bool) -> dict:
    return {
        "format": FORMAT,
        "graph_hash": graph_sha256(g),
        "directed": isinstance(g, Digraph),
        "profile": profile.encode(),
        "k": k,
        "status": "absent",
        "explored": explored,
        "exhaustive": exhaustive,
    }


def to_json(cert: dict) -> str:
    return json.dumps(cert, indent=2, sort_keys=True) + "\n"


def parse_certificate(text: str) -> dict:
    try:
        cert = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidCertificate(f"not valid JSON: {e}") from None
    if not isinstance(cert, dict):
        raise InvalidCertificate("certificate must be a JSON object")
    if cert.get("format") != FORMAT:
        raise InvalidCertificate(f"unknown certificate format {cert.get('format')!r}")
    return cert


def _require(cert: dict, field: str, kinds) -> object:
    if field not in cert:
        raise InvalidCertificate(f"missing field {field!r}")
    value = cert[field]
    if not isinstance(value, kinds):
        raise InvalidCertificate(f"field {field!r} has the wrong type")
    return value


def check_certificate(cert: dict, g) -> None:
    """Raise InvalidCertificate naming the first violated invariant."""
    stated_hash = _require(cert, "graph_hash", str)
    actual = graph_sha256(g)
    if stated_hash != actual:
        raise InvalidCertificate(
            f"graph hash mismatch: certificate {stated_hash[:12]}…, file {actual[:12]}…"
        )
    directed = bool(_require(cert, "directed", bool))
    if directed != isinstance(g, Digraph):
        raise InvalidCertificate("certificate directedness disagrees with the graph")
    try:
        profile = Profile.decode(str(_require(cert, "profile", str)))
    except CyclePackError as e:
        raise InvalidCertificate(f"bad profile field: {e}") from None
    k = _require(cert, "k", int)
    status = _require(cert, "status", str)
    if status == "absent":
        explored = _require(cert, "explored", int)
        if explored < 0:
            raise InvalidCertificate("explored count must be nonnegative")
        _require(cert, "exhaustive", bool)
        if cert.get("cycles"):
            raise InvalidCertificate("absence certificate carries cycles")
        return
    if status != "found":
        raise InvalidCertificate(f"unknown status {status!r}")
    cycles = _require(cert, "cycles", list)
    if len(cycles) != k:
        raise InvalidCertificate(f"k={k} but {len(cycles)} cycles listed")
    vertex_lists = []
    for c in cycles:
        if not isinstance(c, list) or not all(isinstance(v, int) for v in c):
            raise InvalidCertificate("cycles must be lists of integers")
        vertex_lists.append(tuple(c))
    stated_lengths = cert.get("lengths")
    if stated_lengths is not None and list(stated_lengths) != [len(c) for c in vertex_lists]:
        raise InvalidCertificate("stated lengths disagree with the cycles")
    bad = verify.packing_violation(g, vertex_lists, profile)
    if bad:
        raise InvalidCertificate(bad)
