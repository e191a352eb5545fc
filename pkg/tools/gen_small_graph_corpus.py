#!/usr/bin/env python3
"""Regenerate tests/data/small_graphs.jsonl from the networkx graph atlas.

Connected graphs on 3..7 vertices, one JSON object per line with the
atlas index, order, and sorted edge list.  The file is committed; rerun
only to refresh it after changing the selection rule.
"""

import json
import pathlib

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "small_graphs.jsonl"


def main() -> None:
    rows = []
    for idx, g in enumerate(nx.graph_atlas_g()):
        n = g.number_of_nodes()
        if n < 3 or n > 7:
            continue
        if not nx.is_connected(g):
            continue
        edges = sorted(tuple(sorted(e)) for e in g.edges())
        rows.append({"id": idx, "n": n, "edges": [list(e) for e in edges]})
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, separators=(",", ":")) + "\n")
    print(f"wrote {len(rows)} graphs to {OUT}")


if __name__ == "__main__":
    main()
