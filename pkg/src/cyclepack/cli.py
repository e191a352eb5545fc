"""Command-line front end.

Exit codes: 0 success or Found or Pass; 1 for a definite negative answer
(proved absence, failed claim, invalid certificate); 2 usage or input
errors; 3 unmet preconditions; 4 exhausted budgets.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import certificates, extremal
from .dicycles import (
    ProbabilisticBudget,
    Tournament,
    camion_hamiltonian,
    dipath_distinct_cycles,
    probabilistic_bounds_report,
    regular_degree_requirement,
    regular_partition_finder,
    tournament_disjoint_distinct,
    tournament_long_cycle,
    uniform_partition_finder,
)
from .errors import BadParameters, CyclePackError, GraphFormatError, NotFound
from .graphs import Digraph, format_edgelist, parse_edgelist
from .packing import (
    CyclePacking,
    exact_packing_oracle,
    find_disjoint_distinct,
    find_disjoint_distinct_trianglefree,
    find_disjoint_divisible,
    find_disjoint_even_distinct,
    find_residue_system,
)
from .partition import MODES, degree_partition, multiway_degree_partition
from .profiles import PLAIN, Profile
from .schema import optimize_schema


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh.read())


def _load_tournament(path: str) -> Tournament:
    d = _load(path)
    if not isinstance(d, Digraph):
        raise BadParameters("tournament commands need a directed edge list (D header)")
    return Tournament(d.n, d.arcs())


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _print_packing(g, packing) -> None:
    _emit(certificates.to_json(certificates.packing_certificate(g, packing)))


def _cmd_gen(args) -> int:
    g = extremal.gen(args.family)
    text = format_edgelist(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        _emit(text)
    return 0


def _decode_profile(text: str) -> Profile:
    return Profile.decode(text)


def _cmd_find(args) -> int:
    g = _load(args.file)
    profile = _decode_profile(args.profile)
    if profile.kind == "residues":
        if args.k is not None and args.k != profile.modulus:
            raise BadParameters(f"residue systems mod {profile.modulus} fix k; drop --k or use {profile.modulus}")
        k = profile.modulus
    else:
        if args.k is None:
            raise BadParameters("--k is required for this profile")
        k = args.k
    try:
        if profile.kind == "residues":
            packing = find_residue_system(g, profile.modulus)
        elif profile.kind == "divisible":
            packing = find_disjoint_divisible(g, k, profile.modulus)
        elif profile.kind == "even":
            packing = find_disjoint_even_distinct(g, k)
        elif args.triangle_free:
            packing = find_disjoint_distinct_trianglefree(g, k)
        else:
            packing = find_disjoint_distinct(g, k)
    except NotFound as e:
        _emit(certificates.to_json(
            certificates.absence_certificate(g, k, profile, e.explored, e.exhaustive)
        ))
        return 1
    _print_packing(g, packing)
    return 0


def _cmd_oracle(args) -> int:
    g = _load(args.file)
    profile = _decode_profile(args.profile)
    out = exact_packing_oracle(g, args.k, profile)
    if out.found:
        _print_packing(g, out.packing)
        return 0
    _emit(certificates.to_json(
        certificates.absence_certificate(g, args.k, profile, out.explored, out.exhaustive)
    ))
    return 1


def _cmd_partition(args) -> int:
    g = _load(args.file)
    demands = [int(x) for x in args.demands.split(",") if x != ""]
    if len(demands) < 2:
        raise BadParameters("need at least two comma-separated demands")
    if len(demands) == 2:
        part = degree_partition(g, demands[0], demands[1], mode=args.mode, seed=args.seed)
    else:
        mode = "stiebitz" if args.mode == "auto" else args.mode
        part = multiway_degree_partition(g, demands, mode=mode, seed=args.seed)
    _emit(json.dumps(part.as_dict(), indent=2) + "\n")
    return 0


def _cmd_schema(args) -> int:
    g = _load(args.file)
    schema = optimize_schema(g, args.k, exact_threshold=args.exact_threshold)
    _emit(json.dumps(
        {
            "path": list(schema.path),
            "apex": schema.apex,
            "k": schema.k,
            "cardinality": schema.cardinality,
            "certified_optimal": schema.certified_optimal,
        },
        indent=2,
    ) + "\n")
    return 0


def _cmd_tournament(args) -> int:
    t = _load_tournament(args.file)
    if args.cmd == "hamiltonian":
        cycle = camion_hamiltonian(t)
        packing = CyclePacking((cycle,), PLAIN, "constructive")
    elif args.cmd == "longcycle":
        cycle = tournament_long_cycle(t)
        packing = CyclePacking((cycle,), PLAIN, "constructive")
    else:
        if args.k is None:
            raise BadParameters("--k is required for distinct")
        packing = tournament_disjoint_distinct(t, args.k)
    _print_packing(t, packing)
    return 0


def _cmd_digraph(args) -> int:
    d = _load(args.file)
    if not isinstance(d, Digraph):
        raise BadParameters("digraph commands need a directed edge list (D header)")
    if args.cmd == "maxpath":
        cycles = dipath_distinct_cycles(d, args.k)
        _emit(json.dumps(
            {
                "cycles": [list(c.vertices) for c in cycles],
                "lengths": [c.length for c in cycles],
            },
            indent=2,
        ) + "\n")
        return 0
    if args.cmd == "regular-find":
        packing = regular_partition_finder(
            d, args.k, seed=args.seed, retries=args.retries, force=args.force
        )
    else:
        packing = uniform_partition_finder(d, args.k, seed=args.seed, retries=args.retries)
    _print_packing(d, packing)
    return 0


def _cmd_bounds(args) -> int:
    k = args.k
    r = args.r if args.r is not None else math.ceil(regular_degree_requirement(k))
    budget = ProbabilisticBudget(k, r, args.n, c=args.c, d=args.d)
    report = probabilistic_bounds_report(budget)
    doc = {
        "k": k,
        "r": r,
        "n": args.n,
        "shift": budget.shift,
        "span": budget.span,
        "normalizer": budget.normalizer,
        "degree_requirement": budget.degree_requirement,
        "color_mass": budget.color_mass,
        "probabilities": list(budget.probabilities()) if k <= 1000 else None,
        "c0": report.c0,
        "required_r": report.required_r,
        "inequalities": [
            {
                "name": q.name,
                "value": q.value,
                "bound": q.bound,
                "sense": q.sense,
                "ok": q.ok,
            }
            for q in report.inequalities
        ],
    }
    _emit(json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_verify(args) -> int:
    with open(args.cert, encoding="utf-8") as fh:
        cert = certificates.parse_certificate(fh.read())
    g = _load(args.file)
    certificates.check_certificate(cert, g)
    _emit(f"certificate ok ({cert.get('status')}, profile {cert.get('profile')})")
    return 0


def _cmd_tightness(args) -> int:
    result = extremal.tightness_check(args.claim, k=args.k)
    for line in result.transcript:
        _emit(line)
    _emit(f"{result.claim}: {'pass' if result.passed else 'FAIL'}")
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclepack",
        description="disjoint distinct-length cycle toolkit: finders, exact oracle, certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family instance as an edge list")
    p.add_argument("family", help="e.g. complete:7, heawood, random_cubic:16,0")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("find", help="run the matching packing finder")
    p.add_argument("--profile", default="plain", help="plain | even | div:R | residues:R")
    p.add_argument("--k", type=int)
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_find)

    p = sub.add_parser("oracle", help="exact packing decision")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--profile", default="plain")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("partition", help="degree-constrained vertex partition")
    p.add_argument("--demands", required=True, help="comma-separated, e.g. 3,4")
    p.add_argument("--mode", default="auto", choices=MODES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("file")
    p.set_defaults(handler=_cmd_partition)

    p = sub.add_parser("schema", help="path plus off-path vertex with k+1 path neighbors")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact-threshold", type=int, default=16)
    p.add_argument("file")
    p.set_defaults(handler=_cmd_schema)

    p = sub.add_parser("tournament", help="tournament algorithms")
    p.add_argument("--cmd", required=True, choices=("hamiltonian", "longcycle", "distinct"))
    p.add_argument("--k", type=int)
    p.add_argument("file")
    p.set_defaults(handler=_cmd_tournament)

    p = sub.add_parser("digraph", help="digraph finders")
    p.add_argument("--cmd", required=True, choices=("regular-find", "uniform-find", "maxpath"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=1000)
    p.add_argument("--force", action="store_true")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_digraph)

    p = sub.add_parser("bounds", help="numeric report of the probabilistic guarantees")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--c", type=float)
    p.add_argument("--d", type=float)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("verify", help="re-validate a certificate against a graph file")
    p.add_argument("cert")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("tightness", help="run a registered tightness claim")
    p.add_argument("--claim", required=True)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(handler=_cmd_tightness)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except GraphFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CyclePackError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
