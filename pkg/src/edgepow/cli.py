"""Command-line front-end.

Commands: ass, mu-star, stab, socle, compare, sbases.  Graphs come from a
file (text or JSON, sniffed), a directory (compare), or --edges inline.
Exit codes: 0 success, 1 internal assertion or differential mismatch,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import logging
import os
import random
import sys
from pathlib import Path

from .assoc import ass_infinity, associated_primes
from .catalog import connected_graphs, random_connected_graph
from .ears import phi_star
from .errors import EdgepowError, GraphInputError
from .graph import Graph
from .io import load_graph, parse_inline_edges, serialize_graph_text
from .sbases import enumerate_minimal_sbases
from .socle import DEFAULT_GUARD_OPS, oracle_prime_in_ass, oracle_max_ideal_in_ass

log = logging.getLogger("edgepow")


def _prime_str(cover) -> str:
    return "(" + ", ".join(f"x{i}" for i in cover) + ")"


def _input_graph(args) -> Graph:
    if getattr(args, "edges", None):
        if getattr(args, "input", None):
            raise GraphInputError("give either an input file or --edges, not both")
        return parse_inline_edges(args.edges)
    if not getattr(args, "input", None):
        raise GraphInputError("no input: give a graph file or --edges")
    return load_graph(args.input)


def _t_range(args) -> list[int]:
    if args.t_max is not None:
        start = args.t if args.t is not None else 1
        if args.t_max < start:
            raise GraphInputError("--t-max must be >= --t")
        return list(range(start, args.t_max + 1))
    return [args.t if args.t is not None else 1]


def cmd_ass(args) -> int:
    g = _input_graph(args)
    reports = [associated_primes(g, t) for t in _t_range(args)]
    if args.format == "json":
        payload = [r.to_json_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
        return 0
    for r in reports:
        print(f"Ass(I^{r.t}):")
        print(f"  minimal primes ({len(r.minimal_primes)}):")
        for rep in r.minimal_primes:
            print(f"    {_prime_str(rep.cover)}")
        print(f"  embedded primes ({len(r.embedded_primes)}):")
        for rep in r.embedded_primes:
            print(
                f"    {_prime_str(rep.cover)}  witness U={list(rep.witness)}"
                f"  mu*={rep.mu_star}"
            )
    return 0


def cmd_mu_star(args) -> int:
    g = _input_graph(args)
    result = phi_star(g)
    if args.format == "json":
        decomposition = result.witness_decomposition
        print(
            json.dumps(
                {
                    "mu_star": result.mu_star,
                    "phi_star": result.phi_star,
                    "critical_weights": list(result.witness_weights),
                    "decomposition": decomposition.to_json_dict(),
                },
                indent=2,
            )
        )
        return 0
    print(f"mu* = {result.mu_star}")
    print(f"phi* = {result.phi_star}")
    print(f"critical weights = {list(result.witness_weights)}")
    for group in result.witness_decomposition.groups:
        for k, ear in enumerate(group):
            tag = "first" if k == 0 else ("odd" if ear.is_odd else "even")
            print(f"  ear {list(ear.walk)}  [{tag}]")
    return 0


def cmd_stab(args) -> int:
    g = _input_graph(args)
    report = ass_infinity(g)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
        return 0
    print(f"astab = {report.astab}")
    if report.cms_bound is not None:
        print(f"m - t bound = {report.cms_bound}")
    print("Ass^infty members:")
    for rep in report.ass_infty_members:
        kind = "minimal" if rep.is_minimal_cover else "embedded"
        extra = "" if rep.is_minimal_cover else f"  first power = {rep.stability_index}"
        print(f"  {_prime_str(rep.cover)}  [{kind}]{extra}")
    return 0


def cmd_socle(args) -> int:
    g = _input_graph(args)
    out = []
    for t in _t_range(args):
        witness = oracle_max_ideal_in_ass(g, t, guard_ops=args.guard_ops)
        out.append((t, witness))
    if args.format == "json":
        payload = [
            {"t": t, "witness": None if w is None else w.to_json_dict()}
            for t, w in out
        ]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
        return 0
    for t, w in out:
        if w is None:
            print(f"t={t}: no socle witness (m not in Ass(I^{t}))")
        else:
            print(f"t={t}: socle witness a = {list(w.weights)}")
    return 0


def cmd_sbases(args) -> int:
    bases = enumerate_minimal_sbases(args.s, args.n_max)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "s": args.s,
                    "bases": [
                        {"n": b.graph.n, "edges": [list(e) for e in b.graph.sorted_edges()]}
                        for b in bases
                    ],
                },
                indent=2,
            )
        )
        return 0
    print(f"minimal {args.s}-bases up to isomorphism ({len(bases)}):")
    for b in bases:
        print(f"  n={b.graph.n}  edges={b.graph.sorted_edges()}")
    return 0


def _compare_one(payload: tuple[int, tuple, int, int]) -> tuple[int, list]:
    n, edges, t_max, guard = payload
    g = Graph(n, frozenset(edges))
    mismatches = []
    checked = 0
    for t in range(1, t_max + 1):
        result = associated_primes(g, t)
        engine = {rep.cover for rep in result.minimal_primes}
        engine |= {rep.cover for rep in result.embedded_primes}
        for f in g.all_covers():
            cover = tuple(sorted(f))
            want = cover in engine
            got = oracle_prime_in_ass(g, f, t, guard_ops=guard)
            checked += 1
            if want != got:
                mismatches.append((t, cover, want, got))
    return checked, mismatches


def _compare_corpus(args) -> list[Graph]:
    graphs: list[Graph] = []
    if args.input:
        path = Path(args.input)
        if path.is_dir():
            files = sorted(p for p in path.iterdir() if p.is_file())
            if not files:
                raise GraphInputError(f"no inputs in {path}")
            graphs.extend(load_graph(p) for p in files)
        else:
            graphs.append(load_graph(path))
    elif args.edges:
        graphs.append(parse_inline_edges(args.edges))
    elif args.n_max is not None:
        for n in range(2, args.n_max + 1):
            graphs.extend(connected_graphs(n))
    if args.random:
        rng = random.Random(args.seed)
        graphs.extend(
            random_connected_graph(args.random_n, rng) for _ in range(args.random)
        )
    if not graphs:
        raise GraphInputError("no inputs: give a file/directory, --edges, --n-max, or --random")
    return graphs


def cmd_compare(args) -> int:
    graphs = _compare_corpus(args)
    t_max = args.t_max if args.t_max is not None else (args.t or 3)
    payloads = [(g.n, tuple(g.sorted_edges()), t_max, args.guard_ops) for g in graphs]
    results = []
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_compare_one, payloads))
    else:
        for k, payload in enumerate(payloads):
            results.append(_compare_one(payload))
            log.info("compare: graph %d/%d done", k + 1, len(payloads))
    total = sum(c for c, _ in results)
    bad = [
        (graphs[k], t, cover, want, got)
        for k, (_, mis) in enumerate(results)
        for (t, cover, want, got) in mis
    ]
    print(f"compared {total} (graph, cover, t) memberships on {len(graphs)} graphs")
    if not bad:
        print("engine and oracle agree everywhere")
        return 0
    g, t, cover, want, got = bad[0]
    print(f"MISMATCH: t={t} cover={list(cover)} engine={want} oracle={got} on graph:")
    print(serialize_graph_text(g), end="")
    print(f"total mismatches: {len(bad)}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgepow",
        description="Associated primes of edge ideal powers, combinatorially.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", nargs="?", help="graph file (text or JSON)")
            p.add_argument("--edges", help='inline edge list, e.g. "1-2,2-3,1-3"')
        p.add_argument("--format", choices=("json", "table"), default="table")
        p.add_argument("--t", type=int, default=None, help="power t")
        p.add_argument("--t-max", dest="t_max", type=int, default=None, help="run t..t-max")
        p.add_argument(
            "--guard-ops",
            dest="guard_ops",
            type=int,
            default=DEFAULT_GUARD_OPS,
            help="oracle operation budget",
        )

    p = sub.add_parser("ass", help="associated primes of I^t")
    common(p)
    p.set_defaults(func=cmd_ass)

    p = sub.add_parser("mu-star", help="mu*, phi*, and a witness decomposition")
    common(p)
    p.set_defaults(func=cmd_mu_star)

    p = sub.add_parser("stab", help="Ass^infty, stability indices, astab")
    common(p)
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("socle", help="brute-force socle witness for m in Ass(I^t)")
    common(p)
    p.set_defaults(func=cmd_socle)

    p = sub.add_parser("compare", help="differential test: engine vs socle oracle")
    common(p)
    p.add_argument("--n-max", dest="n_max", type=int, default=None,
                   help="exhaustive catalog of connected graphs up to this size")
    p.add_argument("--random", type=int, default=0, help="add this many random graphs")
    p.add_argument("--random-n", dest="random_n", type=int, default=7,
                   help="vertex count for random graphs")
    p.add_argument("--seed", type=int, default=0, help="PRNG seed for --random")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker count")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sbases", help="catalog of minimal s-bases")
    p.add_argument("--s", type=int, required=True, help="target mu* value")
    p.add_argument("--n-max", dest="n_max", type=int, default=None,
                   help="vertex budget (default 3s)")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_sbases)

    return parser


def main(argv=None) -> int:
    level = os.environ.get("EDGEPOW_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EdgepowError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
