"""Command-line entry point.

Exit codes: 0 success / all reports agree; 1 failed check, disagreement or
dead end; 2 usage or parse error; 3 enumeration budget exceeded.  All
randomness flows through --seed; identical invocations print identical
output.  JSON payloads carry a schema_version field.
"""

from __future__ import annotations

import argparse
import json
import sys

from .calculus import GraphFunction, checked_vertices, holomorphic_violations, harmonic_violations
from .enumeration import count_functions, enumerate_functions, verify
from .graphs import as_graph, gen
from .rings import ring_make
from .solve import DEFAULT_BUDGET, BudgetExceededError, local_solution_set
from .treedyn import (
    DeadEndError,
    DynamicsConfig,
    compare_corollary10,
    dp_neighborhood_count,
    sample_complex_tr3,
    sample_holomorphic_tree,
)

SCHEMA_VERSION = 1


def _emit_json(payload: dict):
    payload = dict(payload)
    payload["schema_version"] = SCHEMA_VERSION
    print(json.dumps(payload, sort_keys=True))


def _load_graph(args):
    if getattr(args, "graph", None):
        with open(args.graph, "r", encoding="utf-8") as fh:
            from .graphs import Graph

            return Graph.from_edge_list(fh.read())
    if getattr(args, "gen", None):
        return gen(args.gen)
    raise ValueError("a graph is required: pass --graph FILE or --gen SPEC")


def _cmd_gen(args) -> int:
    g = as_graph(gen(args.gen))
    if args.format == "json":
        _emit_json({"vertex_count": g.vertex_count,
                    "edges": sorted(g.edges())})
    else:
        sys.stdout.write(g.serialize())
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args)
    ring = ring_make(args.ring)
    with open(args.function, "r", encoding="utf-8") as fh:
        f = GraphFunction.from_text(ring, g.vertex_count, fh.read())
    if args.predicate == "harmonic":
        bad = harmonic_violations(g, f)
    else:
        bad = holomorphic_violations(g, f)
    checked = checked_vertices(g)
    if args.format == "json":
        _emit_json({"predicate": args.predicate, "ring": ring.spec,
                    "checked_vertices": list(checked), "violations": bad,
                    "ok": not bad})
    else:
        print(f"checked {len(checked)} vertices ({args.predicate}); "
              f"violations: {bad if bad else 'none'}")
    return 0 if not bad else 1


def _parse_pins(ring, pin_args, vertex_count):
    pins = {}
    for item in pin_args or []:
        if "=" not in item:
            raise ValueError(f"--pin expects v=value, got {item!r}")
        v_text, val_text = item.split("=", 1)
        v = int(v_text)
        if v in pins:
            raise ValueError(f"vertex {v} pinned twice")
        if not 0 <= v < vertex_count:
            raise ValueError(f"pinned vertex {v} out of range")
        pins[v] = ring.parse(val_text)
    return pins


def _cmd_enumerate(args) -> int:
    g = _load_graph(args)
    ring = ring_make(args.ring)
    pins = _parse_pins(ring, args.pin, g.vertex_count)
    if args.count_only:
        n = count_functions(g, ring, args.predicate, pins, budget=args.budget)
        if args.format == "json":
            _emit_json({"count": n, "predicate": args.predicate, "ring": ring.spec})
        else:
            print(f"count {n}")
        return 0
    emitted = []
    count = 0
    for f in enumerate_functions(g, ring, args.predicate, pins, budget=args.budget):
        count += 1
        if args.limit is None or count <= args.limit:
            emitted.append([ring.format(a) for a in f.values])
        if args.limit is not None and count >= args.limit:
            break
    if args.format == "json":
        _emit_json({"count": count, "functions": emitted,
                    "truncated": args.limit is not None and count >= args.limit})
    else:
        for vals in emitted:
            print(" ".join(vals))
        print(f"count {count}")
    return 0


def _cmd_local_solutions(args) -> int:
    ring = ring_make(args.ring)
    t = ring.parse(args.t)
    sols = local_solution_set(ring, args.arity, t, budget=args.budget)
    if args.count_only:
        if args.format == "json":
            _emit_json({"ring": ring.spec, "arity": args.arity,
                        "t": ring.format(t), "count": sols.count})
        else:
            print(f"count {sols.count}")
        return 0
    if args.format == "json":
        _emit_json({"ring": ring.spec, "arity": args.arity, "t": ring.format(t),
                    "count": sols.count,
                    "tuples": [[ring.format(x) for x in tup] for tup in sols.tuples]})
    else:
        for tup in sols.tuples:
            print(" ".join(ring.format(x) for x in tup))
        print(f"count {sols.count}")
    return 0


def _cmd_verify(args) -> int:
    ring = ring_make(args.ring) if args.ring else None
    graph = gen(args.gen) if args.gen else None
    reports = verify(args.kind, ring=ring, degree=args.degree, graph=graph,
                     budget=args.budget)
    print(json.dumps({"schema_version": SCHEMA_VERSION, "kind": args.kind,
                      "reports": [r.to_dict() for r in reports]}, sort_keys=True))
    return 0 if all(r.passed() for r in reports) else 1


def _cmd_sample(args) -> int:
    ring = ring_make(args.ring)
    if ring.kind == "eisenstein":
        alpha = ring.parse(args.alpha)
        beta = ring.parse(args.beta)
        t, f = sample_complex_tr3(args.seed, args.radius, alpha, beta)
    else:
        root_value = ring.parse(args.root_value) if args.root_value else None
        cfg = DynamicsConfig(ring=ring, degree=args.degree, radius=args.radius,
                             seed=args.seed, root_value=root_value,
                             exclude_constant_branches=args.filter_constant_branches)
        t, f = sample_holomorphic_tree(cfg)
    if args.format == "json":
        _emit_json({"ring": ring.spec, "seed": args.seed,
                    "edges": sorted(t.graph.edges()),
                    "function": {str(v): ring.format(a) for v, a in enumerate(f.values)}})
    else:
        print("# edges")
        sys.stdout.write(t.graph.serialize())
        print("# function")
        sys.stdout.write(f.to_text())
    return 0


def _cmd_count_ball(args) -> int:
    ring = ring_make(args.ring)
    if args.compare_cor10:
        report = compare_corollary10(ring, args.degree, args.radius, budget=args.budget)
        if args.format == "json":
            _emit_json({"report": report.to_dict()})
        else:
            ctx = report.context
            print(f"dp_count {report.observed}")
            print(f"formula_plus {ctx['formula_plus']} agrees {ctx['agrees_plus']}")
            print(f"formula_minus {ctx['formula_minus']} agrees {ctx['agrees_minus']}")
            print(f"eta_hypothesis {ctx['eta_hypothesis']}")
        return 0
    s = ring.parse(args.root_value) if args.root_value else None
    n = dp_neighborhood_count(ring, args.degree, args.radius, s=s, budget=args.budget)
    if args.format == "json":
        _emit_json({"ring": ring.spec, "degree": args.degree,
                    "radius": args.radius, "count": n})
    else:
        print(f"count {n}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holograph",
        description="Exact holomorphic-function machinery on finite graphs and trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, ring=True, budget=True):
        if ring:
            p.add_argument("--ring", help='ring spec: "Fp:5", "Fq:3^2", "Z:9", "Eisenstein"')
        if budget:
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                           help="max candidate assignments for exhaustive scans")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("--gen", required=True, help="cycle:6, path:3, star:5, complete:4, tree:3:4, multi:complete:4:3")
    add_common(p, ring=False, budget=False)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="check a function file against a predicate")
    p.add_argument("--graph", help="edge-list file")
    p.add_argument("--gen", help="generator spec instead of --graph")
    p.add_argument("--function", required=True, help='file of "v value" lines')
    p.add_argument("--predicate", choices=("harmonic", "holomorphic"),
                   default="holomorphic")
    add_common(p, budget=False)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", help="enumerate functions satisfying a predicate")
    p.add_argument("--graph")
    p.add_argument("--gen")
    p.add_argument("--predicate", choices=("harmonic", "holomorphic"),
                   default="holomorphic")
    p.add_argument("--pin", action="append", metavar="V=VALUE",
                   help="pin vertex V to VALUE (repeatable)")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int)
    add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("local-solutions",
                       help="enumerate local solutions for an incoming difference")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--t", required=True, help="incoming difference (element text)")
    p.add_argument("--count-only", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_local_solutions)

    p = sub.add_parser("verify", help="run a named verification batch (JSON report)")
    p.add_argument("--kind", required=True,
                   choices=("thm8", "thm9", "thm12", "example3", "example5", "cor11"))
    p.add_argument("--degree", type=int)
    p.add_argument("--gen", help="override graph for thm12")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sample", help="grow a function on a truncated regular tree")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--root-value", help="value at the root (element text)")
    p.add_argument("--alpha", default="0", help="inner endpoint value (Eisenstein mode)")
    p.add_argument("--beta", default="1", help="anchor value (Eisenstein mode)")
    p.add_argument("--filter-constant-branches", action="store_true",
                   help="exclude all-equal increment choices from the dynamics")
    add_common(p, budget=False)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("count-ball", help="DP count of valid ball assignments")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--root-value")
    p.add_argument("--compare-cor10", action="store_true",
                   help="emit the closed-form comparison report")
    add_common(p)
    p.set_defaults(func=_cmd_count_ball)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DeadEndError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
