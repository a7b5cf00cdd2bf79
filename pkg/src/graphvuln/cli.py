"""Command-line front end.

Subcommands: generate (family -> serialized graph), compute (invariants as
JSON), bounds (interval reports plus the BFS truth), verify (corpus-wide
check suite), bench (BFS oracle vs degree-formula fast path).

Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 precondition violation (e.g. disconnected input to `bounds`).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .bounds import bounds_for_graph, gc_truth
from .errors import DisconnectedGraphError, GraphInputError
from .generators import (
    bistar_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    pendant_tree,
    pentagon_graph,
    petersen_graph,
    random_connected_graph,
    star_graph,
)
from .graph import Graph
from .graphio import read_graph, write_graph
from .harness import CorpusConfig, fastpath_benchmark, run_suite
from .invariants import compute_invariants
from .jsonfmt import fmt_metric

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "bistar",
    "tnd",
    "petersen",
    "pentagon",
    "random",
)


def _parse_alphas(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise GraphInputError(f"--alpha expects comma-separated reals, got {text!r}")
    if not values:
        raise GraphInputError("--alpha list is empty")
    for a in values:
        if not 0.0 < a < 1.0:
            raise GraphInputError(f"--alpha values must lie in (0, 1), got {a}")
    return values


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise GraphInputError(f"{flag} expects comma-separated integers, got {text!r}")
    if not values:
        raise GraphInputError(f"{flag} list is empty")
    return values


def _need(args, name: str, family: str):
    value = getattr(args, name)
    if value is None:
        raise GraphInputError(f"family {family!r} requires --{name.replace('_', '-')}")
    return value


def _make_family(args) -> Graph:
    family = args.family
    if family == "path":
        return path_graph(_need(args, "n", family))
    if family == "cycle":
        return cycle_graph(_need(args, "n", family))
    if family == "complete":
        return complete_graph(_need(args, "n", family))
    if family == "star":
        return star_graph(_need(args, "n", family))
    if family == "bistar":
        return bistar_graph(_need(args, "p", family), _need(args, "q", family))
    if family == "tnd":
        pendants = _parse_int_list(_need(args, "r", family), "--r")
        return pendant_tree(pendants)
    if family == "petersen":
        return petersen_graph()
    if family == "pentagon":
        return pentagon_graph()
    if family == "random":
        return random_connected_graph(
            _need(args, "n", family), args.extra_edges, args.seed
        )
    raise GraphInputError(f"unknown family {family!r}")


def _read_input(args) -> tuple[Graph, list[str] | None]:
    if getattr(args, "family", None):
        if args.input:
            raise GraphInputError("give either an input file or --family, not both")
        return _make_family(args), None
    if not args.input:
        raise GraphInputError("no input: pass a file path, '-' for stdin, or --family")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphInputError(f"cannot read {args.input}: {exc}")
    return read_graph(text, args.format)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_family_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=None, help="vertex count")
    p.add_argument("--p", type=int, default=None, help="bistar: leaves at one center")
    p.add_argument("--q", type=int, default=None, help="bistar: leaves at the other")
    p.add_argument("--r", default=None, help="tnd: comma list of pendant counts")
    p.add_argument("--extra-edges", type=int, default=0, help="random: non-tree edges")
    p.add_argument("--seed", type=int, default=42, help="random: PRNG seed")


def _cmd_generate(args) -> int:
    g = _make_family(args)
    _emit(write_graph(g, args.format), args.out)
    return 0


def _gc_map(values: dict[float, float]) -> dict[str, object]:
    return {f"{a:.12g}": fmt_metric(v) for a, v in values.items()}


def _cmd_compute(args) -> int:
    g, labels = _read_input(args)
    alphas = _parse_alphas(args.alpha)
    inv = compute_invariants(g, alphas)
    doc = {
        "n": inv.n,
        "m": inv.m,
        "connected": inv.connected,
        "closeness": fmt_metric(inv.closeness),
        "generalized_closeness": _gc_map(inv.gc_alpha),
        "m1": inv.m1,
        "m2": inv.m2,
        "rm2": inv.rm2,
        "wiener_polarity": inv.wiener_polarity,
        "girth": inv.girth,
        "flags": asdict(inv.flags),
    }
    if not inv.connected:
        doc["convention"] = "alpha_inf_zero"
    if labels is not None:
        doc["labels"] = labels
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _cmd_bounds(args) -> int:
    g, labels = _read_input(args)
    alphas = _parse_alphas(args.alpha)
    reports = bounds_for_graph(g, alphas)
    truth = gc_truth(g, alphas + ((0.5,) if 0.5 not in alphas else ()))
    doc = {
        "n": g.n,
        "m": g.m,
        "truth": {
            "closeness": fmt_metric(truth[0.5]),
            "generalized_closeness": _gc_map({a: truth[a] for a in alphas}),
        },
        "reports": [
            {
                "theorem_id": r.theorem_id,
                "measure": r.measure,
                "alpha": fmt_metric(r.alpha),
                "lower": fmt_metric(r.lower),
                "upper": fmt_metric(r.upper),
                "applicable": r.applicable,
                "equality_expected": r.equality_expected,
            }
            for r in reports
        ],
    }
    if labels is not None:
        doc["labels"] = labels
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    cfg = CorpusConfig(
        max_n=args.max_n,
        trees_max_n=args.trees_max_n,
        include_named=not args.no_named,
        random_count=args.random_count,
        seed=args.seed,
        alphas=_parse_alphas(args.alphas),
        tolerance=args.tolerance,
        checks=tuple(args.checks.split(",")) if args.checks else None,
    )
    report = run_suite(cfg)
    _emit(report.to_json(), args.out)
    return 0 if report.total_failures == 0 else 1


def _cmd_bench(args) -> int:
    sizes = _parse_int_list(args.sizes, "--sizes")
    backends = tuple(args.backends.split(",")) if args.backends else None
    rows = fastpath_benchmark(args.family, sizes, args.reps, backends)
    doc = {
        "rows": [
            {
                "family": row["family"],
                "n": row["n"],
                "backend": row["backend"],
                "bfs_time": fmt_metric(row["bfs_time"]),
                "formula_time": fmt_metric(row["formula_time"]),
                "speedup": fmt_metric(row["speedup"]),
                "values_equal": row["values_equal"],
                "closeness": fmt_metric(row["closeness"]),
            }
            for row in rows
        ]
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphvuln",
        description="Closeness-based vulnerability measures, degree indices, "
        "interval checks and exact fast paths for graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a named family as graph6 or edge list")
    p.add_argument("family", choices=FAMILIES)
    _add_family_options(p)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("compute", help="compute all invariants as JSON")
    p.add_argument("input", nargs="?", default=None, help="file path or '-' for stdin")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--family", choices=FAMILIES, default=None)
    _add_family_options(p)
    p.add_argument("--alpha", default="0.5", help="comma list in (0,1)")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("bounds", help="interval reports plus the BFS truth value")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--family", choices=FAMILIES, default=None)
    _add_family_options(p)
    p.add_argument("--alpha", default="0.5")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("verify", help="run the corpus-wide verification suite")
    p.add_argument("--max-n", type=int, default=6, help="exhaustive sweep cap (0=off)")
    p.add_argument("--trees-max-n", type=int, default=8, help="tree sweep cap (<2=off)")
    p.add_argument("--random-count", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--no-named", action="store_true", help="skip the named graphs")
    p.add_argument("--alphas", default="0.1,0.25,0.5,0.75,0.9")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--checks", default=None, help="comma list; default all")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("bench", help="time the BFS oracle vs the degree formula")
    p.add_argument("--family", default="tnd")
    p.add_argument("--sizes", default="100,1000,10000")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument(
        "--backends", default=None, help="comma list of kernel backends to time"
    )
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
