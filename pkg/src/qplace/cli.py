"""Command-line entry point: ``qplace {place,route,cost,bench,gen}``.

Exit codes: 0 success, 1 usage error, 2 input validation error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import run_cell, write_outputs
from .circuit import emit_circuit, gen_qft, gen_random_circuit, parse_circuit
from .coupling import all_pairs_distances, load_graph
from .errors import QplaceError
from .placement import (SearchConfig, evaluate_cost, format_placement, greedy_place,
                        parse_placement, trivial_placement)
from .router import route


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return value == "on"


def _search_args(p):
    p.add_argument("--attenuation", type=_on_off, default=True, metavar="on|off")
    p.add_argument("--max-children", type=int, default=4)
    p.add_argument("--cutoff-depth", type=int, default=None)
    p.add_argument("--beam-width", type=int, default=64,
                   help="frontier cap; 0 disables it")


def _search_config(args) -> SearchConfig:
    try:
        return SearchConfig(max_children=args.max_children, cutoff_depth=args.cutoff_depth,
                            attenuation_enabled=args.attenuation,
                            beam_width=args.beam_width or None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qplace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("place", help="print a heuristic initial placement")
    p.add_argument("--circuit", required=True)
    p.add_argument("--arch", required=True, help="graph file or qx3/qx5/ladder16")
    _search_args(p)

    p = sub.add_parser("route", help="route a circuit and print it")
    p.add_argument("--circuit", required=True)
    p.add_argument("--arch", required=True)
    p.add_argument("--placement", default="trivial", help="'trivial' or a placement file")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("cost", help="print the estimated placement cost")
    p.add_argument("--circuit", required=True)
    p.add_argument("--arch", required=True)
    p.add_argument("--placement", required=True)
    p.add_argument("--attenuation", type=_on_off, default=True, metavar="on|off")

    p = sub.add_parser("bench", help="trivial vs heuristic benchmark")
    p.add_argument("--circuit", required=True)
    p.add_argument("--arch", required=True)
    p.add_argument("--trials", type=int, default=250)
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.add_argument("--out", default="bench-results")
    p.add_argument("--workers", type=int, default=1)
    _search_args(p)

    p = sub.add_parser("gen", help="generate a fixture circuit")
    gen = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    r = gen.add_parser("random")
    r.add_argument("--wires", type=int, required=True)
    r.add_argument("--depth", type=int, required=True)
    r.add_argument("--seed", type=int, default=0)
    q = gen.add_parser("qft")
    q.add_argument("--wires", type=int, required=True)
    return parser


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _placement(arg: str, wires: int):
    if arg == "trivial":
        return trivial_placement(wires)
    return parse_placement(_read(arg))


def run(args) -> None:
    if args.command == "gen":
        if args.wires < (2 if args.family == "random" else 1):
            raise UsageError("--wires too small")
        if args.family == "random":
            if args.depth < 1 or args.seed < 0:
                raise UsageError("--depth must be positive and --seed non-negative")
            c = gen_random_circuit(args.wires, args.depth, args.seed)
        else:
            c = gen_qft(args.wires)
        sys.stdout.write(emit_circuit(c))
        return

    circuit = parse_circuit(_read(args.circuit))
    graph = load_graph(args.arch)
    dm = all_pairs_distances(graph)

    if args.command == "place":
        pl = greedy_place(circuit, graph, dm, _search_config(args))
        print(format_placement(pl))
    elif args.command == "route":
        if args.seed < 0:
            raise UsageError("--seed must be non-negative")
        pl = _placement(args.placement, circuit.wire_count)
        pl.check_fits(circuit.wire_count, graph.qubit_count)
        result = route(circuit, pl, graph, dm, args.seed)
        sys.stdout.write(emit_circuit(result.circuit))
        print(f"# cost={result.cost} swaps={result.swap_count} seed={args.seed}")
    elif args.command == "cost":
        pl = _placement(args.placement, circuit.wire_count)
        pl.check_fits(circuit.wire_count, graph.qubit_count)
        cb = evaluate_cost(circuit, pl, dm, SearchConfig(attenuation_enabled=args.attenuation))
        print(f"err={cb.err!r} active={cb.active_cnots} cost={cb.cost!r}")
    elif args.command == "bench":
        if args.trials < 1 or args.workers < 1:
            raise UsageError("--trials and --workers must be positive")
        bench = run_cell(circuit, graph, args.trials, search=_search_config(args),
                         workers=args.workers, dm=dm)
        _, summary_path = write_outputs(args.out, bench, Path(args.circuit).stem,
                                        graph.name, args.format)
        sys.stdout.write(summary_path.read_text(encoding="utf-8"))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run(args)
    except UsageError as exc:
        print(f"qplace: error: {exc}", file=sys.stderr)
        return 1
    except (QplaceError, OSError) as exc:
        print(f"qplace: invalid input: {exc}", file=sys.stderr)
        return 2
    return 0
