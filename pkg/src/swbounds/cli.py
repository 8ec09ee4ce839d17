"""Command-line interface: region, bounds, graph, compare, ingest, verify.

Every command reads one source (a model file or a samples CSV), computes in
memory, and writes its output once at the end, to --out or stdout. Exit
codes: 0 success, 1 validation or domain error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import grouping, modelio, oracle, region, reports, sources
from .partitions import Partition

#: Penalties below -1e-9 mean a bound undercut the joint entropy: a defect.
DOMINANCE_TOL = 1e-9

_VERIFY_QUERIES = 200
_AGREEMENT_TOL = 1e-12
_STRUCTURE_TOL = 1e-10


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits 1 on usage errors (2 is reserved for I/O)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list")


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part.strip()) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated number list")


def _name_list(text: str) -> tuple[str, ...]:
    return tuple(part.strip().replace("-", "_") for part in text.split(",") if part.strip())


def build_parser() -> argparse.ArgumentParser:
    shared = _Parser(add_help=False)
    src = shared.add_argument_group("source")
    src.add_argument("--model", metavar="PATH", help="model file to analyse")
    src.add_argument("--samples", metavar="PATH", help="samples CSV to analyse")
    src.add_argument(
        "--alphabet-sizes", type=_int_list, metavar="LIST",
        help="comma-separated alphabet sizes (required with --samples)",
    )
    src.add_argument(
        "--smoothing", type=float, default=0.0, metavar="REAL",
        help="additive smoothing for --samples (default 0)",
    )
    src.add_argument(
        "--skip-header", action="store_true",
        help="skip one header line in the samples CSV",
    )
    shared.add_argument("--tau", type=float, metavar="REAL", help="correlation threshold")
    shared.add_argument(
        "--metric", choices=grouping.METRICS, default="mutual_information",
        help="pairwise correlation metric",
    )
    shared.add_argument(
        "--ordering", type=_int_list, metavar="LIST",
        help="node ordering as a permutation of 1..N (default identity)",
    )
    shared.add_argument("--partition", metavar="PATH", help="partition file (one group per line)")
    shared.add_argument(
        "--config", type=_name_list, metavar="LIST",
        help=f"bound configurations, from: {', '.join(bounds_mod.BOUND_KINDS)}",
    )
    shared.add_argument("--k", type=int, metavar="INT", help="mixed bound: regular prefix length")
    shared.add_argument("--r", type=int, metavar="INT", help="mixed bound: markov run parameter")
    shared.add_argument(
        "--rates", type=_float_list, metavar="LIST",
        help="rate vector to test against the region (region command)",
    )
    shared.add_argument("--seed", type=int, default=0, metavar="INT", help="seed for randomized checks")
    shared.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    shared.add_argument("--format", choices=("text", "csv"), default=None, help="output format")

    parser = _Parser(
        prog="swbounds",
        description=(
            "Slepian-Wolf rate regions and structured total-rate bounds for "
            "correlated discrete sources."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, func, help_text in (
        ("region", cmd_region, "enumerate the admissible rate region"),
        ("bounds", cmd_bounds, "evaluate structured total-rate bounds"),
        ("graph", cmd_graph, "build the correlation graph and its disjoint groups"),
        ("compare", cmd_compare, "rank bound configurations by total rate"),
        ("ingest", cmd_ingest, "convert a samples CSV into a model file"),
        ("verify", cmd_verify, "run oracle, markov, and independence checks"),
    ):
        sub = commands.add_parser(name, parents=[shared], help=help_text)
        sub.set_defaults(func=func)
    return parser


def _load_source(args) -> sources.JointSource:
    if (args.model is None) == (args.samples is None):
        raise ValueError("exactly one of --model and --samples is required")
    if args.model is not None:
        return modelio.read_model(args.model)
    if args.alphabet_sizes is None:
        raise ValueError("--samples requires --alphabet-sizes")
    rows = modelio.read_samples(args.samples, skip_header=args.skip_header)
    return sources.from_samples(rows, args.alphabet_sizes, smoothing=args.smoothing)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _requests_from_args(args, source) -> list[bounds_mod.BoundRequest]:
    names = args.config if args.config else ("full",)
    graph = None
    partition = None
    requests = []
    for name in names:
        if name not in bounds_mod.BOUND_KINDS:
            raise ValueError(
                f"unknown bound configuration {name!r}; choose from "
                f"{', '.join(bounds_mod.BOUND_KINDS)}"
            )
        if name == "mixed" and (args.k is None or args.r is None):
            raise ValueError("the mixed bound requires --k and --r")
        if name == "adjacency":
            if args.tau is None:
                raise ValueError("the adjacency bound requires --tau")
            if graph is None:
                graph = grouping.build_graph(source, args.tau, args.metric)
        if name in ("disjoint", "disjoint_markov") and partition is None:
            if args.partition is not None:
                partition = modelio.read_partition(args.partition)
            elif args.tau is not None:
                partition = grouping.disjoint_partition(
                    grouping.build_graph(source, args.tau, args.metric)
                )
            else:
                raise ValueError(f"the {name} bound requires --partition or --tau")
        requests.append(
            bounds_mod.BoundRequest(
                kind=name,
                ordering=args.ordering,
                k=args.k,
                r=args.r,
                graph=graph if name == "adjacency" else None,
                partition=partition if name in ("disjoint", "disjoint_markov") else None,
            )
        )
    return requests


def cmd_region(args) -> int:
    source = _load_source(args)
    inequalities = region.enumerate_inequalities(source)
    joint = inequalities[-1].lower_bound  # full-subset bound is H(X_1..X_N)
    verdict = None
    if args.rates is not None:
        verdict = region.is_admissible(source, args.rates)
    fmt = args.format or "text"
    if fmt == "csv":
        main_text = reports.region_csv(inequalities, args.rates)
    else:
        main_text = reports.region_text(source, inequalities, joint, args.rates, verdict)
    pieces = [main_text]
    if source.n_vars == 2:
        boundary = reports.boundary_csv(region.two_node_boundary(source))
        if args.out is not None:
            _emit(boundary, args.out + ".boundary.csv")
        else:
            pieces.append(boundary)
    _emit("\n".join(pieces) if len(pieces) > 1 else pieces[0], args.out)
    if verdict is not None and not verdict.admissible:
        return 1
    return 0


def cmd_bounds(args) -> int:
    source = _load_source(args)
    results = [bounds_mod.evaluate_bound(source, req) for req in _requests_from_args(args, source)]
    if (args.format or "text") == "csv":
        text = reports.bounds_csv(results)
    else:
        text = "\n".join(reports.bound_text(rep) for rep in results)
    _emit(text, args.out)
    return 0 if all(rep.penalty >= -DOMINANCE_TOL for rep in results) else 1


def cmd_graph(args) -> int:
    source = _load_source(args)
    if args.tau is None:
        raise ValueError("the graph command requires --tau")
    graph = grouping.build_graph(source, args.tau, args.metric)
    partition = grouping.disjoint_partition(graph)
    adjacency = reports.graph_csv(graph)
    groups = modelio.format_partition(partition)
    if args.out is not None:
        _emit(adjacency, args.out)
        _emit(groups, args.out + ".partition.txt")
    else:
        sys.stdout.write(adjacency + "\n" + groups)
    sys.stdout.write(f"k={partition.k}\n")
    return 0


def cmd_compare(args) -> int:
    source = _load_source(args)
    report = bounds_mod.compare_bounds(source, _requests_from_args(args, source))
    if (args.format or "csv") == "text":
        text = reports.comparison_text(report)
    else:
        text = reports.comparison_csv(report)
    _emit(text, args.out)
    return 0 if all(row.penalty >= -DOMINANCE_TOL for row in report.rows) else 1


def cmd_ingest(args) -> int:
    if args.samples is None:
        raise ValueError("ingest requires --samples")
    if args.alphabet_sizes is None:
        raise ValueError("--samples requires --alphabet-sizes")
    rows = modelio.read_samples(args.samples, skip_header=args.skip_header)
    source = sources.from_samples(rows, args.alphabet_sizes, smoothing=args.smoothing)
    header = (
        f"ingested from {Path(args.samples).name}: {rows.shape[0]} rows, "
        f"smoothing {args.smoothing!r}"
    )
    _emit(modelio.format_model(source, header), args.out)
    return 0


def cmd_verify(args) -> int:
    import numpy as np

    source = _load_source(args)
    rng = np.random.default_rng(args.seed)
    agreement = [
        oracle.agreement_report(source, targets, given)
        for targets, given in oracle.random_queries(source.n_vars, _VERIFY_QUERIES, rng)
    ]
    ordering = args.ordering if args.ordering is not None else tuple(range(1, source.n_vars + 1))
    markov = oracle.verify_markov_property(source, ordering, tol=_STRUCTURE_TOL)
    if args.partition is not None:
        partition = modelio.read_partition(args.partition)
    else:
        partition = Partition.singletons(source.n_vars)
    independence = oracle.verify_group_independence(source, partition, tol=_STRUCTURE_TOL)
    worst = max((rep.abs_diff for rep in agreement), default=0.0)
    text = reports.verification_text(
        args.seed,
        agreement,
        _AGREEMENT_TOL,
        markov,
        ordering,
        _STRUCTURE_TOL,
        independence,
        partition,
        _STRUCTURE_TOL,
    )
    _emit(text, args.out)
    return 0 if worst <= _AGREEMENT_TOL and markov.ok and independence.ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage error or --help; message already printed
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"swbounds: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"swbounds: i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
