"""Command line entry point: ``sigma-lab <command> [options]``.

Exit codes: 0 on success, 1 on usage or input errors, 2 when ``verify`` finds
at least one ``fails`` verdict.
"""

import argparse
import sys
import typing

import structlog

from sigma_lab import graphs, recognizers, settings, spectra
from sigma_lab.enumeration import (
    EnumerationError,
    enumerate_nonisomorphic,
    enumerate_up_to,
)
from sigma_lab.graph6 import (
    Graph6Error,
    graph6_decode,
    graph6_encode,
    read_graph6_lines,
)
from sigma_lab.graphs import Graph, GraphError
from sigma_lab.harness import run_audits
from sigma_lab.linalg import ConvergenceError
from sigma_lab.logs import configure_logging
from sigma_lab.utils import format_number, format_values


__all__ = ["UsageError", "build_parser", "main"]


logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILS = 2

FAMILIES = [
    "complete",
    "star",
    "path",
    "cycle",
    "empty",
    "complete-bipartite",
    "spider",
    "remark",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_input_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("input")
    group.add_argument("--graph6", action="append", default=[], metavar="STR")
    group.add_argument("--file", metavar="PATH", help="graph6 lines, one per graph")
    group.add_argument("--family", choices=FAMILIES)
    group.add_argument("--n", type=int)
    group.add_argument("--r", type=int)
    group.add_argument("--s", type=int)
    group.add_argument("--k", type=int)
    group.add_argument("--kind", choices=["thin", "thick"], default="thin")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sigma-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--log-level", default=None)
    commands = parser.add_subparsers(dest="command", required=True)

    for name, text in [
        ("sigma", "print the exact number of Laplacian eigenvalues >= 2m/n"),
        ("spectrum", "print the Laplacian spectrum, largest first"),
        ("classify", "print one line per recognizer"),
    ]:
        _add_input_arguments(commands.add_parser(name, help=text))

    compose = commands.add_parser(
        "compose", help="spectrum of the join or union of two graphs"
    )
    _add_input_arguments(compose)
    compose.add_argument("--op", choices=["join", "union"], required=True)

    enumerate_ = commands.add_parser(
        "enumerate", help="print one graph6 line per isomorphism class"
    )
    enumerate_.add_argument("--n", type=int, required=True)

    verify = commands.add_parser("verify", help="audit laws over a corpus")
    _add_input_arguments(verify)
    verify.add_argument("--enumerate", type=int, metavar="K", dest="enumerate_to")
    verify.add_argument("--laws", default="all")
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--out", metavar="PATH")
    verify.add_argument("--csv", metavar="PATH")
    verify.add_argument("--tie-tol", type=float, default=None)
    verify.add_argument("--progress", action="store_true", default=None)
    verify.add_argument("--no-timing", action="store_true")
    return parser


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"family {args.family} needs {', '.join(missing)}")


def _family_graph(args: argparse.Namespace) -> Graph:
    family = args.family
    if family in ["complete", "star", "path", "cycle", "empty"]:
        _require(args, "n")
        return getattr(graphs, family)(args.n)
    if family == "complete-bipartite":
        _require(args, "r", "s")
        return graphs.complete_bipartite(args.r, args.s)
    if family == "spider":
        _require(args, "k")
        head = graphs.empty(args.r or 0)
        return graphs.spider(args.kind, args.k, head)[0]
    if family == "remark":
        _require(args, "s")
        return graphs.remark_family(args.s)
    raise UsageError(f"Invalid family: {family}. Must be one of {FAMILIES}")


def _iter_file(path: str) -> typing.Iterator[Graph]:
    with open(path, encoding="ascii", errors="replace") as handle:
        yield from read_graph6_lines(handle)


def _inputs(args: argparse.Namespace) -> typing.Iterator[Graph]:
    given = False
    for text in args.graph6:
        given = True
        yield graph6_decode(text)
    if args.family:
        given = True
        yield _family_graph(args)
    if args.file:
        given = True
        yield from _iter_file(args.file)
    if not given:
        raise UsageError("no input graph: pass --graph6, --file or --family")


def _classify_lines(graph: Graph) -> list[str]:
    split = recognizers.is_split(graph)
    spider = recognizers.spider_twin_origin(graph)
    bipartite = recognizers.is_complete_bipartite(graph)
    form = recognizers.raw_shape(graph)
    rows = [
        ("graph6", graph6_encode(graph)),
        ("n", graph.n),
        ("m", graph.m),
        ("sigma", spectra.sigma(graph)),
        ("average_degree", format_number(spectra.average_degree(graph))),
        ("connected", graphs.is_connected(graph)),
        ("co_connected", graphs.is_co_connected(graph)),
        ("anticomponents", len(graphs.anticomponent_sets(graph))),
        ("forest", recognizers.is_forest(graph)),
        ("tree", recognizers.is_tree(graph)),
        ("star", recognizers.is_star(graph)),
        ("complete_bipartite", "K{},{}".format(*bipartite) if bipartite else None),
        ("split", split is not None),
        ("pseudo_split", recognizers.is_pseudo_split(graph)),
        ("cograph", recognizers.is_cograph(graph)),
        ("extended_p4_laden", recognizers.is_extended_p4_laden(graph)),
        ("spider", spider.shape.kind if spider and spider.twin is None else None),
        ("spider_plus_twin", spider is not None and spider.twin is not None),
        ("p4_laden_case", recognizers.p4_laden_case(graph)),
        ("shape", str(form) if form else None),
        ("conjecture_form", recognizers.conjecture_form(graph) is not None),
    ]
    return [f"{name}: {'none' if value is None else value}" for name, value in rows]


def _command_sigma(args) -> int:
    for graph in _inputs(args):
        print(spectra.sigma(graph))
    return EXIT_OK


def _command_spectrum(args) -> int:
    for graph in _inputs(args):
        print(format_values(spectra.eigenvalues(graph)))
    return EXIT_OK


def _command_classify(args) -> int:
    for index, graph in enumerate(_inputs(args)):
        if index:
            print()
        print("\n".join(_classify_lines(graph)))
    return EXIT_OK


def _command_compose(args) -> int:
    operands = list(_inputs(args))
    if len(operands) != 2:
        raise UsageError(f"compose needs exactly two graphs, got {len(operands)}")
    first, second = operands
    if args.op == "join":
        result = spectra.join_spectrum(
            spectra.eigenvalues(first), first.n, spectra.eigenvalues(second), second.n
        )
    else:
        result = spectra.union_spectrum(
            spectra.eigenvalues(first), spectra.eigenvalues(second)
        )
    print(format_values(result))
    return EXIT_OK


def _command_enumerate(args) -> int:
    for graph in enumerate_nonisomorphic(args.n):
        print(graph6_encode(graph))
    return EXIT_OK


def _verify_corpus(args) -> tuple[typing.Iterable[Graph], str]:
    if args.enumerate_to is not None:
        if args.graph6 or args.file or args.family:
            raise UsageError("--enumerate cannot be combined with other inputs")
        return enumerate_up_to(args.enumerate_to), f"enumerate:1..{args.enumerate_to}"
    if args.file and not (args.graph6 or args.family):
        return _iter_file(args.file), f"file:{args.file}"
    corpus = list(_inputs(args))
    return corpus, "arguments"


def _command_verify(args) -> int:
    corpus, name = _verify_corpus(args)
    report = run_audits(
        corpus,
        laws=args.laws,
        jobs=args.jobs,
        progress=args.progress,
        tie_tol=args.tie_tol,
        corpus_name=name,
        timing=not args.no_timing,
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            handle.write(report.to_csv())
    sys.stdout.write(report.to_csv())
    for record in report.counterexamples:
        print(f"counterexample: {record.law} {record.graph6}")
    return EXIT_FAILS if report.fails else EXIT_OK


COMMANDS = {
    "sigma": _command_sigma,
    "spectrum": _command_spectrum,
    "classify": _command_classify,
    "compose": _command_compose,
    "enumerate": _command_enumerate,
    "verify": _command_verify,
}


def main(argv: typing.Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level or settings.SIGMA_LAB_LOG_LEVEL)
        logger.debug("command started", command=args.command)
        return COMMANDS[args.command](args)
    except (
        UsageError,
        Graph6Error,
        GraphError,
        EnumerationError,
        spectra.SpectrumError,
        ConvergenceError,
        ValueError,
        OSError,
    ) as exc:
        print(f"sigma-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
