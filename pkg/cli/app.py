import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence, TextIO

import numpy as np

import analytic
import construct
import counting
import search
from configs import settings
from core.budget import Budget
from core.colouring import Colouring
from core.errors import CapacityError, DomainError
from core.sets import parse_set
from core.verify import verify_colouring
from search.backtrack import Status
from utils import plot_weyl_magnitudes

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CAPACITY = 2
EXIT_USAGE = 64

COMMANDS = (
    "construct",
    "verify",
    "search",
    "compute-s",
    "encode-cnf",
    "count",
    "sqdiff",
    "trilinear",
    "extremal",
    "weyl",
    "increment",
    "trace",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Reports usage problems as exceptions so ``run`` owns the exit code."""

    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


class _Context:
    def __init__(self, args: argparse.Namespace, stdin: TextIO, stdout: TextIO):
        self.args = args
        self.stdin = stdin
        self.stdout = stdout

    def read(self, path: Optional[str]) -> str:
        if path is None or path == "-":
            return self.stdin.read()
        return Path(path).read_text()

    def write(self, text: str, out: Optional[str] = None):
        if out:
            Path(out).write_text(text if text.endswith("\n") else text + "\n")
            return
        self.stdout.write(text if text.endswith("\n") else text + "\n")

    def emit(self, record, out: Optional[str] = None):
        """Prints a result record in the requested output format."""
        if self.args.format == "json-lines":
            self.write(record.model_dump_json(), out)
        else:
            self.write(record.to_text(), out)

    def budget(self) -> Budget:
        default = Budget.default()
        nodes, seconds = self.args.budget_nodes, self.args.budget_seconds
        return Budget(
            nodes=default.nodes if nodes is None else nodes,
            seconds=default.seconds if seconds is None else seconds,
        )


def _colouring_json(colouring: Colouring) -> str:
    if colouring.is_explicit:
        body = {"form": "E", "colours": list(colouring.assignment)}
    else:
        body = {"form": "R", "runs": [list(run) for run in colouring.runs]}
    return json.dumps({"n": colouring.n, "k": colouring.k, **body})


def _construct(ctx: _Context) -> int:
    colouring = construct.construct_lower_bound(ctx.args.k)
    if ctx.args.format == "json-lines":
        ctx.write(_colouring_json(colouring), ctx.args.out)
    else:
        ctx.write(colouring.to_text(), ctx.args.out)
    return EXIT_OK


def _verify(ctx: _Context) -> int:
    colouring = Colouring.from_text(ctx.read(ctx.args.colouring))
    ctx.emit(verify_colouring(colouring))
    return EXIT_OK


def _search(ctx: _Context) -> int:
    args = ctx.args
    if args.emit_cnf:
        if args.n is None:
            raise DomainError("--emit-cnf needs --n.")
        Path(args.emit_cnf).write_text(search.encode_cnf(args.k, args.n))
    if args.n is None:
        return _compute_s(ctx)

    if args.engine == "backtrack":
        outcome = search.feasible(
            args.k, args.n, budget=ctx.budget(), symmetry_breaking=not args.no_symmetry_breaking
        )
    else:
        outcome = search.feasible_via_cnf(args.k, args.n, engine=args.engine, budget=ctx.budget())
    ctx.emit(outcome)
    if outcome.status == Status.COLOURABLE and args.format == "text":
        ctx.write(outcome.colouring.to_text())
    return EXIT_CAPACITY if outcome.status == Status.UNKNOWN else EXIT_OK


def _compute_s(ctx: _Context) -> int:
    args = ctx.args
    value = search.compute_S(
        args.k, budget=ctx.budget(), symmetry_breaking=not args.no_symmetry_breaking
    )
    ctx.emit(value)
    return EXIT_OK


def _encode_cnf(ctx: _Context) -> int:
    dimacs = search.encode_cnf(ctx.args.k, ctx.args.n, at_most_one=ctx.args.at_most_one)
    ctx.write(dimacs, ctx.args.out)
    return EXIT_OK


def _count(ctx: _Context) -> int:
    colouring = Colouring.from_text(ctx.read(ctx.args.colouring))
    ctx.emit(counting.count_per_class(colouring, threads=ctx.args.threads))
    return EXIT_OK


def _sqdiff(ctx: _Context) -> int:
    values = parse_set(ctx.read(ctx.args.set))
    count = counting.sqdiff_count(values, ctx.args.r, ctx.args.L)
    if ctx.args.format == "json-lines":
        ctx.write(json.dumps({"r": ctx.args.r, "L": ctx.args.L, "count": count}))
    else:
        ctx.write(str(count))
    return EXIT_OK


def _trilinear(ctx: _Context) -> int:
    values = parse_set(ctx.read(ctx.args.set))
    count = counting.trilinear_count(values, ctx.args.r, ctx.args.Z)
    if ctx.args.format == "json-lines":
        ctx.write(json.dumps({"r": ctx.args.r, "Z": ctx.args.Z, "count": count}))
    else:
        ctx.write(str(count))
    return EXIT_OK


def _extremal(ctx: _Context) -> int:
    result = counting.fs_extremal(ctx.args.n, budget=ctx.budget(), method=ctx.args.method)
    ctx.emit(result)
    return EXIT_OK


def _weyl(ctx: _Context) -> int:
    args = ctx.args
    if args.theta is not None:
        ctx.emit(analytic.evaluate_weyl(args.theta, args.Nprime))
        return EXIT_OK

    report = analytic.weyl_envelope_report(args.Nprime, M=args.M, threads=args.threads)
    if args.out:
        report.to_csv(args.out, index=False)
    if args.plot:
        figure = plot_weyl_magnitudes(
            report["magnitude"].to_numpy(),
            report["trivial_bound"].iloc[0],
            title=f"|T(j/M)|, N'={args.Nprime}, M={len(report)}",
        )
        figure.savefig(args.plot)
    summary = {
        "n_prime": args.Nprime,
        "M": len(report),
        "trivial_violations": int((~report["trivial_ok"]).sum()),
        "envelope_violations": int((~report["envelope_ok"]).sum()),
    }
    if args.format == "json-lines":
        ctx.write(json.dumps(summary))
    else:
        ctx.write(" ".join(f"{key} {value}" for key, value in summary.items()))
    return EXIT_OK


def _increment(ctx: _Context) -> int:
    args = ctx.args
    values = parse_set(ctx.read(args.set))
    if not values:
        raise DomainError("the set file is empty.")
    N = args.N or values[-1]
    if args.iterate:
        ctx.emit(analytic.density_increment_iterate(values, N, threads=args.threads))
        return EXIT_OK
    if args.Nprime is None or args.Q0 is None:
        raise DomainError("--Nprime and --Q0 must be provided.")
    outcome = analytic.increment_search(
        values,
        N,
        args.Nprime,
        args.Q0,
        prefer_increment=args.prefer_increment,
        threads=args.threads,
    )
    ctx.emit(outcome)
    return EXIT_OK


def _trace(ctx: _Context) -> int:
    colouring = Colouring.from_text(ctx.read(ctx.args.colouring))
    ctx.emit(analytic.iteration_trace(colouring, threads=ctx.args.threads))
    return EXIT_OK


HANDLERS: Dict[str, Callable[[_Context], int]] = {
    "construct": _construct,
    "verify": _verify,
    "search": _search,
    "compute-s": _compute_s,
    "encode-cnf": _encode_cnf,
    "count": _count,
    "sqdiff": _sqdiff,
    "trilinear": _trilinear,
    "extremal": _extremal,
    "weyl": _weyl,
    "increment": _increment,
    "trace": _trace,
}


def _add_budget(parser: argparse.ArgumentParser):
    parser.add_argument("--budget-nodes", type=int, default=None)
    parser.add_argument("--budget-seconds", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sqcolour", description="Colourings without monochromatic x - y = z².")
    parser.add_argument("--format", choices=["text", "json-lines"], default=settings.output_format)
    parser.add_argument("--threads", type=int, default=settings.threads)
    parser.add_argument("--seed", type=int, default=settings.seed)
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)

    sub = commands.add_parser("construct", help="lower-bound colouring of [1, 2^(2^(k-1))]")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--out", default=None)

    sub = commands.add_parser("verify", help="find the least monochromatic solution")
    sub.add_argument("--colouring", default=None, help="colouring file, stdin when omitted")

    sub = commands.add_parser("search", help="k-colourability of [1, n], or S(k) without --n")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--engine", default="backtrack", help="backtrack, dpll, sat or a PySAT name")
    sub.add_argument("--emit-cnf", default=None)
    sub.add_argument("--no-symmetry-breaking", action="store_true")
    _add_budget(sub)

    sub = commands.add_parser("compute-s", help="exact S(k) or a certified lower bound")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--no-symmetry-breaking", action="store_true")
    _add_budget(sub)

    sub = commands.add_parser("encode-cnf", help="DIMACS CNF of the colouring problem")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--at-most-one", action="store_true")
    sub.add_argument("--out", default=None)

    sub = commands.add_parser("count", help="monochromatic solutions per colour class")
    sub.add_argument("--colouring", default=None)

    sub = commands.add_parser("sqdiff", help="#{x in r·[L] : x² in A - A}")
    sub.add_argument("--set", required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--L", type=int, required=True)

    sub = commands.add_parser("trilinear", help="#{x, y in A, z in r·[Z] : x - y = z²}")
    sub.add_argument("--set", required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--Z", type=int, required=True)

    sub = commands.add_parser("extremal", help="largest square-difference-free subset of [1, n]")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--method", choices=counting.extremal.METHODS, default="branch-and-bound")
    _add_budget(sub)

    sub = commands.add_parser("weyl", help="Weyl sums over the squares up to N'")
    sub.add_argument("--Nprime", type=int, required=True)
    sub.add_argument("--theta", default=None, help="j/M or a decimal; grid report when omitted")
    sub.add_argument("--M", type=int, default=None)
    sub.add_argument("--out", default=None, help="CSV of the grid report")
    sub.add_argument("--plot", default=None, help="PNG of |T| across the grid")

    sub = commands.add_parser("increment", help="increment trichotomy or the full iteration")
    sub.add_argument("--set", required=True)
    sub.add_argument("--N", type=int, default=None, help="ambient interval, max(A) when omitted")
    sub.add_argument("--Nprime", type=int, default=None)
    sub.add_argument("--Q0", type=int, default=None)
    sub.add_argument("--prefer-increment", action="store_true")
    sub.add_argument("--iterate", action="store_true")

    sub = commands.add_parser("trace", help="replay of the colour-class elimination")
    sub.add_argument("--colouring", default=None)
    return parser


def run(
    argv: Sequence[str], stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None
) -> int:
    """Runs one subcommand and returns its exit code.

    Results go to ``stdout``; diagnostics go to stderr. Exit codes: 0 on success (verdicts are
    data), 1 on domain and precondition errors, 2 on capacity limits and exhausted budgets, 64 on
    usage errors.
    """
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as error:
        sys.stderr.write(f"{error}\n")
        return EXIT_USAGE
    except SystemExit as exit_:
        return int(exit_.code or 0)
    if args.command is None:
        sys.stderr.write(parser.format_usage())
        return EXIT_USAGE

    # subcommands are deterministic; the seed is for scripts importing sqcolour
    np.random.seed(args.seed)
    try:
        return HANDLERS[args.command](_Context(args, stdin, stdout))
    except CapacityError as error:
        logger.error(f"{args.command}: {error}")
        sys.stderr.write(f"capacity error: {error}\n")
        return EXIT_CAPACITY
    except (DomainError, ValueError, OSError) as error:
        logger.error(f"{args.command}: {error}")
        sys.stderr.write(f"error: {error}\n")
        return EXIT_DOMAIN
