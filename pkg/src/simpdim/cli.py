"""Command-line front end.

Every verb prints exact results on stdout (JSON, or CSV for tables);
errors go to stderr with exit code 1.
"""

import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from simpdim import __version__
from simpdim.complexes import FAMILY_KINDS, Complex, Graph, family
from simpdim.config import DEFAULT_THREADS, log_configuration, logger
from simpdim.experiments import LEVELS
from simpdim.formats import FORMATS, load_input, parse_p_grid, parse_rational, rows_to_csv
from simpdim.tools import (
    analyze,
    constants_table,
    enumerate_graphs,
    join_sources,
    level_set,
    profile_table,
    refine_complex,
    survey,
    trajectory_table,
    verify,
)
from simpdim.tools.analysis_tools import as_complex
from simpdim.tools.experiment_tools import OBJECTIVES, SURVEY_COLUMNS
from simpdim.tools.refinement_tools import CONSTANT_COLUMNS
from simpdim.tools.verify_tools import SUITE_ALIASES, SUITES
from simpdim.utils.json_encoder import exact_json_serializer


def _add_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="input", metavar="FILE", help="input file")
    source.add_argument(
        "--family",
        nargs="+",
        metavar="KIND",
        help=f"named complex, e.g. 'K 4' or 'Kmn 3 3' ({', '.join(FAMILY_KINDS)})",
    )
    parser.add_argument("--format", choices=FORMATS, help="input format (default: by suffix)")


def _load_source(args: argparse.Namespace) -> Union[Complex, Graph]:
    if args.family:
        kind, *params = args.family
        try:
            numbers = [int(value) for value in params]
        except ValueError:
            msg = f"Family parameters must be integers, got {params}"
            logger.error(msg)
            raise ValueError(msg) from None
        return family(kind, *numbers)
    return load_input(args.input, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simpdim",
        description="Exact average simplex cardinality, inductive dimension and Barycentric limits.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = verbs.add_parser("analyze", help="report every functional of a complex")
    _add_source(p)
    p.add_argument("--graph-dim", action="store_true", help="graph-level inductive dimension")
    p.add_argument("--decimal", type=int, metavar="K", help="add K-digit decimal fields")

    p = verbs.add_parser("join", help="join two complexes or graphs")
    p.add_argument("first", metavar="A")
    p.add_argument("second", metavar="B")
    p.add_argument("--format", choices=FORMATS, help="input format (default: by suffix)")
    p.add_argument("--graph-dim", action="store_true", help="graph-level inductive dimension")
    p.add_argument("--decimal", type=int, metavar="K", help="add K-digit decimal fields")

    p = verbs.add_parser("refine", help="iterate the Barycentric refinement")
    _add_source(p)
    p.add_argument("--steps", type=int, default=1)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--explicit", action="store_true", help="build the order complexes")
    mode.add_argument("--fvector", action="store_true", help="apply A_d to f-vectors (default)")

    p = verbs.add_parser("constants", help="limit constants C_d")
    p.add_argument("--max-d", type=int, default=10)
    p.add_argument("--min-d", type=int, default=0)
    p.add_argument("--csv", action="store_true", help="CSV instead of JSON")
    p.add_argument("--approx", action="store_true", help="high-precision decimals only")
    p.add_argument("--profile", type=int, metavar="D", help="eigenvector profile of A_D")
    p.add_argument("--decimal", type=int, metavar="K", help="digits of decimal columns")

    p = verbs.add_parser("survey", help="Erdős–Rényi survey of Dim+ - dim+/2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p-grid", required=True, metavar="A:B:STEPS")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--level", choices=LEVELS, default="graph")
    p.add_argument("--threads", type=int, default=DEFAULT_THREADS)
    p.add_argument("--decimal", type=int, metavar="K", help="digits of the decimal column")

    p = verbs.add_parser("enumerate", help="exhaustive search over labeled graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--maximize", choices=OBJECTIVES, default="delta")
    p.add_argument("--p", default="1/2", help="edge probability for --maximize average")
    p.add_argument("--level", choices=LEVELS, default="graph")
    p.add_argument("--level-set", metavar="P/Q", help="list d-varieties with this Dim+")
    p.add_argument("--variety-dim", type=int, default=1)
    p.add_argument("--list", action="store_true", help="graph6 listing of every maximizer")
    p.add_argument("--threads", type=int, default=DEFAULT_THREADS)

    p = verbs.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + tuple(SUITE_ALIASES))
    p.add_argument("--seed", type=int, default=0)

    p = verbs.add_parser("trajectory", help="Dim+ and moments along the refinement sequence")
    _add_source(p)
    p.add_argument("--steps", type=int, default=5)
    p.add_argument("--log-gap", action="store_true", help="add log|C_d - Dim+|")
    p.add_argument("--csv", action="store_true", help="CSV instead of JSON")
    p.add_argument("--decimal", type=int, metavar="K", help="digits of decimal columns")

    verbs.add_parser("serve", help="run the MCP server")
    return parser


def _emit_rows(rows: List[dict], as_csv: bool, columns: Optional[Sequence[str]] = None) -> None:
    if as_csv:
        sys.stdout.write(rows_to_csv(rows, columns))
    else:
        print(exact_json_serializer(rows))


def run(args: argparse.Namespace) -> int:
    """Dispatch one parsed command; returns the exit code."""
    if args.verb == "analyze":
        print(exact_json_serializer(analyze(_load_source(args), args.graph_dim, args.decimal)))
    elif args.verb == "join":
        first = load_input(args.first, args.format)
        second = load_input(args.second, args.format)
        print(exact_json_serializer(join_sources(first, second, args.graph_dim, args.decimal)))
    elif args.verb == "refine":
        G = as_complex(_load_source(args))
        print(exact_json_serializer(refine_complex(G, args.steps, explicit=args.explicit)))
    elif args.verb == "constants":
        if args.profile is not None:
            _emit_rows(profile_table(args.profile, args.decimal), args.csv)
        else:
            rows = constants_table(args.max_d, args.min_d, not args.approx, args.decimal)
            _emit_rows(rows, args.csv, CONSTANT_COLUMNS)
    elif args.verb == "survey":
        rows = survey(
            args.n,
            parse_p_grid(args.p_grid),
            args.samples,
            args.seed,
            args.level,
            args.threads,
            args.decimal,
        )
        _emit_rows(rows, True, SURVEY_COLUMNS)
    elif args.verb == "enumerate":
        if args.level_set is not None:
            result = level_set(args.n, parse_rational(args.level_set), args.variety_dim)
        else:
            result = enumerate_graphs(
                args.n,
                args.maximize,
                args.level,
                Fraction(parse_rational(args.p)),
                args.threads,
                args.list,
            )
        print(exact_json_serializer(result))
    elif args.verb == "verify":
        result = verify(args.suite, args.seed)
        print(exact_json_serializer(result))
        return 0 if result["passed"] else 1
    elif args.verb == "trajectory":
        G = as_complex(_load_source(args))
        _emit_rows(trajectory_table(G, args.steps, args.log_gap, args.decimal), args.csv)
    elif args.verb == "serve":
        from simpdim.server import start_server

        start_server()
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the command and map errors to exit code 1."""
    args = build_parser().parse_args(argv)
    log_configuration()
    logger.info(f"Running verb {args.verb}")
    try:
        return run(args)
    except (ValueError, ZeroDivisionError, OSError) as e:
        # FaceCapExceeded, InputFormatError, NotAFaceError and PoleError land here
        logger.error(f"{args.verb} failed: {e}")
        print(f"simpdim {args.verb}: error: {e}", file=sys.stderr)
        return 1

