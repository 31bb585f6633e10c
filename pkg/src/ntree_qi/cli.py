"""
Command-line interface for ntree-qi.

Data goes to stdout, diagnostics and logs to stderr. Exit codes:
0 success / equivalent / valid, 1 not equivalent / input outside the class,
2 usage or I/O error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Type

from ntree_qi.census import census
from ntree_qi.classify import compare_graphs, gamma, qi_class, qi_equivalent, qi_equivalent_families
from ntree_qi.complex.generate import generate_random
from ntree_qi.complex.realize import realize
from ntree_qi.complex.simplicial import SimplicialComplex, complex_from_dict, dump_complex, parse_complex
from ntree_qi.complex.tn import validate_tn
from ntree_qi.config import Config
from ntree_qi.exceptions import (
    ComplexFormatError,
    GraphFormatError,
    InvalidGraphError,
    NotInTnError,
    NTreeError,
)
from ntree_qi.graphs.colored_graph import ColoredGraph, dump_graph, graph_to_dict, parse_graph, to_dot
from ntree_qi.graphs.minimize import minimize
from ntree_qi.storage import RepresentativeStore


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

LOG_FILE = "ntree-qi.log"


def setup_logging(debug: bool = False) -> None:
    """
    Configure logging on stderr.

    Args:
        debug: If True, enable debug-level logging and also write ntree-qi.log
    """
    level = logging.DEBUG if debug else logging.INFO
    format_str = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
    date_format = "%Y-%m-%d %H:%M:%S"

    logging.basicConfig(
        level=level,
        format=format_str,
        datefmt=date_format,
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)

    if debug:
        file_handler = logging.FileHandler(LOG_FILE)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(format_str, datefmt=date_format))
        logging.getLogger().addHandler(file_handler)


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser for CLI."""
    parser = argparse.ArgumentParser(
        prog="ntree-qi",
        description="Quasi-isometry classification of right-angled n-tree groups",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ntree-qi validate complex.json               Check membership in T_n
  ntree-qi gamma complex.json --format dot     Labelled graph as DOT
  ntree-qi compare a.json b.json               Decide quasi-isometry
  ntree-qi census --dimension 2 --max-pieces 6 Count classes (63 for n=2, k<=6)
  ntree-qi generate --dimension 2 --pieces 4 --seed 7
        """
    )

    parser.add_argument(
        "--debug",
        action="store_true",
        help=f"Debug logging (also written to {LOG_FILE})"
    )

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    validate_parser = subparsers.add_parser("validate", help="Check that a complex lies in T_n")
    validate_parser.add_argument("complex", help="Complex JSON file")
    validate_parser.add_argument("--format", choices=["json", "text"], default="json")

    gamma_parser = subparsers.add_parser("gamma", help="Print the labelled graph of a complex")
    gamma_parser.add_argument("complex", help="Complex JSON file")
    gamma_parser.add_argument("--format", choices=["json", "dot"], default=None)

    minimize_parser = subparsers.add_parser("minimize", help="Minimal graph and quotient map")
    minimize_parser.add_argument("graph", help="Graph JSON file")
    minimize_parser.add_argument("--format", choices=["json", "dot"], default=None)

    compare_parser = subparsers.add_parser("compare", help="Decide quasi-isometry of two inputs")
    compare_parser.add_argument("first", help="Complex (or graph) JSON file")
    compare_parser.add_argument("second", help="Complex (or graph) JSON file")
    compare_parser.add_argument("--graphs", action="store_true", help="Inputs are graph JSON")
    compare_parser.add_argument(
        "--no-permutation", action="store_true", help="Do not reorder P-colors"
    )

    families_parser = subparsers.add_parser(
        "compare-families", help="Compare free products given as lists of complexes"
    )
    families_parser.add_argument("first", help="JSON array of complexes")
    families_parser.add_argument("second", help="JSON array of complexes")

    classify_parser = subparsers.add_parser("classify", help="Print the quasi-isometry class")
    classify_parser.add_argument("complex", help="Complex JSON file")

    census_parser = subparsers.add_parser("census", help="Count quasi-isometry classes")
    census_parser.add_argument("--dimension", type=_positive, required=True)
    census_parser.add_argument("--max-pieces", type=_positive, required=True)
    census_parser.add_argument("--jobs", type=_positive, default=None, help="Worker processes")
    census_parser.add_argument("--dump", default=None, help="Directory for representatives")
    census_parser.add_argument(
        "--no-abelian", action="store_true", help="Leave the abelian class out of the total"
    )

    realize_parser = subparsers.add_parser("realize", help="Build a complex from a colored tree")
    realize_parser.add_argument("graph", help="Graph JSON file")

    generate_parser = subparsers.add_parser("generate", help="Random complex in T_n")
    generate_parser.add_argument("--dimension", type=_positive, required=True)
    generate_parser.add_argument("--pieces", type=_positive, required=True)
    generate_parser.add_argument("--seed", type=_seed, required=True)
    generate_parser.add_argument("--maximally-branched", action="store_true")
    generate_parser.add_argument("--colors", type=_positive, default=None)

    return parser


def _read(path: str, error: Type[NTreeError] = ComplexFormatError) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise error(f"{path} is not valid UTF-8: {e}") from e


def _load_complex(path: str) -> SimplicialComplex:
    return parse_complex(_read(path))


def _load_graph(path: str) -> ColoredGraph:
    return parse_graph(_read(path, GraphFormatError))


def _load_family(path: str) -> List[SimplicialComplex]:
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise ComplexFormatError(f"malformed family JSON: {e}") from e
    if not isinstance(data, list):
        raise ComplexFormatError("a family must be a JSON array of complexes")
    return [complex_from_dict(entry) for entry in data]


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_validate(args: argparse.Namespace, config: Config) -> int:
    complex_ = _load_complex(args.complex)
    try:
        tree = validate_tn(complex_)
    except NotInTnError as e:
        if args.format == "json":
            _emit(json.dumps(e.to_dict()))
        else:
            _emit(f"invalid: {e}")
        print(f"Error: complex is not in T_{complex_.dimension}: {e}", file=sys.stderr)
        return EXIT_NEGATIVE

    if args.format == "json":
        _emit(json.dumps({"dimension": complex_.dimension, **tree.to_dict()}))
    else:
        _emit(
            f"valid: T_{complex_.dimension} complex with {len(tree.simplices)} simplices "
            f"and {len(tree.faces)} shared faces"
        )
    return EXIT_OK


def _cmd_gamma(args: argparse.Namespace, config: Config) -> int:
    complex_ = _load_complex(args.complex)
    validate_tn(complex_)
    if len(complex_) == 1:
        print("Note: a single simplex has no pieces (abelian class)", file=sys.stderr)
        graph = ColoredGraph.build(complex_.dimension, [], [])
    else:
        graph = gamma(complex_)
    _emit(to_dot(graph) if (args.format or config.output_format) == "dot" else dump_graph(graph))
    return EXIT_OK


def _cmd_minimize(args: argparse.Namespace, config: Config) -> int:
    result = minimize(_load_graph(args.graph))
    if (args.format or config.output_format) == "dot":
        _emit(to_dot(result.graph, name="minimal"))
    else:
        _emit(json.dumps({"graph": graph_to_dict(result.graph), "map": result.covering.as_dict()}))
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace, config: Config) -> int:
    allow_permutation = not args.no_permutation
    if args.graphs:
        certificate = compare_graphs(_load_graph(args.first), _load_graph(args.second), allow_permutation)
    else:
        certificate = qi_equivalent(
            _load_complex(args.first), _load_complex(args.second), allow_permutation
        )
    _emit(json.dumps(certificate.to_dict()))
    print(certificate.reason, file=sys.stderr)
    return EXIT_OK if certificate.equivalent else EXIT_NEGATIVE


def _cmd_compare_families(args: argparse.Namespace, config: Config) -> int:
    certificate = qi_equivalent_families(_load_family(args.first), _load_family(args.second))
    _emit(json.dumps(certificate.to_dict()))
    return EXIT_OK if certificate.equivalent else EXIT_NEGATIVE


def _cmd_classify(args: argparse.Namespace, config: Config) -> int:
    _emit(qi_class(_load_complex(args.complex)).to_json())
    return EXIT_OK


def _cmd_census(args: argparse.Namespace, config: Config) -> int:
    report = census(
        args.dimension,
        args.max_pieces,
        include_abelian=config.include_abelian and not args.no_abelian,
        jobs=args.jobs or config.census_jobs,
    )
    dump_dir = args.dump or config.dump_dir
    if dump_dir:
        RepresentativeStore(dump_dir).write(report)
    _emit(report.to_json())
    return EXIT_OK


def _cmd_realize(args: argparse.Namespace, config: Config) -> int:
    _emit(dump_complex(realize(_load_graph(args.graph))))
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace, config: Config) -> int:
    complex_ = generate_random(
        args.dimension,
        args.pieces,
        args.seed,
        maximally_branched=args.maximally_branched,
        colors_used=args.colors,
    )
    _emit(dump_complex(complex_))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, Config], int]] = {
    "validate": _cmd_validate,
    "gamma": _cmd_gamma,
    "minimize": _cmd_minimize,
    "compare": _cmd_compare,
    "compare-families": _cmd_compare_families,
    "classify": _cmd_classify,
    "census": _cmd_census,
    "realize": _cmd_realize,
    "generate": _cmd_generate,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Args:
        argv: Command line arguments (uses sys.argv if None)

    Returns:
        Exit code (0 success, 1 negative decision or invalid input, 2 usage/I-O error)
    """
    parser = create_parser()
    try:
        parsed = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if not parsed.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        config = Config.from_env()
        for warning in config.validate():
            print(f"Warning: {warning}", file=sys.stderr)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(debug=parsed.debug or config.debug)

    try:
        return COMMANDS[parsed.command](parsed, config)
    except NotInTnError as e:
        print(json.dumps(e.to_dict()), file=sys.stderr)
        return EXIT_NEGATIVE
    except InvalidGraphError as e:
        print(f"Error: invalid graph: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    except NTreeError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE


def main() -> None:
    """Console entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
