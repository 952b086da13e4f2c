"""Command-line entry point: lsts <subcommand> [options]"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from loguru import logger

from .. import __version__
from ..config import load_config
from ..exceptions import FormatError, GuardExceededError, LSTSError, PreconditionError
from .commands import UsageError
from .recorder import RunRecorder, compare_runs, load_manifest
from .schemas import RunManifest

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _fraction(value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/20 or 0.05, got {value!r}")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    common.add_argument("--threads", type=int, default=None, help="cap on internal parallelism")
    common.add_argument("--config", default=None, help="YAML config file (default: config/config.yaml)")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    common.add_argument("--manifest-out", default=None, help="also write the run manifest to this file")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="lsts",
        description="Locally sparse triple systems: construct, check, search and certify",
    )
    parser.add_argument("--version", action="version", version=f"lsts {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="greedy H_t packing lifted to triples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="consecutive failures before stopping")
    p.add_argument("--cascade", action="store_true", default=None, help="finish the leftover with t=1")
    p.add_argument("--out", required=True, help=".3g file; a .json summary is written next to it")

    p = sub.add_parser("check", parents=[common], help="search for a forbidden configuration")
    p.add_argument("--file", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--family", action="append", default=None, metavar="K,S",
                   help="forbidden pair; repeat for a union of families")

    p = sub.add_parser("profile", parents=[common], help="codegree class sizes")
    p.add_argument("--file", required=True)

    p = sub.add_parser("oracle", parents=[common], help="exact f(n; k, s) on tiny n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--upper-hint", type=int, default=None)
    p.add_argument("--any-witness", action="store_true")

    p = sub.add_parser("bounds", parents=[common], help="exact LP bounds with certificates")
    p.add_argument("--problem", choices=["five-three", "six-four", "averaging"], required=True)
    p.add_argument("--b", type=_fraction, default=Fraction(1), help="five-three right-hand side")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("analyze", parents=[common], help="audit a system against the proof inequalities")
    p.add_argument("--file", required=True)
    p.add_argument("--audit", choices=["five-three", "six-four", "injection", "classify"], required=True)

    p = sub.add_parser("reproduce", parents=[common], help="construct, verify and measure a dense (5,3)-free system")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--eps", type=_fraction, default=None)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--cascade", action="store_true", default=None)
    p.add_argument("--sweep", default=None, metavar="N1,N2,...", help="density trajectory at fixed --t")
    p.add_argument("--out", default=None, help="CSV file for --sweep")

    p = sub.add_parser("replay", help="re-run a recorded command and compare its outputs")
    p.add_argument("--manifest", required=True)
    p.add_argument("--verbose", action="store_true")
    return parser


def setup_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level, format="{time:HH:mm:ss} | {level: <8} | {name} - {message}")


def _configure(args) -> dict:
    config = load_config(args.config)
    if args.threads is not None:
        if args.threads < 1:
            raise UsageError("--threads", f"must be at least 1, got {args.threads}")
        for section in ("checker", "oracle"):
            config.setdefault(section, {})["threads"] = args.threads
    return config


def _fail(message: str, code: int) -> Tuple[int, str, Optional[RunManifest]]:
    print(f"lsts: error: {message}", file=sys.stderr)
    return code, "", None


def run(argv: List[str]) -> Tuple[int, str, Optional[RunManifest]]:
    """
    Parse and execute one command without printing its result

    Returns:
        (exit code, standard output text, manifest or None when the run failed early)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), "", None

    if args.command == "replay":
        setup_logging("DEBUG" if args.verbose else "INFO")
        return replay(Path(args.manifest))

    try:
        config = _configure(args)
    except UsageError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except (FileNotFoundError, ValueError) as exc:
        return _fail(f"--config: {exc}", EXIT_USAGE)
    setup_logging("DEBUG" if args.verbose else config.get("logging", {}).get("level", "INFO"))

    try:
        result, manifest = RunRecorder(config).call(args, argv)
    except UsageError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except PreconditionError as exc:
        return _fail(f"precondition violated: {exc}", EXIT_FAILED)
    except FormatError as exc:
        return _fail(f"{getattr(args, 'file', '')}: {exc}", EXIT_USAGE)
    except FileNotFoundError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except (GuardExceededError, ValueError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    except LSTSError as exc:
        return _fail(str(exc), EXIT_FAILED)
    return result.exit_code, result.stdout, manifest


def replay(path: Path) -> Tuple[int, str, Optional[RunManifest]]:
    """Re-run a recorded command; exit 0 when every digest matches"""
    try:
        recorded = load_manifest(path)
    except FileNotFoundError as exc:
        return _fail(f"--manifest: {exc}", EXIT_USAGE)
    except ValueError as exc:
        return _fail(f"--manifest: not a run manifest: {exc}", EXIT_USAGE)

    logger.info(f"replaying lsts {' '.join(recorded.argv)}")
    _, _, replayed = run(list(recorded.argv))
    if replayed is None:
        return EXIT_FAILED, "replay failed before producing output\n", None

    problems = compare_runs(recorded, replayed)
    if problems:
        return EXIT_FAILED, "different\n" + "".join(f"  {p}\n" for p in problems), replayed
    return EXIT_OK, "identical\n", replayed


def main(argv: Optional[List[str]] = None) -> int:
    code, stdout, _ = run(sys.argv[1:] if argv is None else list(argv))
    sys.stdout.write(stdout)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
