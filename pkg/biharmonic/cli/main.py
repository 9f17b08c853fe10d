"""Command-line entry point: ``biharmonic <command> ...``."""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, TextIO

from biharmonic import __version__
from biharmonic.cli.commands import (
    EXIT_ERROR,
    EXIT_NOT_SPHERE_MAP,
    EXIT_PARSE,
    EXIT_ROUTE_DISAGREEMENT,
    run_analyze,
    run_construct,
    run_emit_curve,
    run_gallery,
    run_init_config,
    run_verify_paper,
)
from biharmonic.config_manager import LOG_LEVELS, ConfigManager
from biharmonic.errors import (
    BiharmonicError,
    NotASphereMap,
    ParseError,
    RouteDisagreement,
    UnknownName,
    describe,
)
from biharmonic.report_utils import MessageType, tool_message

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, TextIO], int]

HANDLERS: Dict[str, Handler] = {
    "analyze": run_analyze,
    "construct": run_construct,
    "gallery": run_gallery,
    "verify-paper": run_verify_paper,
    "emit-curve": run_emit_curve,
    "init-config": run_init_config,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biharmonic",
        description="Exact harmonic and biharmonic analysis of polynomial sphere maps.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        type=str.upper,
        default=None,
        help="Overrides logging.level from biharmonic.yml",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="Classify a map")
    analyze.add_argument("source", help="Gallery name, construction or [p1, ...]")
    output = analyze.add_mutually_exclusive_group()
    output.add_argument("--json", dest="human", action="store_false")
    output.add_argument("--human", dest="human", action="store_true")
    analyze.set_defaults(human=False)
    analyze.add_argument("--seed", type=int, default=None)
    analyze.add_argument("--points", type=int, default=None)
    analyze.add_argument("--tol", type=float, default=None)

    construct = commands.add_parser("construct", help="Build and print a map")
    construct.add_argument("expression")
    shape = construct.add_mutually_exclusive_group()
    shape.add_argument("--print", dest="json", action="store_false")
    shape.add_argument("--json", dest="json", action="store_true")
    construct.set_defaults(json=False)

    gallery = commands.add_parser("gallery", help="List the named maps")
    gallery.add_argument("--json", action="store_true")

    verify = commands.add_parser("verify-paper", help="Run the verification battery")
    verify.add_argument("--filter", default=None, help="Substring or glob on check ids")
    verify.add_argument("--workers", type=int, default=None)

    curve = commands.add_parser("emit-curve", help="Sample a map from S^1 into R^4")
    curve.add_argument("source")
    curve.add_argument("--samples", type=int, default=256)
    curve.add_argument("--out", default=None, help="CSV path; stdout when omitted")

    init_config = commands.add_parser("init-config", help="Write biharmonic.yml")
    init_config.add_argument("--overwrite", action="store_true")
    return parser


def configure_logging(level: Optional[str]) -> None:
    if level is None:
        level = ConfigManager.get_settings()["logging"]["level"]
    logging.basicConfig(
        stream=sys.stderr,
        level=level.upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )


def exit_code_for(error: BiharmonicError) -> int:
    if isinstance(error, (ParseError, UnknownName)):
        return EXIT_PARSE
    if isinstance(error, NotASphereMap):
        return EXIT_NOT_SPHERE_MAP
    if isinstance(error, RouteDisagreement):
        return EXIT_ROUTE_DISAGREEMENT
    return EXIT_ERROR


def wants_json(args: argparse.Namespace) -> bool:
    if args.command == "analyze":
        return not args.human
    return bool(getattr(args, "json", False))


def error_payload(error: BiharmonicError) -> Dict[str, Any]:
    return tool_message(
        success=False,
        message=error.message,
        error_details=error.error_details,
        data=error.to_dict(),
        message_type=MessageType.ERROR,
    )


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return HANDLERS[args.command](args, out)
    except BiharmonicError as error:
        logger.debug(f"{args.command} failed", exc_info=True)
        if wants_json(args):
            out.write(json.dumps(error_payload(error), indent=2) + "\n")
        else:
            sys.stderr.write(describe(error) + "\n")
        return exit_code_for(error)


if __name__ == "__main__":
    sys.exit(main())
