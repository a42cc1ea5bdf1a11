import argparse
import logging
import sys
from typing import List, Optional

from ..config import settings
from ..exceptions import AllocGridError
from . import evaluation, oracle, sweeps
from .output import emit

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Exact analysis of distributed storage allocations under probabilistic node access",
    )
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)
    evaluation.register(subparsers)
    oracle.register(subparsers)
    sweeps.register(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Exit codes: 0 success, 1 domain or validation error, 2 usage error"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    logging.basicConfig(
        level=logging.INFO if args.verbose else settings.LOG_LEVEL,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        output = args.handler(args)
    except (AllocGridError, ValueError) as e:
        # pydantic's ValidationError is a ValueError
        logger.debug(f"❌ {args.command} failed", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return 1

    emit(args.command, output, args.output_format)
    return 0
