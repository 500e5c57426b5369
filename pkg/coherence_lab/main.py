"""Command-line entry point.

Builds the parser, runs one command and maps library errors to exit codes:
0 success, 2 validation failure, 3 classifier disagreement, 1 otherwise.
"""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError as SettingsValidationError

from coherence_lab import __version__
from coherence_lab.cli.router import add_global_options, register_commands
from coherence_lab.core.config import Settings, get_settings
from coherence_lab.core.exceptions import CoherenceLabError, ConfigurationError
from coherence_lab.core.logging_config import configure_logging

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """Create the top-level parser with every sub-command registered."""
    parser = argparse.ArgumentParser(
        prog="coherence-lab",
        description="Maximally coherent states, coherence measures and incoherent channels",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    add_global_options(parser)
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    register_commands(subparsers)
    return parser


def load_settings() -> Settings:
    """Load settings, reporting bad COHERENCE_LAB_* values as a ConfigurationError."""
    try:
        return get_settings()
    except SettingsValidationError as exc:
        problems = "; ".join(
            f"COHERENCE_LAB_{'.'.join(str(part) for part in err['loc'])}: {err['msg']}"
            for err in exc.errors()
        )
        raise ConfigurationError(problems) from exc


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    args = create_parser().parse_args(argv)
    
    try:
        settings = load_settings()
        configure_logging("DEBUG" if args.verbose else settings.LOG_LEVEL)
        result = args.handler(args)
    except CoherenceLabError as exc:
        print(f"error: {exc.__class__.__name__}: {exc.message}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:
        logger.debug("unexpected failure in %s", args.command, exc_info=True)
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 1
    
    if args.json:
        print(result.certificate.model_dump_json(indent=2))
    else:
        print("\n".join(result.lines))
    return 0


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
