#!/usr/bin/env python3
"""
whitealg - Main Entry Point

Exact rational computations in Whitehead algebras of suspensions: rank tables,
Hurewicz lifts and automorphism groups of truncations.

Exit status is 0 on success, 1 on a computation error and 2 on a usage error.
"""

import sys
from pathlib import Path
from typing import Optional, Sequence

# Add the project root to the Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli.arguments import parse_args  # noqa: E402
from src.cli.output import FORMAT_TABLE, render  # noqa: E402
from src.config.config_manager import ConfigManager  # noqa: E402
from src.config.logging_config import LOG_FMT, setup_logging  # noqa: E402
from src.controllers.computation_controller import ComputationController  # noqa: E402
from src.errors import UsageError, WhiteAlgError  # noqa: E402

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main application entry point."""
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE

    config_manager = ConfigManager()
    try:
        logging_config = config_manager.get_logging_config()
        level = "DEBUG" if args.verbose else logging_config.get("level", "WARNING")
        logger = setup_logging(level, logging_config.get("format", LOG_FMT))
    except (OSError, ValueError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE

    output_format = (
        args.output
        or config_manager.get_output_config().get("format")
        or FORMAT_TABLE
    )
    try:
        controller = ComputationController(config_manager, degree_cap=args.degree_cap)
        result = controller.run(args)
        text = render(result, output_format, args.notation)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except WhiteAlgError as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_COMPUTATION
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTATION

    print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
