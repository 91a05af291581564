#!/usr/bin/env python3
"""
Logging setup for the whitealg command line.

Diagnostics go to stderr so stdout carries only results.
"""

import logging
import sys

DATE_FMT = "%Y-%m-%d %H:%M:%S"
LOG_FMT = "%(asctime)s  %(levelname)8s: %(message)s"


def setup_logging(level: str = "WARNING", fmt: str = LOG_FMT) -> logging.Logger:
    """
    Configure the package logger with a single stderr handler.

    Args:
        level: Level name such as DEBUG or WARNING
        fmt: Message format

    Returns:
        The configured ``src`` logger
    """
    logger = logging.getLogger("src")
    numeric = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {level}")
    logger.setLevel(numeric)

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(fmt, DATE_FMT))
    logger.addHandler(handler)
    logger.propagate = False
    return logger
