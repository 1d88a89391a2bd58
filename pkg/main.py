#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Piecewise complexity toolkit
Entry point: logging setup, then the command line
"""

import os
import sys
import logging
from pathlib import Path

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logger = logging.getLogger(__name__)


def ensure_log_level():
    """Parse PIECEWISE_LOG_LEVEL, exiting on an unknown level name"""
    name = os.environ.get("PIECEWISE_LOG_LEVEL", "WARNING").strip().upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        logger.error(f"Error: PIECEWISE_LOG_LEVEL={name!r} is not a logging level.")
        logger.error("Use one of DEBUG, INFO, WARNING, ERROR, CRITICAL.")
        sys.exit(1)
    return level


def configure_logging():
    # Results own standard output, so every log record goes to standard error
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = os.environ.get("PIECEWISE_LOG_FILE")
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(format=LOG_FORMAT, level=logging.WARNING, handlers=handlers)
    logging.getLogger().setLevel(ensure_log_level())


def main():
    configure_logging()
    from cli import run
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
