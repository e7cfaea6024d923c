"""
Logging utilities
"""

import logging
import os
import sys
from pathlib import Path
from typing import Optional

from .constants import ENV_LOG_LEVEL

_FORMAT = '%(asctime)s | %(levelname)-8s | %(name)s | %(message)s'
_DATEFMT = '%Y-%m-%d %H:%M:%S'


def _resolve_level(level: Optional[str]) -> int:
    name = (level or os.getenv(ENV_LOG_LEVEL) or 'INFO').upper()
    return getattr(logging, name, logging.INFO)


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Get a configured logger instance

    Args:
        name: Logger name (usually __name__)
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        log_level = _resolve_level(level)
        logger.setLevel(log_level)

        handler = logging.StreamHandler(sys.stdout)
        handler.setLevel(log_level)
        handler.setFormatter(logging.Formatter(_FORMAT, datefmt=_DATEFMT))
        logger.addHandler(handler)

        # Prevent duplicate logs
        logger.propagate = False

    return logger


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """
    Set the level of every amspec logger and optionally mirror them to a file.

    Args:
        level: Logging level name; falls back to AMSPEC_LOG_LEVEL, then INFO
        log_file: Optional path of a UTF-8 log file
    """
    log_level = _resolve_level(level)
    file_handler = None
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(logging.Formatter(_FORMAT, datefmt=_DATEFMT))

    for name, logger in list(logging.Logger.manager.loggerDict.items()):
        if not name.startswith('amspec') or not isinstance(logger, logging.Logger):
            continue
        logger.setLevel(log_level)
        for handler in logger.handlers:
            handler.setLevel(log_level)
        if file_handler is not None:
            logger.addHandler(file_handler)
