"""Logging setup for triplecover.

Standard output carries the JSON reports, so log records only ever go to
stderr and, on request, to a rotating file under ``./logs``.
"""
from __future__ import annotations

import logging
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
_MAX_BYTES = 5 * 1024 * 1024
_BACKUPS = 5


def get_log_directory() -> Path:
    log_dir = Path.cwd() / "logs"
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir


def _file_handler(formatter: logging.Formatter) -> RotatingFileHandler:
    path = get_log_directory() / f"triplecover_{datetime.now():%Y%m%d}.log"
    handler = RotatingFileHandler(path, maxBytes=_MAX_BYTES, backupCount=_BACKUPS, encoding="utf-8")
    handler.setFormatter(formatter)
    return handler


def setup_logging(level: int = logging.WARNING, to_file: bool = False) -> Optional[Path]:
    """Replace the root handlers with a stderr handler and an optional file handler.

    Returns:
        Path of the log file, or None when file logging is off.
    """
    root = logging.getLogger()
    root.setLevel(level)
    for handler in root.handlers[:]:
        root.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(_LOG_FORMAT, _DATE_FORMAT)
    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(formatter)
    root.addHandler(console)

    if not to_file:
        return None
    handler = _file_handler(formatter)
    root.addHandler(handler)
    return Path(handler.baseFilename)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
