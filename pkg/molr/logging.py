"""
Logging setup for molr.
File logging with rotation plus a console handler for warnings, configured
from the `logging` section of the configuration.
"""

import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from .config import Config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'


def setup_logging(config: Config) -> logging.Logger:
    """
    Setup logging system based on configuration.

    Args:
        config: Configuration object with logging settings

    Returns:
        Configured 'molr' logger
    """
    logger = logging.getLogger('molr')

    # Don't add handlers if they already exist (avoid duplicates)
    if logger.handlers:
        return logger

    settings = config.data.get('logging', {}) or {}
    log_level = getattr(logging, str(settings.get('level', 'INFO')).upper(), logging.INFO)
    logger.setLevel(log_level)

    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT)

    log_file = Path(settings.get('file', '~/.local/share/molr/molr.log')).expanduser()
    max_bytes = int(settings.get('max_size_mb', 10)) * 1024 * 1024
    backup_count = int(settings.get('backup_count', 5))
    try:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handler = RotatingFileHandler(log_file, maxBytes=max_bytes, backupCount=backup_count)
    except OSError:
        handler = None
    if handler is not None:
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    # Only warnings and errors reach the console
    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.WARNING)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if handler is None:
        logger.warning(f"Cannot write log file {log_file}; logging to console only")

    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get logger instance.

    Args:
        name: Optional child name (defaults to the package logger)

    Returns:
        Logger 'molr.<name>' or 'molr'
    """
    if name:
        return logging.getLogger(f'molr.{name}')
    return logging.getLogger('molr')
