# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/15/2026 11:20'
__version__ = '0.1.0'

import logging
from pathlib import Path
from typing import Optional, cast
from logging.handlers import RotatingFileHandler

from .log_config import LogConfig
from .custom_logger import CustomLogger
from .handlers import ColorStreamHandler

logging.setLoggerClass(CustomLogger)

# file logging is used by default
_DEFAULT = object()


def _log_dir() -> Path:
    '''Return a writable log directory, falling back to the working directory.'''
    for candidate in (Path(LogConfig.LOG_DIR), Path.cwd() / 'logs'):
        try:
            candidate.mkdir(parents=True, exist_ok=True)
            return candidate
        except OSError:
            continue
    return Path.cwd()


def getLogger(
    name: str, file: Optional[str] | object = _DEFAULT, propagate: bool = True, level: Optional[int] = None
) -> CustomLogger:
    '''
    Get logger with console and optional rotating file handler.

    Args:
        name: logger name, `__file__` is recommended
        file: log file name; defaults to `LogConfig.LOG_FILE`, None disables file logging
        propagate: add console handler and propagate records to ancestors
        level: logger level, `LogConfig.LOG_LEVEL` by default

    Raises:
        ValueError: if propagate is False and no file is set

    Example:

    .. code-block:: python

         from core.logger import getLogger

         log = getLogger(__file__)
         log.info('text')
         log.blank()
    '''
    file_name = LogConfig.log_file if file is _DEFAULT else cast(Optional[str], file)
    if not propagate and not file_name:
        raise ValueError('You must set file name if propagate is False!')

    logger = logging.getLogger(name)
    assert isinstance(logger, CustomLogger), f'Expected CustomLogger, got {type(logger)}'
    logger.setLevel(level or LogConfig.LOG_LEVEL)
    logger.handlers.clear()
    logger.propagate = propagate

    if propagate:
        handler: logging.Handler = ColorStreamHandler()
        handler.setFormatter(logging.Formatter(LogConfig.LOG_CONSOLE_FORMAT, datefmt=LogConfig.LOG_CONSOLE_DATE_FORMAT))
        logger.addHandler(handler)

    if file_name:
        log_name = file_name if file_name.endswith('.log') else f'{file_name}.log'
        handler = RotatingFileHandler(
            str(_log_dir() / log_name),
            maxBytes=LogConfig.LOG_MAX_BYTES,
            backupCount=LogConfig.LOG_BACKUP_COUNT,
            encoding='utf-8',
            delay=True,
        )
        handler.setFormatter(logging.Formatter(LogConfig.LOG_FILE_FORMAT, datefmt=LogConfig.LOG_FILE_DATE_FORMAT))
        logger.addHandler(handler)
    return logger
