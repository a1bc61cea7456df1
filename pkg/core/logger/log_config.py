# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/15/2026 10:12'
__version__ = '0.1.0'

import logging
from enum import Enum
from typing import Optional

from core.config import TypedConfig, EnvVariablePrefix


class ELogColor(Enum):
    '''ANSI color codes.'''

    WHITE = '\033[0;37m'
    GREEN = '\033[0;32m'
    RED = '\033[38;5;196m'
    YELLOW = '\033[38;5;190m'
    GREY = '\033[38;5;242m'
    BOLD_RED = '\033[38;5;196;1m'
    RESET = '\033[0m'


@EnvVariablePrefix('GKB_')
class LoggingConfiguration(TypedConfig):
    '''Logger configuration, overridable with GKB_LOG_* environment variables.'''

    LOG_LEVEL: int = logging.INFO

    LOG_FILE_FORMAT: str = '%(asctime)s %(threadName)s/%(levelname)s/%(name)s: %(message)s'
    LOG_FILE_DATE_FORMAT: str = '%m-%d %H:%M:%S'
    LOG_CONSOLE_FORMAT: str = '%(asctime)s %(levelname)s/%(name)s: %(message)s'
    LOG_CONSOLE_DATE_FORMAT: str = '%H:%M:%S'

    LOG_FILE: str = 'grkan_bench.log'  # empty string disables the file handler
    LOG_DIR: str = 'logs'

    LOG_MAX_BYTES: int = 1024 * 1024 * 5  # 5 MB
    LOG_BACKUP_COUNT: int = 3

    LOG_USE_COLOR: bool = True
    LOG_COLOR_MAP: dict[int, str] = {
        logging.DEBUG: ELogColor.GREY.value,
        logging.INFO: ELogColor.WHITE.value,
        logging.WARNING: ELogColor.YELLOW.value,
        logging.ERROR: ELogColor.RED.value,
        logging.CRITICAL: ELogColor.BOLD_RED.value,
    }

    def __init__(self) -> None:
        super().__init__()
        self.set_loggers_level(self.LOG_LEVEL)

    @property
    def log_file(self) -> Optional[str]:
        '''File name for new loggers or None when file logging is off.'''
        return self.LOG_FILE or None

    def set_loggers_level_by_level_name(self, level_name: str) -> None:
        '''Set level of all existing loggers by level name, e.g. `DEBUG`.'''
        level = logging.getLevelName(level_name.upper())
        if not isinstance(level, int):
            raise ValueError(f'Invalid log level: <{level_name}>')
        self.set_loggers_level(level)

    def set_loggers_level(self, level: int) -> None:
        '''Set level of the root logger and every registered logger.'''
        self.LOG_LEVEL = level
        logging.root.setLevel(level)
        for logger in logging.Logger.manager.loggerDict.values():
            if isinstance(logger, logging.Logger):
                logger.setLevel(level)


if 'log_config' in __name__:
    LogConfig = LoggingConfiguration()
