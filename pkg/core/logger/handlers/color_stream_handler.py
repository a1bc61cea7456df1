# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/15/2026 11:05'
__version__ = '0.1.0'

import logging
from typing import Optional, TextIO
from typing_extensions import override

from ..log_config import LogConfig, ELogColor


class ColorStreamHandler(logging.StreamHandler):
    '''Stream handler which colors records by level.'''

    def __init__(self, stream: Optional[TextIO] = None) -> None:
        super().__init__(stream)

    def colorize(self, message: str, levelno: int) -> str:
        '''Wrap message in level color; the leading timestamp stays uncolored.'''
        if not LogConfig.LOG_USE_COLOR or not message:
            return message
        color = LogConfig.LOG_COLOR_MAP.get(levelno, ELogColor.WHITE.value)
        space = max(message.find(' '), 0)
        return f'{message[:space]}{color}{message[space:]}{ELogColor.RESET.value}'

    @override
    def emit(self, record: logging.LogRecord) -> None:
        try:
            self.stream.write(self.colorize(self.format(record), record.levelno) + self.terminator)
            self.flush()
        except RecursionError:
            raise
        except Exception:
            self.handleError(record)
