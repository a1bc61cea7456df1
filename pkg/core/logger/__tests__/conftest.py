# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/15/2026 12:02'

import logging
import tempfile
from pathlib import Path
from typing import Generator

import pytest


class LogCaptureHandler(logging.Handler):
    '''Handler that captures formatted messages.'''

    def __init__(self) -> None:
        super().__init__()
        self.messages: list[str] = []

    def emit(self, record: logging.LogRecord) -> None:
        self.messages.append(self.format(record))


@pytest.fixture
def temp_log_dir() -> Generator[Path, None, None]:
    '''Temporary directory for log files.'''
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def mock_log_config(monkeypatch: pytest.MonkeyPatch, temp_log_dir: Path) -> Path:
    '''
    Point LogConfig at a temporary directory.

    Returns:
        Log directory used by new loggers
    '''
    from core.logger.log_config import LogConfig

    logs_dir = temp_log_dir / 'logs'
    cache = dict(LogConfig._cache)
    cache.update({'LOG_DIR': str(logs_dir), 'LOG_FILE': 'bench_test.log', 'LOG_LEVEL': logging.INFO})
    monkeypatch.setattr(LogConfig, '_cache', cache)
    return logs_dir


@pytest.fixture
def log_capture_handler() -> LogCaptureHandler:
    '''Handler with message-only format.'''
    handler = LogCaptureHandler()
    handler.setFormatter(logging.Formatter('%(message)s'))
    return handler
