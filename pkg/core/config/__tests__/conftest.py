# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/14/2026 21:38'

import os
import logging
from pathlib import Path
from typing import Generator

import pytest

from core.config import TypedConfig, EnvVariablePrefix


@EnvVariablePrefix('TST_')
class SampleRunConfiguration(TypedConfig):
    '''Small prefixed configuration shaped like the benchmark settings.'''

    WORKERS: int = 1
    LR: float = 0.001
    EARLY_STOP: bool = False
    OUT_DIR: Path = Path('results')
    SEEDS: list = [0, 1, 2]


@pytest.fixture
def config() -> TypedConfig:
    '''Fresh empty TypedConfig.'''
    return TypedConfig()


@pytest.fixture
def run_config(env_backup: None) -> SampleRunConfiguration:
    '''Fresh prefixed configuration with class defaults.'''
    for name in ('WORKERS', 'LR', 'EARLY_STOP', 'OUT_DIR', 'SEEDS'):
        os.environ.pop(f'TST_{name}', None)
    return SampleRunConfiguration()


@pytest.fixture
def env_backup() -> Generator:
    '''Save and restore environment variables.'''
    original_env = os.environ.copy()
    yield
    os.environ.clear()
    os.environ.update(original_env)


@pytest.fixture(autouse=True)
def disable_logging() -> Generator:
    '''Temporarily disable logging during tests.'''
    loggers = [logging.getLogger(name) for name in logging.root.manager.loggerDict]
    original_levels = {logger: logger.level for logger in loggers}
    for logger in loggers:
        logger.setLevel(logging.CRITICAL)
    yield
    for logger, level in original_levels.items():
        logger.setLevel(level)
