# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/20/2026 11:02'

import logging
from typing import Generator

import pytest

from core.signal_gen import SignalConfig


@pytest.fixture
def clean_config() -> SignalConfig:
    '''Default settings without additive noise.'''
    return SignalConfig(noise_std=0.0, seed=7)


@pytest.fixture(autouse=True)
def disable_logging() -> Generator:
    '''Temporarily disable logging during tests.'''
    logging.disable(logging.CRITICAL)
    yield
    logging.disable(logging.NOTSET)
