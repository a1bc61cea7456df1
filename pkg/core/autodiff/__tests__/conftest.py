# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/16/2026 13:02'

import logging
from typing import Generator

import numpy as np
import pytest


@pytest.fixture
def rng() -> np.random.Generator:
    '''Seeded generator for reproducible random points.'''
    return np.random.default_rng(1234)


@pytest.fixture
def points(rng: np.random.Generator) -> np.ndarray:
    '''100 random points in [-3, 3].'''
    return rng.uniform(-3.0, 3.0, size=100)


@pytest.fixture(autouse=True)
def disable_logging() -> Generator:
    '''Temporarily disable logging during tests.'''
    logging.disable(logging.CRITICAL)
    yield
    logging.disable(logging.NOTSET)
