# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/18/2026 13:02'

import logging
from typing import Generator

import numpy as np
import pytest

from core.activations import RationalCoeffs


@pytest.fixture
def rng() -> np.random.Generator:
    '''Seeded generator for reproducible random points.'''
    return np.random.default_rng(2026)


@pytest.fixture
def points(rng: np.random.Generator) -> np.ndarray:
    '''100 random points in [-3, 3].'''
    return rng.uniform(-3.0, 3.0, size=100)


@pytest.fixture
def random_coeffs(rng: np.random.Generator) -> RationalCoeffs:
    '''Generic (5, 4) rational coefficients.'''
    return RationalCoeffs(rng.normal(size=6), rng.normal(size=4))


@pytest.fixture(autouse=True)
def disable_logging() -> Generator:
    '''Temporarily disable logging during tests.'''
    logging.disable(logging.CRITICAL)
    yield
    logging.disable(logging.NOTSET)
