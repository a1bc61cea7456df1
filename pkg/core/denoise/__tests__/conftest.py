# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/22/2026 16:02'

import logging
from typing import Generator

import numpy as np
import pytest

from core.autodiff import Module, Node, ops
from core.training import TrainConfig


@pytest.fixture
def rng() -> np.random.Generator:
    '''Seeded generator for reproducible inputs.'''
    return np.random.default_rng(11)


@pytest.fixture
def short_training() -> TrainConfig:
    '''Few steps, enough to exercise the experiment plumbing.'''
    return TrainConfig(steps=4, checkpoints=2)


def generic_loss(model: Module, x: np.ndarray, seed: int = 0) -> Node:
    '''Random linear functional of the model output, nonzero for generic inputs.'''
    out = model(Node(x))
    weights = np.random.default_rng(seed).normal(size=out.shape)
    return ops.sum(out * weights)


@pytest.fixture(autouse=True)
def disable_logging() -> Generator:
    '''Temporarily disable logging during tests.'''
    logging.disable(logging.CRITICAL)
    yield
    logging.disable(logging.NOTSET)
