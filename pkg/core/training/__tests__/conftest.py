# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/21/2026 14:02'

import logging
from typing import Generator, Optional, Sequence, Tuple

import numpy as np
import pytest

from core.autodiff import Module, Node, ops


class AffineModel(Module):
    '''y = w * x + b with explicit starting values.'''

    def __init__(self, weight: float = 0.0, bias: float = 0.0) -> None:
        self.weight = Node(np.array([[weight]]), requires_grad=True)
        self.bias = Node(np.array([bias]), requires_grad=True)

    def forward(self, x: Node) -> Node:
        return x @ self.weight + self.bias


class PenaltyOnlyModel(Module):
    '''Constant zero output; only the penalty depends on the parameter.'''

    def __init__(self) -> None:
        self.weight = Node(np.array([1.0]), requires_grad=True)

    def forward(self, x: Node) -> Node:
        return x * 0.0

    def penalty(self) -> Optional[Node]:
        return ops.sum(self.weight**2)


class ScriptedModel(Module):
    '''Output follows a fixed per-call schedule; with zero targets the MSE of call k is losses[k].'''

    def __init__(self, losses: Sequence[float]) -> None:
        self.offsets = [float(np.sqrt(loss)) for loss in losses]
        self.calls = 0
        self.weight = Node(np.array([0.0]), requires_grad=True)

    def forward(self, x: Node) -> Node:
        offset = self.offsets[min(self.calls, len(self.offsets) - 1)]
        self.calls += 1
        return x * 0.0 + offset


@pytest.fixture
def rng() -> np.random.Generator:
    '''Seeded generator for reproducible inputs.'''
    return np.random.default_rng(31)


@pytest.fixture
def constant_data() -> Tuple[np.ndarray, np.ndarray]:
    '''500 points on [-1, 1] with constant target 0.5.'''
    inputs = np.linspace(-1.0, 1.0, 500).reshape(-1, 1)
    return inputs, np.full_like(inputs, 0.5)


@pytest.fixture(autouse=True)
def disable_logging() -> Generator:
    '''Temporarily disable logging during tests.'''
    logging.disable(logging.CRITICAL)
    yield
    logging.disable(logging.NOTSET)
