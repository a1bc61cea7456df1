# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/24/2026 14:00'

import csv
import logging
from pathlib import Path
from typing import Generator, List

import pytest

from core.autodiff import Module, Node
from core.training import TrainConfig


class ZeroModel(Module):
    '''Scalar regressor that always predicts zero.'''

    def forward(self, x: Node) -> Node:
        return x * 0.0


def read_csv(path: Path) -> List[List[str]]:
    '''All rows of a CSV file, header included.'''
    with open(path, newline='') as stream:
        return list(csv.reader(stream))


@pytest.fixture
def quick_training() -> TrainConfig:
    '''A handful of steps, enough to exercise the benchmark plumbing.'''
    return TrainConfig(steps=3, checkpoints=1)


@pytest.fixture(autouse=True)
def disable_logging() -> Generator:
    '''Temporarily disable logging during tests.'''
    logging.disable(logging.CRITICAL)
    yield
    logging.disable(logging.NOTSET)
