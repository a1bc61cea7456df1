# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/21/2026 09:30'

from enum import Enum
from typing import Callable, Union

from core.autodiff import Node, ShapeMismatchError, as_node, ops
from core.autodiff.node import ArrayLike

LossFunction = Callable[[Node, ArrayLike], Node]


class LossKind(str, Enum):
    MSE = 'mse'
    L1 = 'l1'


def _check_lengths(name: str, pred: Node, target: Node) -> None:
    if pred.shape != target.shape:
        raise ShapeMismatchError(name, pred.shape, target.shape, 'prediction and target lengths differ')


def mse_loss(pred: Node, target: ArrayLike) -> Node:
    '''Mean of squared differences.'''
    target = as_node(target)
    _check_lengths('mse_loss', pred, target)
    return ops.mean((pred - target) ** 2)


def l1_loss(pred: Node, target: ArrayLike) -> Node:
    '''Mean absolute difference.'''
    target = as_node(target)
    _check_lengths('l1_loss', pred, target)
    return ops.mean(ops.absolute(pred - target))


def get_loss(kind: Union[LossKind, str]) -> LossFunction:
    return {LossKind.MSE: mse_loss, LossKind.L1: l1_loss}[LossKind(kind)]
