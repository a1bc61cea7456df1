# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/18/2026 09:05'
__version__ = '0.1.0'

from enum import Enum
from typing import Callable, Dict, Union

import numpy as np

from core.autodiff import Module, Node, ops

LEAKY_RELU_SLOPE = 0.01
GELU_COEFF = 0.044715
SQRT_2_OVER_PI = float(np.sqrt(2.0 / np.pi))


class ActivationKind(str, Enum):
    '''Fixed activations, also used as rational fit targets.'''

    IDENTITY = 'identity'
    RELU = 'relu'
    LEAKY_RELU = 'leaky_relu'
    GELU = 'gelu'
    SWISH = 'swish'


def relu(x: Node) -> Node:
    return ops.maximum(x, 0.0)


def leaky_relu(x: Node, alpha: float = LEAKY_RELU_SLOPE) -> Node:
    return ops.maximum(x, 0.0) - alpha * ops.maximum(-x, 0.0)


def sigmoid(x: Node) -> Node:
    '''Logistic function written with tanh, stable for large |x|.'''
    return 0.5 * (1.0 + ops.tanh(0.5 * x))


def swish(x: Node) -> Node:
    return x * sigmoid(x)


def gelu(x: Node) -> Node:
    '''Tanh approximation of GELU.'''
    return 0.5 * x * (1.0 + ops.tanh(SQRT_2_OVER_PI * (x + GELU_COEFF * x**3)))


def identity(x: Node) -> Node:
    return x


_NODE_FUNCTIONS: Dict[ActivationKind, Callable[[Node], Node]] = {
    ActivationKind.IDENTITY: identity,
    ActivationKind.RELU: relu,
    ActivationKind.LEAKY_RELU: leaky_relu,
    ActivationKind.GELU: gelu,
    ActivationKind.SWISH: swish,
}

_NUMPY_FUNCTIONS: Dict[ActivationKind, Callable[[np.ndarray], np.ndarray]] = {
    ActivationKind.IDENTITY: lambda x: x,
    ActivationKind.RELU: lambda x: np.maximum(x, 0.0),
    ActivationKind.LEAKY_RELU: lambda x: np.where(x >= 0.0, x, LEAKY_RELU_SLOPE * x),
    ActivationKind.GELU: lambda x: 0.5 * x * (1.0 + np.tanh(SQRT_2_OVER_PI * (x + GELU_COEFF * x**3))),
    ActivationKind.SWISH: lambda x: x * 0.5 * (1.0 + np.tanh(0.5 * x)),
}


def fixed_eval(kind: Union[ActivationKind, str], x: Node) -> Node:
    '''Apply a fixed activation to a node.'''
    return _NODE_FUNCTIONS[ActivationKind(kind)](x)


def fixed_numpy(kind: Union[ActivationKind, str], x: np.ndarray) -> np.ndarray:
    '''Apply a fixed activation to an array, used for fitting targets and Monte Carlo estimates.'''
    return _NUMPY_FUNCTIONS[ActivationKind(kind)](np.asarray(x, dtype=np.float64))


class FixedActivation(Module):
    '''Parameter-free activation site.'''

    def __init__(self, kind: Union[ActivationKind, str]) -> None:
        self.kind = ActivationKind(kind)

    def forward(self, x: Node) -> Node:
        return fixed_eval(self.kind, x)
