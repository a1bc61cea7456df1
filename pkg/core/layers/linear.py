# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/19/2026 09:20'
__version__ = '0.1.0'

from typing import Optional, Union

import numpy as np

from core.autodiff import Module, Node, ops
from .exceptions import LayerConfigError

SeedLike = Optional[Union[int, np.random.Generator]]


def check_features(layer: str, expected: int, x: Node) -> None:
    '''
    Validate the trailing feature dimension of a layer input.

    Raises:
        LayerConfigError: if the last dimension differs from `expected`
    '''
    if x.value.ndim == 0 or x.shape[-1] != expected:
        raise LayerConfigError(f'{layer} expects <{expected}> input features, got shape <{x.shape}>')


def linear_forward(weight: Node, bias: Optional[Node], x: Node) -> Node:
    '''W x + bias for x of shape (..., I) and W of shape (J, I).'''
    check_features('Linear', weight.shape[1], x)
    out = ops.matmul(x, ops.transpose(weight))
    return out if bias is None else out + bias


class Linear(Module):
    '''
    Dense layer with bias.

    Weights and bias are drawn from U(-1/sqrt(I), 1/sqrt(I)) unless set later
    by a specialised initializer.
    '''

    def __init__(self, in_features: int, out_features: int, seed: SeedLike = None, bias: bool = True) -> None:
        if in_features < 1 or out_features < 1:
            raise LayerConfigError(f'Linear dimensions must be positive, got <{in_features}, {out_features}>')
        rng = np.random.default_rng(seed)
        bound = 1.0 / np.sqrt(in_features)
        self.in_features = in_features
        self.out_features = out_features
        self.weight = Node(rng.uniform(-bound, bound, (out_features, in_features)), requires_grad=True, name='weight')
        self.bias = Node(rng.uniform(-bound, bound, out_features), requires_grad=True, name='bias') if bias else None

    def forward(self, x: Node) -> Node:
        return linear_forward(self.weight, self.bias, x)
