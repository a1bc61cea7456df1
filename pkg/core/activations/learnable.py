# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/18/2026 11:40'
__version__ = '0.1.0'

from typing import Optional, Union

import numpy as np

from core.autodiff import Module, Node, ops

PRELU_INIT = 0.25
APL_HINGES = 5
APL_PENALTY = 0.001
APL_SLOPE_INIT = 0.2
APL_OFFSET_INIT = 1.0


def prelu_eval(a: Node, x: Node) -> Node:
    '''x for x >= 0, a * x otherwise.'''
    return ops.maximum(x, 0.0) - a * ops.maximum(-x, 0.0)


def apl_eval(slopes: Node, offsets: Node, x: Node) -> Node:
    '''
    Adaptive piecewise linear unit max(0, x) + sum_s a_s * max(0, -x + b_s).

    Args:
        slopes: hinge slopes (S, H)
        offsets: hinge offsets (S, H)
        x: input (N, H)
    '''
    xs = ops.reshape(x, (1, *x.shape))
    hinge = ops.maximum(_expand(offsets, x) - xs, 0.0)
    return ops.maximum(x, 0.0) + ops.sum(_expand(slopes, x) * hinge, axis=0)


def _expand(params: Node, x: Node) -> Node:
    '''(S, H) hinge parameters broadcast against (1, ..., H) inputs.'''
    middle = (1,) * (x.value.ndim - 1)
    return ops.reshape(params, (params.shape[0], *middle, params.shape[-1]))


def apl_l2_penalty(
    slopes: Union[Node, np.ndarray], offsets: Union[Node, np.ndarray], weight: float = APL_PENALTY
) -> Node:
    '''
    L2 penalty weight * sum(a^2 + b^2) over all units.

    Raises:
        ValueError: if weight is negative
    '''
    if weight < 0:
        raise ValueError(f'APL penalty weight must be >= 0, got <{weight}>')
    return weight * (ops.sum(ops.power(slopes, 2.0)) + ops.sum(ops.power(offsets, 2.0)))


class PReLU(Module):
    '''Leaky ReLU with a single learnable negative slope per site.'''

    def __init__(self, init: float = PRELU_INIT) -> None:
        self.slope = Node(np.array(init), requires_grad=True, name='slope')

    def forward(self, x: Node) -> Node:
        return prelu_eval(self.slope, x)


class APL(Module):
    '''
    Adaptive piecewise linear activation with S hinges per unit.

    The L2 penalty on slopes and offsets is returned by `penalty()` and added
    to the training loss.
    '''

    def __init__(
        self, units: int, hinges: int = APL_HINGES, weight: float = APL_PENALTY, seed: Optional[int] = None
    ) -> None:
        if units < 1 or hinges < 1:
            raise ValueError(f'APL needs at least one unit and one hinge, got <{units}, {hinges}>')
        rng = np.random.default_rng(seed)
        self.weight = weight
        self.slopes = Node(rng.uniform(-APL_SLOPE_INIT, APL_SLOPE_INIT, (hinges, units)), True, name='slopes')
        self.offsets = Node(rng.uniform(-APL_OFFSET_INIT, APL_OFFSET_INIT, (hinges, units)), True, name='offsets')

    def forward(self, x: Node) -> Node:
        return apl_eval(self.slopes, self.offsets, x)

    def penalty(self) -> Optional[Node]:
        return apl_l2_penalty(self.slopes, self.offsets, self.weight)
