# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/19/2026 13:00'
__version__ = '0.1.0'

from typing import Callable, List, Optional, Sequence

import numpy as np

from core.autodiff import Module, Node
from core.spline import KnotGrid, make_knot_grid
from core.activations import ActivationKind
from .kan import KANLayer
from .linear import Linear, SeedLike
from .grkan import GRKANLayer, RationalInit

ActivationFactory = Callable[[int], Module]

# toy regression models map one input to one output
TOY_MLP_HIDDEN = 12
TOY_APL_HIDDEN = 8
TOY_GRKAN_HIDDEN = 8
TOY_GRKAN_GROUPS = 4
TOY_KAN_WIDTHS = (1, 4, 1)
TOY_KAN_GRID = (-1.0, 1.0, 5, 3)  # lo, hi, G, order


class Sequential(Module):
    '''Chain of modules applied in order.'''

    def __init__(self, layers: Sequence[Module]) -> None:
        self.layers: List[Module] = list(layers)

    def forward(self, x: Node) -> Node:
        for layer in self.layers:
            x = layer(x)
        return x


def build_mlp(activation: ActivationFactory, hidden: int = TOY_MLP_HIDDEN, seed: SeedLike = None) -> Sequential:
    '''
    Three dense layers (1, h), (h, h), (h, 1) with an activation site after each hidden layer.

    Args:
        activation: factory receiving the unit count of the site
        hidden: hidden width h
        seed: seed or generator for the initialization
    '''
    rng = np.random.default_rng(seed)
    return Sequential(
        [
            Linear(1, hidden, rng),
            activation(hidden),
            Linear(hidden, hidden, rng),
            activation(hidden),
            Linear(hidden, 1, rng),
        ]
    )


def build_kan(
    widths: Sequence[int] = TOY_KAN_WIDTHS,
    grid: Optional[KnotGrid] = None,
    seed: SeedLike = None,
    spline_scaler: bool = True,
) -> Sequential:
    '''Stack of KAN layers between consecutive widths.'''
    rng = np.random.default_rng(seed)
    grid = grid or make_knot_grid(*TOY_KAN_GRID)
    return Sequential(
        [KANLayer(i, j, grid, rng, spline_scaler=spline_scaler) for i, j in zip(widths[:-1], widths[1:])]
    )


def build_grkan(
    hidden: int = TOY_GRKAN_HIDDEN,
    groups: int = TOY_GRKAN_GROUPS,
    init: RationalInit = ActivationKind.SWISH,
    seed: SeedLike = None,
) -> Sequential:
    '''
    Dense input layer followed by two GR-KAN layers: Linear(1, h), GRKAN(h, h), GRKAN(h, 1).

    Rational sites sit between consecutive linear maps, as the activation sites of the MLP do.
    '''
    rng = np.random.default_rng(seed)
    groups = min(groups, hidden)
    return Sequential(
        [
            Linear(1, hidden, rng),
            GRKANLayer(hidden, hidden, groups, init, rng),
            GRKANLayer(hidden, 1, groups, init, rng),
        ]
    )
