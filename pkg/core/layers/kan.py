# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/19/2026 10:10'
__version__ = '0.1.0'

'''
KAN layer: every (input i, output j) edge carries its own univariate function

    phi_ij(x) = w1_ij * swish(x) + w2_ij * sum_b n_ijb * B_b(x)

with B the B-spline basis of a shared knot grid.
'''

from functools import lru_cache
from typing import Optional

import numpy as np

from core.autodiff import Module, Node, ops
from core.spline import KnotGrid, bspline_basis, bspline_basis_node
from core.activations import ActivationKind, fixed_eval, fixed_numpy
from .exceptions import LayerConfigError
from .linear import SeedLike, check_features

SPLINE_NOISE = 0.1
QUADRATURE_POINTS = 64


@lru_cache(maxsize=8)
def activation_gain(kind: ActivationKind) -> float:
    '''
    Kaiming gain 1 / sqrt(E[f(z)^2]) for z ~ N(0, 1).

    The expectation is computed by Gauss-Hermite quadrature; relu gives sqrt(2).
    '''
    nodes, weights = np.polynomial.hermite_e.hermegauss(QUADRATURE_POINTS)
    second_moment = float(np.sum(weights * fixed_numpy(kind, nodes) ** 2) / np.sqrt(2.0 * np.pi))
    return float(1.0 / np.sqrt(second_moment))


class KANLayer(Module):
    '''
    Layer of I x J learnable edge functions.

    Args:
        in_features: input dim I
        out_features: output dim J
        grid: knot grid shared by all edges
        seed: seed or generator for the initialization
        spline_scaler: keep w2 as a separate per-edge parameter initialised to 1
    '''

    def __init__(
        self, in_features: int, out_features: int, grid: KnotGrid, seed: SeedLike = None, spline_scaler: bool = True
    ) -> None:
        if in_features < 1 or out_features < 1:
            raise LayerConfigError(f'KAN dimensions must be positive, got <{in_features}, {out_features}>')
        rng = np.random.default_rng(seed)
        self.in_features = in_features
        self.out_features = out_features
        self.grid = grid

        bound = activation_gain(ActivationKind.SWISH) * np.sqrt(3.0 / in_features)
        self.base_weight = Node(rng.uniform(-bound, bound, (out_features, in_features)), True, name='base_weight')
        coeff_std = SPLINE_NOISE / grid.num_basis
        self.spline_coeffs = Node(
            rng.normal(0.0, coeff_std, (out_features, in_features, grid.num_basis)), True, name='spline_coeffs'
        )
        self.spline_scaler: Optional[Node] = None
        if spline_scaler:
            self.spline_scaler = Node(np.ones((out_features, in_features)), True, name='spline_scaler')

    def scaled_coeffs(self) -> Node:
        '''Spline coefficients multiplied by the per-edge scaler, shape (J, I, G + k).'''
        if self.spline_scaler is None:
            return self.spline_coeffs
        return self.spline_coeffs * ops.reshape(self.spline_scaler, (self.out_features, self.in_features, 1))

    def forward(self, x: Node) -> Node:
        check_features('KANLayer', self.in_features, x)
        base = ops.matmul(fixed_eval(ActivationKind.SWISH, x), ops.transpose(self.base_weight))
        return base + self.spline_output(x)

    def spline_output(self, x: Node) -> Node:
        '''Spline path alone, used to compare path magnitudes.'''
        width = self.in_features * self.grid.num_basis
        basis = ops.reshape(bspline_basis_node(self.grid, x), (*x.shape[:-1], width))
        return ops.matmul(basis, ops.transpose(ops.reshape(self.scaled_coeffs(), (self.out_features, width))))


def kan_edge_eval(layer: KANLayer, i: int, j: int, x: np.ndarray) -> np.ndarray:
    '''
    Evaluate the single edge function phi_ij on an array of points.

    Raises:
        LayerConfigError: if (i, j) is not an edge of the layer
    '''
    if not (0 <= i < layer.in_features and 0 <= j < layer.out_features):
        raise LayerConfigError(f'Edge <{i}, {j}> is outside a <{layer.in_features}x{layer.out_features}> layer')
    x = np.asarray(x, dtype=np.float64)
    scaler = 1.0 if layer.spline_scaler is None else layer.spline_scaler.value[j, i]
    spline = bspline_basis(layer.grid, x) @ layer.spline_coeffs.value[j, i]
    return layer.base_weight.value[j, i] * fixed_numpy(ActivationKind.SWISH, x) + scaler * spline
