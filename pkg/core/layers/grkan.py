# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/19/2026 11:30'
__version__ = '0.1.0'

'''
Group-rational KAN layer.

The I input channels are split into k contiguous groups of width I / k; every
channel of group g is passed through the same rational function F_g, and the
result goes through a dense layer: L(x) = LIN(GR(x)).
'''

from typing import Union

import numpy as np

from core.logger import getLogger
from core.autodiff import Module, Node
from core.activations import ActivationKind, RationalCoeffs, coefficient_step_scales, rational_eval, rational_fit_init
from core.activations import rational_node
from .exceptions import LayerConfigError
from .linear import Linear, SeedLike, check_features

log = getLogger(__file__)

GAIN_SAMPLES = 100_000
GAIN_SEED = 0
MIN_GAIN = 1e-8

RationalInit = Union[ActivationKind, str, RationalCoeffs]


def group_index(channels: int, groups: int) -> np.ndarray:
    '''
    Group of every channel, channel i belongs to group i // (channels / groups).

    Raises:
        LayerConfigError: if groups does not divide channels
    '''
    if groups < 1 or channels < 1 or channels % groups:
        raise LayerConfigError(f'Group count <{groups}> must divide channel count <{channels}>')
    return np.arange(channels) // (channels // groups)


def resolve_init(init: RationalInit) -> RationalCoeffs:
    '''Rational coefficients for an activation kind, or the given coefficients.'''
    if isinstance(init, RationalCoeffs):
        return init
    return rational_fit_init(init).coeffs


def rational_gain(coeffs: RationalCoeffs) -> float:
    '''Monte Carlo estimate of E[F(z)^2] for z ~ N(0, 1) with a fixed seed.'''
    z = np.random.default_rng(GAIN_SEED).standard_normal(GAIN_SAMPLES)
    return float(np.mean(rational_eval(coeffs, z) ** 2))


class GroupRational(Module):
    '''
    Rational activations shared inside channel groups.

    Args:
        channels: channel count along `axis`
        groups: number of groups k, must divide channels
        init: activation kind to fit, or explicit coefficients
        axis: channel axis of the input
    '''

    def __init__(
        self, channels: int, groups: int, init: RationalInit = ActivationKind.SWISH, axis: int = -1
    ) -> None:
        self.index = group_index(channels, groups)
        self.channels = channels
        self.groups = groups
        self.axis = axis
        self.init_coeffs = resolve_init(init)
        self.numerator = Node(np.tile(self.init_coeffs.numerator, (groups, 1)), True, name='numerator')
        self.denominator = Node(np.tile(self.init_coeffs.denominator, (groups, 1)), True, name='denominator')
        self.numerator.lr_scale, self.denominator.lr_scale = coefficient_step_scales(
            self.init_coeffs.m, self.init_coeffs.n
        )

    def group_coeffs(self, group: int) -> RationalCoeffs:
        return RationalCoeffs(self.numerator.value[group].copy(), self.denominator.value[group].copy())

    def forward(self, x: Node) -> Node:
        if x.value.ndim == 0 or x.shape[self.axis] != self.channels:
            raise LayerConfigError(f'GroupRational expects <{self.channels}> channels, got shape <{x.shape}>')
        return rational_node(x, self.numerator, self.denominator, self.index, self.axis)


def variance_preserving_std(gain: float, fan_in: int) -> float:
    '''
    Weight std sqrt(1 / (gain * fan_in)) keeping unit output variance.

    Raises:
        LayerConfigError: if the gain is degenerate
    '''
    if not gain >= MIN_GAIN:
        raise LayerConfigError(f'Degenerate rational gain <{gain:.3e}>, fitted activation is close to zero')
    return float(np.sqrt(1.0 / (gain * fan_in)))


class GRKANLayer(Module):
    '''
    Group-rational KAN layer with variance-preserving initialization.

    Every group starts from the same rational fit; the linear weights are drawn
    from N(0, 1 / (a2 * I)) with a2 = E[F(z)^2] and the bias is zero.
    '''

    def __init__(
        self,
        in_features: int,
        out_features: int,
        groups: int,
        init: RationalInit = ActivationKind.SWISH,
        seed: SeedLike = None,
    ) -> None:
        rng = np.random.default_rng(seed)
        self.in_features = in_features
        self.rational = GroupRational(in_features, groups, init)
        self.linear = Linear(in_features, out_features, rng)

        self.gain = rational_gain(self.rational.init_coeffs)
        std = variance_preserving_std(self.gain, in_features)
        self.linear.weight.value[...] = rng.normal(0.0, std, (out_features, in_features))
        if self.linear.bias is not None:
            self.linear.bias.value[...] = 0.0
        log.debug(f'GR-KAN <{in_features}x{out_features}> groups <{groups}> gain: <{self.gain:.4f}> std: <{std:.4f}>')

    def forward(self, x: Node) -> Node:
        check_features('GRKANLayer', self.in_features, x)
        return self.linear(self.rational(x))
