# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/22/2026 12:10'
__version__ = '0.1.0'

from enum import Enum
from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np

from core.logger import getLogger
from core.autodiff import Module, Node, ShapeMismatchError
from core.activations import DENOMINATOR_DEGREE, NUMERATOR_DEGREE, ActivationKind, FixedActivation
from core.layers import GroupRational, SeedLike, group_index
from .conv import Conv1d, conv_padding
from .exceptions import DenoiserSpecError

log = getLogger(__file__)


class ActivationSite(str, Enum):
    '''Blocks whose activations are replaced by the variant activation.'''

    ENC = 'enc'
    DEC = 'dec'
    BOTH = 'both'
    NONE = 'none'


class DenoiserActivation(str, Enum):
    RELU = 'relu'
    GRKAN = 'grkan'


@dataclass(frozen=True)
class DenoiserSpec:
    '''
    Strided convolutional encoder/decoder with U-Net skips.

    Level i (1-based) has hidden * 2^(i-1) channels. Blocks outside
    `activation_site` keep ReLU; with site `none` the model has no activation at all.
    '''

    depth: int = 2
    hidden: int = 16
    kernel: int = 8
    stride: int = 4
    activation_site: ActivationSite = ActivationSite.BOTH
    activation_kind: DenoiserActivation = DenoiserActivation.RELU
    groups: int = 4

    def __post_init__(self) -> None:
        object.__setattr__(self, 'activation_site', ActivationSite(self.activation_site))
        object.__setattr__(self, 'activation_kind', DenoiserActivation(self.activation_kind))
        if self.depth < 1 or self.hidden < 1 or self.groups < 1:
            raise DenoiserSpecError(
                f'Depth <{self.depth}>, hidden <{self.hidden}> and groups <{self.groups}> must be positive'
            )
        conv_padding(self.kernel, self.stride)

    @property
    def name(self) -> str:
        '''Short variant label, e.g. `d2-relu` or `d2-grkan-both`.'''
        if self.activation_site is ActivationSite.NONE:
            return f'd{self.depth}-linear'
        if self.activation_kind is DenoiserActivation.RELU:
            return f'd{self.depth}-relu'
        return f'd{self.depth}-{self.activation_kind.value}-{self.activation_site.value}'

    @property
    def length_multiple(self) -> int:
        '''Input lengths must be divisible by stride^depth.'''
        return self.stride**self.depth

    def channels(self, level: int) -> int:
        '''Channel count of a level, level 0 is the waveform.'''
        return 1 if level == 0 else self.hidden * 2 ** (level - 1)

    def encoder_activated(self) -> bool:
        return self.activation_site in (ActivationSite.ENC, ActivationSite.BOTH)

    def decoder_activated(self) -> bool:
        return self.activation_site in (ActivationSite.DEC, ActivationSite.BOTH)

    def adapted_sites(self) -> int:
        '''Number of activation sites using the variant activation.'''
        if self.activation_site is ActivationSite.NONE:
            return 0
        return self.depth * self.encoder_activated() + (self.depth - 1) * self.decoder_activated()

    def describe(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'depth': self.depth,
            'hidden': self.hidden,
            'kernel': self.kernel,
            'stride': self.stride,
            'padding': conv_padding(self.kernel, self.stride),
            'activation_site': self.activation_site.value,
            'activation_kind': self.activation_kind.value,
            'groups': self.groups,
        }


class Denoiser(Module):
    '''
    Encoder blocks conv -> activation, identity bottleneck, decoder blocks
    (x + skip) -> transposed conv -> activation; the last decoder block has none.
    '''

    def __init__(self, spec: DenoiserSpec, seed: SeedLike = None) -> None:
        rng = np.random.default_rng(seed)
        self.spec = spec
        self.encoders: List[Conv1d] = []
        self.encoder_activations: List[Module] = []
        for level in range(1, spec.depth + 1):
            channels = spec.channels(level)
            self.encoders.append(Conv1d(spec.channels(level - 1), channels, spec.kernel, spec.stride, rng))
            self.encoder_activations.append(self._activation(channels, spec.encoder_activated()))

        self.decoders: List[Conv1d] = []
        self.decoder_activations: List[Module] = []
        for level in range(spec.depth, 0, -1):
            channels = spec.channels(level - 1)
            self.decoders.append(
                Conv1d(spec.channels(level), channels, spec.kernel, spec.stride, rng, transposed=True)
            )
            if level == 1:
                self.decoder_activations.append(FixedActivation(ActivationKind.IDENTITY))
            else:
                self.decoder_activations.append(self._activation(channels, spec.decoder_activated()))
        log.debug(f'Denoiser <{spec.name}> built with <{self.param_count()}> params')

    def _activation(self, channels: int, adapted: bool) -> Module:
        if self.spec.activation_site is ActivationSite.NONE:
            return FixedActivation(ActivationKind.IDENTITY)
        if adapted and self.spec.activation_kind is DenoiserActivation.GRKAN:
            group_index(channels, self.spec.groups)
            return GroupRational(channels, self.spec.groups, ActivationKind.SWISH, axis=1)
        return FixedActivation(ActivationKind.RELU)

    def forward(self, x: Node) -> Node:
        if x.value.ndim != 3 or x.shape[1] != 1 or x.shape[2] % self.spec.length_multiple:
            raise ShapeMismatchError(
                'denoiser', x.shape, (1, self.spec.length_multiple), 'expected (batch, 1, length) with divisible length'
            )
        skips: List[Node] = []
        for conv, activation in zip(self.encoders, self.encoder_activations):
            x = activation(conv(x))
            skips.append(x)
        for conv, activation in zip(self.decoders, self.decoder_activations):
            x = activation(conv(x + skips.pop()))
        return x


def build_denoiser(spec: DenoiserSpec, seed: SeedLike = None) -> Denoiser:
    '''
    Denoiser for a spec; every variant of one seed shares the convolution weights.

    Raises:
        DenoiserSpecError: if the group count does not divide an adapted block's channels
    '''
    try:
        return Denoiser(spec, seed)
    except ValueError as e:
        if isinstance(e, DenoiserSpecError):
            raise
        raise DenoiserSpecError(f'Invalid denoiser <{spec.name}>: {e}') from e


def parity_offset(spec: DenoiserSpec) -> int:
    '''Extra parameters of a GR-KAN variant over its ReLU counterpart.'''
    return spec.adapted_sites() * spec.groups * (NUMERATOR_DEGREE + 1 + DENOMINATOR_DEGREE)

