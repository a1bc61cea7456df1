# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '10/16/2026 15:00'
__version__ = '0.1.0'

from enum import Enum
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Union

import numpy as np

from core.autodiff import Node, ShapeMismatchError
from .exceptions import NonFiniteGradientError, TrainConfigError


class OptimizerKind(str, Enum):
    ADAM = 'adam'
    ADAMW = 'adamw'


@dataclass(frozen=True)
class AdamConfig:
    '''Adam hyper-parameters; a positive weight decay gives the decoupled AdamW update.'''

    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    weight_decay: float = 0.0

    def __post_init__(self) -> None:
        if not self.lr > 0:
            raise TrainConfigError(f'Learning rate must be positive, got <{self.lr}>')
        for name in ('beta1', 'beta2'):
            value = getattr(self, name)
            if not 0 <= value < 1:
                raise TrainConfigError(f'<{name}> must be in [0, 1), got <{value}>')
        if not self.eps > 0 or self.weight_decay < 0:
            raise TrainConfigError(f'Invalid eps <{self.eps}> or weight decay <{self.weight_decay}>')


ADAM_DEFAULTS = AdamConfig()
ADAMW_DEFAULTS = AdamConfig(beta1=0.8, beta2=0.99, weight_decay=0.01)


def optimizer_config(kind: Union[OptimizerKind, str], lr: Optional[float] = None) -> AdamConfig:
    '''Preset for an optimizer kind with an optional learning rate override.'''
    preset = ADAMW_DEFAULTS if OptimizerKind(kind) is OptimizerKind.ADAMW else ADAM_DEFAULTS
    return preset if lr is None else replace(preset, lr=lr)


@dataclass
class AdamState:
    '''Step counter and first and second moment estimates per parameter.'''

    step: int = 0
    first: List[np.ndarray] = field(default_factory=list)
    second: List[np.ndarray] = field(default_factory=list)

    @classmethod
    def zeros(cls, params: Sequence[np.ndarray]) -> 'AdamState':
        return cls(0, [np.zeros_like(p) for p in params], [np.zeros_like(p) for p in params])


def adam_step(
    state: AdamState,
    params: Sequence[np.ndarray],
    grads: Sequence[np.ndarray],
    cfg: AdamConfig,
    scales: Optional[Sequence[Union[float, np.ndarray]]] = None,
) -> AdamState:
    '''
    One Adam update of `params` in place.

    With weight decay the parameters are first shrunk by lr * wd * theta.
    `scales` multiply the learning rate per parameter, elementwise for arrays.

    Raises:
        ShapeMismatchError: if moment, parameter and gradient shapes differ
        NonFiniteGradientError: if any gradient entry is nan or inf
    '''
    if not len(params) == len(grads) == len(state.first) == len(state.second):
        raise ShapeMismatchError('adam_step', (len(params),), (len(grads),), 'parameter and gradient counts differ')
    for i, (param, grad) in enumerate(zip(params, grads)):
        if param.shape != grad.shape or param.shape != state.first[i].shape:
            raise ShapeMismatchError('adam_step', param.shape, grad.shape, f'parameter <{i}>')
        if not np.all(np.isfinite(grad)):
            raise NonFiniteGradientError(f'Non-finite gradient for parameter <{i}> at step <{state.step + 1}>')

    step_scales: List[Union[float, np.ndarray]] = [1.0 for _ in params] if scales is None else list(scales)
    if len(step_scales) != len(params):
        raise ShapeMismatchError('adam_step', (len(params),), (len(step_scales),), 'parameter and scale counts differ')

    state.step += 1
    correction1 = 1.0 - cfg.beta1**state.step
    correction2 = 1.0 - cfg.beta2**state.step
    for param, grad, first, second, scale in zip(params, grads, state.first, state.second, step_scales):
        lr = cfg.lr * scale
        if cfg.weight_decay:
            param -= lr * cfg.weight_decay * param
        first *= cfg.beta1
        first += (1.0 - cfg.beta1) * grad
        second *= cfg.beta2
        second += (1.0 - cfg.beta2) * grad * grad
        param -= lr * (first / correction1) / (np.sqrt(second / correction2) + cfg.eps)
    return state


class Adam:
    '''Adam over the gradients accumulated in parameter nodes.'''

    def __init__(self, params: Sequence[Node], cfg: AdamConfig = ADAM_DEFAULTS) -> None:
        self.params = list(params)
        self.cfg = cfg
        self.state = AdamState.zeros([p.value for p in self.params])

    def zero_grad(self) -> None:
        for param in self.params:
            param.zero_grad()

    def step(self) -> None:
        adam_step(
            self.state,
            [p.value for p in self.params],
            [p.grad for p in self.params],
            self.cfg,
            [p.lr_scale for p in self.params],
        )


class AdamW(Adam):
    '''Adam with decoupled weight decay.'''

    def __init__(self, params: Sequence[Node], cfg: AdamConfig = ADAMW_DEFAULTS) -> None:
        if not cfg.weight_decay > 0:
            raise TrainConfigError('AdamW needs a positive weight decay')
        super().__init__(params, cfg)


def make_optimizer(kind: Union[OptimizerKind, str], params: Sequence[Node], cfg: AdamConfig) -> Adam:
    '''Optimizer instance for a kind and its config.'''
    if OptimizerKind(kind) is OptimizerKind.ADAMW:
        return AdamW(params, cfg)
    return Adam(params, cfg)
