# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '10/16/2026 14:30'
__version__ = '0.1.0'

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from app_config import AppConfig
from core.activations.learnable import APL_PENALTY
from .losses import LossKind
from .exceptions import TrainConfigError
from .optimizers import AdamConfig, OptimizerKind, optimizer_config

DIVERGENCE_LIMIT = 1e6


@dataclass(frozen=True)
class EarlyStop:
    '''Stop when the loss improved by less than `tolerance` (relative) over the last `window` steps.'''

    window: int = 10_000
    tolerance: float = 0.01

    def __post_init__(self) -> None:
        if self.window < 1 or not self.tolerance >= 0:
            raise TrainConfigError(f'Invalid early stop window <{self.window}> or tolerance <{self.tolerance}>')


@dataclass(frozen=True)
class TrainConfig:
    '''Full-batch training settings.'''

    steps: int = 300_000
    optimizer: OptimizerKind = OptimizerKind.ADAM
    adam: AdamConfig = field(default_factory=AdamConfig)
    loss: LossKind = LossKind.MSE
    seed: int = 0
    apl_penalty: float = APL_PENALTY  # L2 weight of APL slopes and offsets
    early_stop: Optional[EarlyStop] = None
    checkpoints: int = field(default_factory=lambda: AppConfig.CHECKPOINTS)
    divergence_limit: float = DIVERGENCE_LIMIT

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise TrainConfigError(f'Training needs at least one step, got <{self.steps}>')
        if self.checkpoints < 1:
            raise TrainConfigError(f'Checkpoint count must be positive, got <{self.checkpoints}>')
        if self.apl_penalty < 0:
            raise TrainConfigError(f'APL penalty must be >= 0, got <{self.apl_penalty}>')
        object.__setattr__(self, 'optimizer', OptimizerKind(self.optimizer))
        object.__setattr__(self, 'loss', LossKind(self.loss))

    @classmethod
    def create(
        cls, optimizer: Union[OptimizerKind, str] = OptimizerKind.ADAM, lr: Optional[float] = None, **kwargs: Any
    ) -> 'TrainConfig':
        '''Config with the optimizer preset for `optimizer` and an optional learning rate.'''
        return cls(optimizer=OptimizerKind(optimizer), adam=optimizer_config(optimizer, lr), **kwargs)

    @property
    def checkpoint_interval(self) -> int:
        '''Steps per checkpoint; a run shorter than `checkpoints` steps records every step.'''
        return max(1, self.steps // self.checkpoints)

    def describe(self) -> Dict[str, Any]:
        '''JSON-compatible echo for reports.'''
        return {
            'steps': self.steps,
            'optimizer': self.optimizer.value,
            'lr': self.adam.lr,
            'beta1': self.adam.beta1,
            'beta2': self.adam.beta2,
            'eps': self.adam.eps,
            'weight_decay': self.adam.weight_decay,
            'loss': self.loss.value,
            'apl_penalty': self.apl_penalty,
            'early_stop': None if self.early_stop is None else vars(self.early_stop).copy(),
            'checkpoint_interval': self.checkpoint_interval,
        }


@dataclass
class RunTrace:
    '''Mean data loss of every checkpoint interval of one training run.'''

    seed: int
    checkpoints: List[Tuple[int, float]] = field(default_factory=list)
    final_loss: float = math.nan
    steps_run: int = 0
    stopped_early: bool = False
    wall_time: float = 0.0

    def record(self, step: int, loss: float) -> None:
        self.checkpoints.append((step, float(loss)))

    @property
    def losses(self) -> List[float]:
        return [loss for _, loss in self.checkpoints]

    def monotone_fraction(self) -> float:
        '''Share of consecutive checkpoint pairs where the loss did not increase.'''
        losses = self.losses
        if len(losses) < 2:
            return 1.0
        pairs = list(zip(losses[:-1], losses[1:]))
        return sum(after <= before for before, after in pairs) / len(pairs)

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        '''JSON-compatible form; wall time only when requested.'''
        data: Dict[str, Any] = {
            'seed': self.seed,
            'checkpoints': [[step, loss] for step, loss in self.checkpoints],
            'final_loss': self.final_loss,
            'steps_run': self.steps_run,
            'stopped_early': self.stopped_early,
        }
        if include_timing:
            data['wall_time'] = self.wall_time
        return data
