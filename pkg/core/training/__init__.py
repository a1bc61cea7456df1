# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/21/2026 09:00'

from .exceptions import TrainingError, TrainConfigError, NonFiniteGradientError, TrainingDivergedError
from .losses import LossKind, mse_loss, l1_loss, get_loss
from .optimizers import (
    OptimizerKind,
    AdamConfig,
    AdamState,
    Adam,
    AdamW,
    ADAM_DEFAULTS,
    ADAMW_DEFAULTS,
    adam_step,
    make_optimizer,
    optimizer_config,
)
from .trace import EarlyStop, TrainConfig, RunTrace
from .metrics import RunLabels, TrainingMetrics
from .loop import TrainData, train_run
from .runner import RUN_DIVERGED, RUN_FAILED, RUN_OK, RunJob, RunOutcome, execute, run_jobs

__all__ = [
    'TrainingError',
    'TrainConfigError',
    'NonFiniteGradientError',
    'TrainingDivergedError',
    'LossKind',
    'mse_loss',
    'l1_loss',
    'get_loss',
    'OptimizerKind',
    'AdamConfig',
    'AdamState',
    'Adam',
    'AdamW',
    'ADAM_DEFAULTS',
    'ADAMW_DEFAULTS',
    'adam_step',
    'make_optimizer',
    'optimizer_config',
    'EarlyStop',
    'TrainConfig',
    'RunTrace',
    'RunLabels',
    'TrainingMetrics',
    'TrainData',
    'train_run',
    'RUN_OK',
    'RUN_DIVERGED',
    'RUN_FAILED',
    'RunJob',
    'RunOutcome',
    'execute',
    'run_jobs',
]
