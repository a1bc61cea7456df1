# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/24/2026 09:00'

from abc import ABC, abstractmethod
from typing import Any, Optional, Sequence, Union

from core.training import EarlyStop, LossKind, OptimizerKind, TrainConfig
from core.bench.methods import TABLE1_METHODS, MethodName
from core.bench.table1 import Table1Config
from core.bench.denoise_suite import DENOISE_STEPS, DenoiseConfig
from core.denoise import DEFAULT_SNR_DB, DenoiseDataConfig

ExperimentConfig = Union[Table1Config, DenoiseConfig]


class BaseExperimentConfig(ABC):
    '''Base experiment preset class.'''

    @abstractmethod
    def build(self, *args: Any, **kwargs: Any) -> ExperimentConfig:
        '''Build the experiment configuration; keyword arguments override preset fields.'''
        raise NotImplementedError


class Table1Preset(BaseExperimentConfig):
    '''Signal fitting preset; subclasses set the training budget.'''

    STEPS: int = 300_000
    EARLY_STOP: bool = False

    def build(
        self,
        seeds: Sequence[int] = (0, 1, 2),
        steps: Optional[int] = None,
        methods: Sequence[Union[MethodName, str]] = TABLE1_METHODS,
        early_stop: Optional[bool] = None,
        optimizer: Union[OptimizerKind, str] = OptimizerKind.ADAM,
        lr: Optional[float] = None,
        loss: Union[LossKind, str] = LossKind.MSE,
        curves: bool = True,
    ) -> Table1Config:
        '''
        Build the configuration.

        Args:
            seeds: model initialization seeds
            steps: optimizer steps per run, preset budget by default
            methods: model families to train
            early_stop: stop on a 10k step plateau of 1%, preset choice by default
            optimizer: adam or adamw
            lr: learning rate, optimizer preset by default
            loss: mse or l1
            curves: export fit curves of the first seed
        '''
        stop = self.EARLY_STOP if early_stop is None else early_stop
        train = TrainConfig.create(
            optimizer,
            lr,
            steps=self.STEPS if steps is None else steps,
            loss=LossKind(loss),
            early_stop=EarlyStop() if stop else None,
        )
        return Table1Config(seeds=tuple(seeds), train=train, methods=tuple(methods), curves=curves)


class DenoisePreset(BaseExperimentConfig):
    '''Toy denoiser preset; subclasses set depths and noise level.'''

    DEPTHS: Sequence[int] = (2,)
    SNR_DB: float = DEFAULT_SNR_DB
    STEPS: int = DENOISE_STEPS

    def build(
        self,
        depths: Optional[Sequence[int]] = None,
        seeds: Sequence[int] = (0, 1, 2),
        snr_db: Optional[float] = None,
        steps: Optional[int] = None,
        count: int = 20,
        optimizer: Union[OptimizerKind, str] = OptimizerKind.ADAM,
        lr: Optional[float] = None,
        data_seed: int = 0,
    ) -> DenoiseConfig:
        '''
        Build the configuration.

        Args:
            depths: encoder/decoder depths to compare
            seeds: model initialization seeds
            snr_db: noise level of the pairs
            steps: optimizer steps per run
            count: number of noisy pairs, 80% used for training
            optimizer: adam or adamw
            lr: learning rate, optimizer preset by default
            data_seed: seed of the pair generator
        '''
        data = DenoiseDataConfig(count=count, snr_db=self.SNR_DB if snr_db is None else snr_db, seed=data_seed)
        train = TrainConfig.create(optimizer, lr, steps=self.STEPS if steps is None else steps)
        depths = self.DEPTHS if depths is None else depths
        return DenoiseConfig(depths=tuple(depths), seeds=tuple(seeds), data=data, train=train)
