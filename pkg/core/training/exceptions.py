# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/21/2026 09:10'

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .trace import RunTrace


class TrainingError(Exception):
    '''Base exception for training failures'''


class TrainConfigError(TrainingError, ValueError):
    '''Raised on invalid training settings'''


class NonFiniteGradientError(TrainingError, ArithmeticError):
    '''Raised when an optimizer receives a non-finite gradient'''


class TrainingDivergedError(TrainingError):
    '''Raised when the loss becomes non-finite or exceeds the divergence limit; carries the trace so far'''

    def __init__(self, message: str, trace: Optional['RunTrace'] = None) -> None:
        super().__init__(message)
        self.trace = trace
