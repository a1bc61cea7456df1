# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/16/2026 09:10'

from typing import Tuple


class AutodiffError(Exception):
    '''Base exception for differentiation errors'''


class ShapeMismatchError(AutodiffError, ValueError):
    '''Raised when operand shapes do not conform for an operation'''

    def __init__(self, op: str, left: Tuple[int, ...], right: Tuple[int, ...], detail: str = '') -> None:
        self.op = op
        self.left = tuple(left)
        self.right = tuple(right)
        message = f'Shape mismatch in <{op}>: {self.left} vs {self.right}'
        super().__init__(f'{message} ({detail})' if detail else message)


class NonScalarRootError(AutodiffError, ValueError):
    '''Raised when backward is started from a non-scalar node'''


class NonFiniteValueError(AutodiffError, ArithmeticError):
    '''Raised when a gradient check meets a non-finite function value'''
