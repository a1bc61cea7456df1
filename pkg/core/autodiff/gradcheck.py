# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/16/2026 12:15'
__version__ = '0.1.0'

from typing import Callable, Sequence

import numpy as np

from .node import Node, no_grad
from .exceptions import NonFiniteValueError, NonScalarRootError

DEFAULT_EPS = 1e-5


def _scalar(value: np.ndarray, where: str) -> float:
    if value.size != 1:
        raise NonScalarRootError(f'Checked function must return a scalar, got shape {value.shape}')
    result = float(value.reshape(-1)[0])
    if not np.isfinite(result):
        raise NonFiniteValueError(f'Non-finite function value <{result}> at {where}')
    return result


def relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    '''Max over coordinates of |analytic - numeric| / max(1, |numeric|).'''
    if analytic.size == 0:
        return 0.0
    return float(np.max(np.abs(analytic - numeric) / np.maximum(1.0, np.abs(numeric))))


def finite_diff_check(f: Callable[[Node], Node], x: np.ndarray, eps: float = DEFAULT_EPS) -> float:
    '''
    Compare the reverse-mode gradient of `f` at `x` with central differences.

    Args:
        f: scalar function of a parameter node
        x: point to check
        eps: central difference step

    Returns:
        Max relative error over coordinates

    Raises:
        ValueError: if eps is not positive
        NonFiniteValueError: if f is not finite at x or at a shifted point
    '''
    if not eps > 0:
        raise ValueError(f'eps must be positive, got <{eps}>')
    x = np.array(x, dtype=np.float64)
    param = Node(x, requires_grad=True)
    root = f(param)
    _scalar(root.value, 'x')
    root.backward()
    analytic = param.grad

    numeric = np.zeros_like(x)
    flat = numeric.reshape(-1)
    with no_grad():
        for i in range(x.size):
            shifted = x.copy().reshape(-1)
            shifted[i] += eps
            upper = _scalar(f(Node(shifted.reshape(x.shape))).value, f'x[{i}] + eps')
            shifted[i] -= 2 * eps
            lower = _scalar(f(Node(shifted.reshape(x.shape))).value, f'x[{i}] - eps')
            flat[i] = (upper - lower) / (2 * eps)
    return relative_error(analytic, numeric)


def check_parameters(loss: Callable[[], Node], params: Sequence[Node], eps: float = DEFAULT_EPS) -> float:
    '''
    Gradient check of a closure over several parameter nodes.

    Parameters are perturbed in place and restored.

    Returns:
        Max relative error over all parameters and coordinates
    '''
    for param in params:
        param.zero_grad()
    root = loss()
    _scalar(root.value, 'parameters')
    root.backward()

    worst = 0.0
    with no_grad():
        for param in params:
            numeric = np.zeros_like(param.value)
            flat_value = param.value.reshape(-1)
            flat_numeric = numeric.reshape(-1)
            for i in range(flat_value.size):
                original = flat_value[i]
                flat_value[i] = original + eps
                upper = _scalar(loss().value, f'{param!r}[{i}] + eps')
                flat_value[i] = original - eps
                lower = _scalar(loss().value, f'{param!r}[{i}] - eps')
                flat_value[i] = original
                flat_numeric[i] = (upper - lower) / (2 * eps)
            worst = max(worst, relative_error(param.grad, numeric))
    return worst
