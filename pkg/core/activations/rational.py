# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '10/16/2026 11:40'
__version__ = '0.1.0'

'''
Safe rational function F(x) = P(x) / (1 + |Q(x)|).

P has degree m with coefficients a_0..a_m, Q has degree n with coefficients
b_1..b_n and no constant term, so the denominator is at least 1.
'''

from functools import lru_cache
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from core.logger import getLogger
from core.autodiff import Module, Node, ShapeMismatchError, ops
from .fixed import ActivationKind, fixed_numpy

log = getLogger(__file__)

NUMERATOR_DEGREE = 5
DENOMINATOR_DEGREE = 4
FIT_RANGE = (-3.0, 3.0)
FIT_SAMPLES = 1000
MAX_CONDITION = 1e12
# a training step on any coefficient moves F by about lr at |x| = STEP_RADIUS
STEP_RADIUS = FIT_RANGE[1]

# refinement stage settings
REFINE_LR = 1e-3
REFINE_MAX_STEPS = 5000
REFINE_CHECK_EVERY = 100
REFINE_MIN_IMPROVEMENT = 1e-6
REFINE_DENOMINATOR_SEED = 1e-2
EXACT_FIT_ERROR = 1e-9


class RationalFitError(ValueError):
    '''Raised when a rational function cannot be fitted to a target'''


@dataclass(frozen=True)
class RationalCoeffs:
    '''Numerator a_0..a_m and denominator b_1..b_n coefficients.'''

    numerator: np.ndarray
    denominator: np.ndarray

    def __post_init__(self) -> None:
        numerator = np.array(self.numerator, dtype=np.float64).reshape(-1)
        denominator = np.array(self.denominator, dtype=np.float64).reshape(-1)
        if not (np.all(np.isfinite(numerator)) and np.all(np.isfinite(denominator))):
            raise RationalFitError('Rational coefficients must be finite')
        object.__setattr__(self, 'numerator', numerator)
        object.__setattr__(self, 'denominator', denominator)

    @property
    def m(self) -> int:
        return len(self.numerator) - 1

    @property
    def n(self) -> int:
        return len(self.denominator)

    @classmethod
    def identity(cls, m: int = NUMERATOR_DEGREE, n: int = DENOMINATOR_DEGREE) -> 'RationalCoeffs':
        numerator = np.zeros(m + 1)
        numerator[1] = 1.0
        return cls(numerator, np.zeros(n))


@dataclass(frozen=True)
class RationalFit:
    '''Result of fitting a rational function to a target activation.'''

    coeffs: RationalCoeffs
    max_error: float  # max abs error on the fit points
    target: ActivationKind
    steps: int  # refinement steps performed


def coefficient_step_scales(m: int = NUMERATOR_DEGREE, n: int = DENOMINATOR_DEGREE) -> Tuple[np.ndarray, np.ndarray]:
    '''
    Learning-rate multipliers STEP_RADIUS^-j of the trainable coefficients.

    Returns:
        Numerator scales for j = 0..m and denominator scales for j = 1..n
    '''
    return STEP_RADIUS ** -np.arange(m + 1.0), STEP_RADIUS ** -np.arange(1.0, n + 1.0)


def rational_eval(coeffs: RationalCoeffs, x: Union[float, np.ndarray]) -> np.ndarray:
    '''Evaluate the safe rational function on an array.'''
    x = np.asarray(x, dtype=np.float64)
    numerator = np.polynomial.polynomial.polyval(x, coeffs.numerator)
    denominator = np.polynomial.polynomial.polyval(x, np.concatenate([[0.0], coeffs.denominator]))
    return numerator / (1.0 + np.abs(denominator))


def _powers(x: np.ndarray, degree: int) -> np.ndarray:
    '''x^0 .. x^degree stacked on a new last axis.'''
    powers = np.empty(x.shape + (degree + 1,))
    powers[..., 0] = 1.0
    for k in range(1, degree + 1):
        np.multiply(powers[..., k - 1], x, out=powers[..., k])
    return powers


def rational_node(
    x: Node, numerator: Node, denominator: Node, group_index: Optional[np.ndarray] = None, axis: int = -1
) -> Node:
    '''
    Differentiable safe rational function with optional channel groups.

    Args:
        x: input of any shape
        numerator: (m+1,) shared or (k, m+1) per group
        denominator: (n,) shared or (k, n) per group
        group_index: group of every channel along `axis`, required for grouped coefficients
        axis: channel axis of x

    Raises:
        ShapeMismatchError: if grouped coefficients do not match the channel count
    '''
    if x.value.ndim == 0:
        return ops.reshape(rational_node(ops.reshape(x, (1,)), numerator, denominator, group_index), ())

    a = numerator.value if numerator.value.ndim == 2 else numerator.value[None, :]
    b = denominator.value if denominator.value.ndim == 2 else denominator.value[None, :]
    xv = np.moveaxis(x.value, axis, -1)
    channels = xv.shape[-1]
    if numerator.value.ndim == 2:
        if group_index is None or len(group_index) != channels:
            raise ShapeMismatchError('rational', x.shape, numerator.shape, 'group index does not cover channels')
        index = np.asarray(group_index, dtype=np.int64)
    else:
        index = np.zeros(channels, dtype=np.int64)
    if a.shape[0] != b.shape[0]:
        raise ShapeMismatchError('rational', numerator.shape, denominator.shape, 'group counts differ')

    m, n = a.shape[1] - 1, b.shape[1]
    coeff_a, coeff_b = a[index], b[index]  # (C, m+1), (C, n)
    powers = _powers(xv, max(m, n))  # (..., C, K)
    p = np.einsum('...ck,ck->...c', powers[..., : m + 1], coeff_a)
    q = np.einsum('...ck,ck->...c', powers[..., 1 : n + 1], coeff_b)
    den = 1.0 + np.abs(q)
    out = p / den

    def vjp(g: np.ndarray) -> Sequence[Optional[np.ndarray]]:
        gv = np.moveaxis(g, axis, -1)
        sign = np.sign(q)
        dp = np.einsum('...ck,ck->...c', powers[..., :m], coeff_a[:, 1:] * np.arange(1, m + 1))
        dq = np.einsum('...ck,ck->...c', powers[..., :n], coeff_b * np.arange(1, n + 1))
        gx = gv * (dp / den - p * sign * dq / den**2)

        # sample-summed coefficient gradients per channel, then per group
        flat = powers.reshape(-1, channels, powers.shape[-1])
        scale_a = (gv / den).reshape(-1, channels)
        scale_b = (-gv * p * sign / den**2).reshape(-1, channels)
        per_channel_a = np.einsum('sc,sck->ck', scale_a, flat[..., : m + 1])
        per_channel_b = np.einsum('sc,sck->ck', scale_b, flat[..., 1 : n + 1])
        membership = np.eye(a.shape[0])[index].T  # (k, C)
        return (
            np.moveaxis(gx, -1, axis),
            (membership @ per_channel_a).reshape(numerator.shape),
            (membership @ per_channel_b).reshape(denominator.shape),
        )

    return Node.from_op('rational', np.moveaxis(out, -1, axis), (x, numerator, denominator), vjp)


def _max_error(coeffs: RationalCoeffs, x: np.ndarray, y: np.ndarray) -> float:
    return float(np.max(np.abs(rational_eval(coeffs, x) - y)))


def _least_squares_numerator(x: np.ndarray, y: np.ndarray, m: int) -> np.ndarray:
    vandermonde = np.polynomial.polynomial.polyvander(x, m)
    condition = float(np.linalg.cond(vandermonde))
    if not np.isfinite(condition) or condition > MAX_CONDITION:
        raise RationalFitError(f'Singular least-squares system for degree <{m}>: condition number <{condition:.3e}>')
    solution, *_ = np.linalg.lstsq(vandermonde, y, rcond=None)
    return np.asarray(solution)


def _refine(
    x: np.ndarray, y: np.ndarray, start: RationalCoeffs, best: RationalCoeffs, best_error: float
) -> Tuple[RationalCoeffs, float, int]:
    '''Adam refinement of numerator and denominator on mean squared error.'''
    numerator = Node(start.numerator.copy(), requires_grad=True)
    denominator = Node(start.denominator.copy(), requires_grad=True)
    inputs, targets = Node(x), Node(y)
    params = (numerator, denominator)
    first = [np.zeros_like(p.value) for p in params]
    second = [np.zeros_like(p.value) for p in params]
    beta1, beta2, eps = 0.9, 0.999, 1e-8

    last_error = _max_error(start, x, y)
    step = 0
    while step < REFINE_MAX_STEPS:
        step += 1
        for p in params:
            p.zero_grad()
        loss = ops.mean((rational_node(inputs, numerator, denominator) - targets) ** 2)
        loss.backward()
        for i, p in enumerate(params):
            first[i] = beta1 * first[i] + (1 - beta1) * p.grad
            second[i] = beta2 * second[i] + (1 - beta2) * p.grad**2
            m_hat = first[i] / (1 - beta1**step)
            v_hat = second[i] / (1 - beta2**step)
            p.value -= REFINE_LR * m_hat / (np.sqrt(v_hat) + eps)

        if step % REFINE_CHECK_EVERY == 0:
            current = RationalCoeffs(numerator.value.copy(), denominator.value.copy())
            error = _max_error(current, x, y)
            if error < best_error:
                best, best_error = current, error
            if last_error - error < REFINE_MIN_IMPROVEMENT:
                break
            last_error = error
    return best, best_error, step


@lru_cache(maxsize=32)
def _fit_cached(target: ActivationKind, lo: float, hi: float, samples: int, m: int, n: int) -> RationalFit:
    x = np.linspace(lo, hi, samples)
    y = fixed_numpy(target, x)

    # stage 1: polynomial least squares with b = 0
    polynomial = RationalCoeffs(_least_squares_numerator(x, y, m), np.zeros(n))
    error = _max_error(polynomial, x, y)
    log.debug(f'Rational fit <{target.value}> stage 1 max error: <{error:.3e}>')
    if error < EXACT_FIT_ERROR:
        return RationalFit(polynomial, error, target, steps=0)

    # stage 2: joint refinement from a small denominator seed
    seed_denominator = np.zeros(n)
    seed_denominator[0] = REFINE_DENOMINATOR_SEED
    start = RationalCoeffs(polynomial.numerator, seed_denominator)
    best, best_error, steps = _refine(x, y, start, polynomial, error)
    log.debug(f'Rational fit <{target.value}> refined in <{steps}> steps, max error: <{best_error:.3e}>')
    return RationalFit(best, best_error, target, steps=steps)


def rational_fit_init(
    target: Union[ActivationKind, str],
    lo: float = FIT_RANGE[0],
    hi: float = FIT_RANGE[1],
    samples: int = FIT_SAMPLES,
    m: int = NUMERATOR_DEGREE,
    n: int = DENOMINATOR_DEGREE,
) -> RationalFit:
    '''
    Fit rational coefficients to a fixed activation.

    Stage 1 solves the numerator by least squares with a zero denominator.
    Stage 2 refines numerator and denominator jointly with Adam until the max
    absolute error improves by less than 1e-6 per 100 steps or 5000 steps pass.
    The best coefficients seen are returned. Results are cached per arguments.

    Raises:
        RationalFitError: if there are fewer than 10 * (m + n) samples or the system is singular
    '''
    if samples < 10 * (m + n):
        raise RationalFitError(f'Rational fit needs at least <{10 * (m + n)}> samples, got <{samples}>')
    if not lo < hi:
        raise RationalFitError(f'Rational fit range must satisfy lo < hi, got <{lo}, {hi}>')
    return _fit_cached(ActivationKind(target), float(lo), float(hi), int(samples), int(m), int(n))


class PadeActivation(Module):
    '''Learnable rational activation shared by all units of a site.'''

    def __init__(self, init: Union[ActivationKind, str] = ActivationKind.LEAKY_RELU) -> None:
        fit = rational_fit_init(init)
        self.init_target = fit.target
        self.numerator = Node(fit.coeffs.numerator.copy(), requires_grad=True, name='numerator')
        self.denominator = Node(fit.coeffs.denominator.copy(), requires_grad=True, name='denominator')
        self.numerator.lr_scale, self.denominator.lr_scale = coefficient_step_scales(fit.coeffs.m, fit.coeffs.n)

    @property
    def coeffs(self) -> RationalCoeffs:
        return RationalCoeffs(self.numerator.value.copy(), self.denominator.value.copy())

    def forward(self, x: Node) -> Node:
        return rational_node(x, self.numerator, self.denominator)
