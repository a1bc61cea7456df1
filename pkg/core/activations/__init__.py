# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/18/2026 09:00'

from .fixed import ActivationKind, FixedActivation, fixed_eval, fixed_numpy, relu, leaky_relu, gelu, swish, sigmoid
from .learnable import PReLU, APL, prelu_eval, apl_eval, apl_l2_penalty
from .rational import (
    NUMERATOR_DEGREE,
    DENOMINATOR_DEGREE,
    RationalCoeffs,
    RationalFit,
    RationalFitError,
    STEP_RADIUS,
    coefficient_step_scales,
    PadeActivation,
    rational_eval,
    rational_node,
    rational_fit_init,
)

__all__ = [
    'ActivationKind',
    'FixedActivation',
    'fixed_eval',
    'fixed_numpy',
    'relu',
    'leaky_relu',
    'gelu',
    'swish',
    'sigmoid',
    'PReLU',
    'APL',
    'prelu_eval',
    'apl_eval',
    'apl_l2_penalty',
    'NUMERATOR_DEGREE',
    'DENOMINATOR_DEGREE',
    'RationalCoeffs',
    'RationalFit',
    'RationalFitError',
    'STEP_RADIUS',
    'coefficient_step_scales',
    'PadeActivation',
    'rational_eval',
    'rational_node',
    'rational_fit_init',
]
