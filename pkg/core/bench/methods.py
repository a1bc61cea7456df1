# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '10/16/2026 16:45'
__version__ = '0.1.0'

from enum import Enum
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Sequence, Union

import numpy as np

from core.autodiff import Module
from core.activations import (
    APL,
    DENOMINATOR_DEGREE,
    NUMERATOR_DEGREE,
    STEP_RADIUS,
    ActivationKind,
    FixedActivation,
    PadeActivation,
    PReLU,
    rational_fit_init,
)
from core.activations.learnable import APL_HINGES, PRELU_INIT
from core.activations.rational import FIT_RANGE, FIT_SAMPLES
from core.layers import build_grkan, build_kan, build_mlp
from core.layers.models import (
    TOY_APL_HIDDEN,
    TOY_GRKAN_GROUPS,
    TOY_GRKAN_HIDDEN,
    TOY_KAN_GRID,
    TOY_KAN_WIDTHS,
    TOY_MLP_HIDDEN,
)

SEED_SPACE = 2**31


class MethodName(str, Enum):
    RELU = 'relu'
    GELU = 'gelu'
    PAU = 'pau'
    APL = 'apl'
    KAN = 'kan'
    GRKAN = 'grkan'
    LEAKY_RELU = 'leaky_relu'
    PRELU = 'prelu'
    SWISH = 'swish'


# the six model families compared on the signal fitting benchmark
TABLE1_METHODS = (
    MethodName.RELU,
    MethodName.GELU,
    MethodName.PAU,
    MethodName.APL,
    MethodName.KAN,
    MethodName.GRKAN,
)
EXTRA_METHODS = (MethodName.LEAKY_RELU, MethodName.PRELU, MethodName.SWISH)

Builder = Callable[[int, float], Module]


@dataclass(frozen=True)
class MethodSpec:
    '''Architecture of one model family, fully determined by its name.'''

    name: MethodName
    architecture: str
    hidden: int
    build: Builder

    def describe(self) -> Dict[str, Any]:
        return {'architecture': self.architecture, 'hidden': self.hidden}


def _fixed(kind: ActivationKind) -> Builder:
    def build(seed: int, apl_penalty: float) -> Module:
        return build_mlp(lambda units: FixedActivation(kind), TOY_MLP_HIDDEN, seed)

    return build


def _pau(seed: int, apl_penalty: float) -> Module:
    return build_mlp(lambda units: PadeActivation(ActivationKind.LEAKY_RELU), TOY_MLP_HIDDEN, seed)


def _prelu(seed: int, apl_penalty: float) -> Module:
    return build_mlp(lambda units: PReLU(PRELU_INIT), TOY_MLP_HIDDEN, seed)


def _apl(seed: int, apl_penalty: float) -> Module:
    # hinge parameters get their own stream so the dense weights match other MLP seeds
    hinge_rng = np.random.default_rng([seed, 1])

    def activation(units: int) -> Module:
        return APL(units, APL_HINGES, apl_penalty, int(hinge_rng.integers(SEED_SPACE)))

    return build_mlp(activation, TOY_APL_HIDDEN, seed)


def _kan(seed: int, apl_penalty: float) -> Module:
    return build_kan(TOY_KAN_WIDTHS, seed=seed)


def _grkan(seed: int, apl_penalty: float) -> Module:
    return build_grkan(TOY_GRKAN_HIDDEN, TOY_GRKAN_GROUPS, ActivationKind.SWISH, seed)


def _mlp(activation: str, hidden: int = TOY_MLP_HIDDEN) -> str:
    return f'linear(1,{hidden}) -> {activation} -> linear({hidden},{hidden}) -> {activation} -> linear({hidden},1)'


METHODS: Dict[MethodName, MethodSpec] = {
    spec.name: spec
    for spec in (
        MethodSpec(MethodName.RELU, _mlp('relu'), TOY_MLP_HIDDEN, _fixed(ActivationKind.RELU)),
        MethodSpec(MethodName.GELU, _mlp('gelu'), TOY_MLP_HIDDEN, _fixed(ActivationKind.GELU)),
        MethodSpec(MethodName.PAU, _mlp('pau'), TOY_MLP_HIDDEN, _pau),
        MethodSpec(MethodName.APL, _mlp('apl', TOY_APL_HIDDEN), TOY_APL_HIDDEN, _apl),
        MethodSpec(MethodName.KAN, 'kan(1,4) -> kan(4,1)', TOY_KAN_WIDTHS[1], _kan),
        MethodSpec(
            MethodName.GRKAN,
            f'linear(1,{TOY_GRKAN_HIDDEN}) -> grkan({TOY_GRKAN_HIDDEN},{TOY_GRKAN_HIDDEN}) -> '
            f'grkan({TOY_GRKAN_HIDDEN},1)',
            TOY_GRKAN_HIDDEN,
            _grkan,
        ),
        MethodSpec(MethodName.LEAKY_RELU, _mlp('leaky_relu'), TOY_MLP_HIDDEN, _fixed(ActivationKind.LEAKY_RELU)),
        MethodSpec(MethodName.PRELU, _mlp('prelu'), TOY_MLP_HIDDEN, _prelu),
        MethodSpec(MethodName.SWISH, _mlp('swish'), TOY_MLP_HIDDEN, _fixed(ActivationKind.SWISH)),
    )
}


def method_spec(name: Union[MethodName, str]) -> MethodSpec:
    '''
    Spec of a method by name.

    Raises:
        ValueError: for an unknown method name
    '''
    return METHODS[MethodName(name)]


def build_method(name: Union[MethodName, str], seed: int, apl_penalty: float) -> Module:
    '''Fresh model of a family for a seed.'''
    return method_spec(name).build(seed, apl_penalty)


def parse_methods(names: Sequence[str]) -> List[MethodName]:
    '''Method names in the given order without duplicates.'''
    result: List[MethodName] = []
    for name in names:
        method = MethodName(name.strip())
        if method not in result:
            result.append(method)
    return result


def describe_constants() -> Dict[str, Any]:
    '''Design constants of all families for the report config echo.'''
    swish_fit = rational_fit_init(ActivationKind.SWISH)
    pau_fit = rational_fit_init(ActivationKind.LEAKY_RELU)
    lo, hi, grid_size, order = TOY_KAN_GRID
    kan_params = build_kan(TOY_KAN_WIDTHS, seed=0).param_count()
    kan_params_unscaled = build_kan(TOY_KAN_WIDTHS, seed=0, spline_scaler=False).param_count()
    return {
        'methods': {name.value: spec.describe() for name, spec in METHODS.items()},
        'rational': {
            'numerator_degree': NUMERATOR_DEGREE,
            'denominator_degree': DENOMINATOR_DEGREE,
            'fit_range': list(FIT_RANGE),
            'fit_samples': FIT_SAMPLES,
            'step_radius': STEP_RADIUS,
            'pau_init': {'target': pau_fit.target.value, 'max_error': pau_fit.max_error},
            'grkan_init': {'target': swish_fit.target.value, 'max_error': swish_fit.max_error},
        },
        'grkan_groups': TOY_GRKAN_GROUPS,
        'apl_hinges': APL_HINGES,
        'prelu_init': PRELU_INIT,
        'kan_grid': {'lo': lo, 'hi': hi, 'grid_size': grid_size, 'order': order, 'widths': list(TOY_KAN_WIDTHS)},
        'kan_spline_scaler': {
            'enabled': True,
            'params': kan_params,
            'params_without_scaler': kan_params_unscaled,
            'note': f'per-edge spline scaler w2 adds {kan_params - kan_params_unscaled} parameters to the KAN count',
        },
    }
