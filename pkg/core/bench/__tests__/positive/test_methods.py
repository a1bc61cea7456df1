# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/24/2026 14:10'

import allure
import numpy as np
import pytest

from core.autodiff import Node
from core.bench import EXTRA_METHODS, METHODS, TABLE1_METHODS, MethodName, build_method, describe_constants
from core.bench import parse_methods


@allure.feature('Benchmark')
@allure.story('Model Families')
class TestMethods:
    '''Architecture of every family is fixed by its name.'''

    @allure.title('Parameter counts')
    @pytest.mark.parametrize(
        'name, expected',
        [
            ('relu', 193),
            ('gelu', 193),
            ('pau', 213),
            ('apl', 257),
            ('kan', 80),
            ('grkan', 177),
            ('leaky_relu', 193),
            ('prelu', 195),
            ('swish', 193),
        ],
    )
    def test_param_count(self, name: str, expected: int) -> None:
        '''Dense families reproduce the reference table exactly; KAN and GR-KAN follow their layer formulas.'''
        assert build_method(name, 0, 0.0).param_count() == expected

    @allure.title('Itemized parameter table sums to the count')
    @pytest.mark.parametrize('name', [m.value for m in MethodName])
    def test_param_table(self, name: str) -> None:
        model = build_method(name, 1, 0.0)
        assert sum(count for _, count in model.param_table()) == model.param_count()

    @allure.title('Method sets')
    def test_sets(self) -> None:
        assert [m.value for m in TABLE1_METHODS] == ['relu', 'gelu', 'pau', 'apl', 'kan', 'grkan']
        assert set(TABLE1_METHODS).isdisjoint(EXTRA_METHODS)
        assert set(METHODS) == set(TABLE1_METHODS) | set(EXTRA_METHODS)

    @allure.title('Same seed builds the same model')
    @pytest.mark.parametrize('name', [m.value for m in TABLE1_METHODS])
    def test_seeded(self, name: str) -> None:
        # given
        x = Node(np.linspace(-1, 1, 7).reshape(-1, 1))
        # when
        first = build_method(name, 3, 0.0)(x).value
        second = build_method(name, 3, 0.0)(x).value
        other = build_method(name, 4, 0.0)(x).value
        # then
        assert first.shape == (7, 1)
        np.testing.assert_array_equal(first, second)
        assert not np.array_equal(first, other)

    @allure.title('Method list parsing')
    def test_parse(self) -> None:
        assert parse_methods(['grkan', ' relu', 'grkan']) == [MethodName.GRKAN, MethodName.RELU]

    @allure.title('Design constants echo')
    def test_constants(self) -> None:
        '''Rational degrees, init targets, group count and grid settings are all reported.'''
        constants = describe_constants()
        assert constants['rational']['numerator_degree'] == 5
        assert constants['rational']['denominator_degree'] == 4
        assert constants['rational']['grkan_init']['target'] == 'swish'
        assert constants['rational']['pau_init']['target'] == 'leaky_relu'
        assert constants['grkan_groups'] > 0
        assert constants['kan_grid']['grid_size'] == 5
        assert constants['kan_spline_scaler']['params'] == 80
        assert constants['kan_spline_scaler']['params_without_scaler'] == 72
        assert 'spline scaler w2 adds 8 parameters' in constants['kan_spline_scaler']['note']
        assert constants['rational']['step_radius'] == constants['rational']['fit_range'][1]
        assert constants['kan_grid']['order'] == 3
        assert set(constants['methods']) == {m.value for m in MethodName}
