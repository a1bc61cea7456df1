# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

'''Finite difference oracle and per-operation gradient checks.'''

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/16/2026 14:05'

from typing import Callable

import allure
import numpy as np
import pytest

from core.autodiff import Node, ops, finite_diff_check, check_parameters

OPS_TOLERANCE = 1e-4


@allure.feature('Autodiff')
@allure.story('Gradient Oracle')
class TestFiniteDiffCheck:
    '''Central difference oracle.'''

    @allure.title('Square at 3')
    def test_square(self) -> None:
        '''Central difference of x^2 is exact up to rounding.'''
        assert finite_diff_check(lambda x: ops.sum(x * x), np.array([3.0]), eps=1e-5) < 1e-6

    @allure.title('Sum has constant gradient')
    def test_sum(self, rng: np.random.Generator) -> None:
        '''Gradient of sum(x) is all ones at any point.'''
        assert finite_diff_check(ops.sum, rng.normal(size=20)) < 1e-9

    @allure.title('Elementwise operations at 100 random points')
    @pytest.mark.parametrize(
        'name, f',
        [
            ('add', lambda x: ops.sum(x + x * 0.5)),
            ('sub', lambda x: ops.sum(1.0 - x * x)),
            ('mul', lambda x: ops.sum(x * ops.tanh(x))),
            ('div', lambda x: ops.sum(x / (x * x + 1.0))),
            ('neg', lambda x: ops.sum(-(x**3))),
            ('pow_int', lambda x: ops.sum(x**4)),
            ('pow_real', lambda x: ops.sum((x * x + 0.5) ** 1.5)),
            ('exp', lambda x: ops.sum(ops.exp(x * 0.5))),
            ('tanh', lambda x: ops.sum(ops.tanh(x))),
            ('abs', lambda x: ops.sum(abs(x) * x)),
            ('maximum', lambda x: ops.sum(ops.maximum(x, 0.0) * x)),
            ('mean', lambda x: ops.mean(x * x)),
        ],
    )
    def test_elementwise(self, points: np.ndarray, name: str, f: Callable[[Node], Node]) -> None:
        '''Analytic gradient matches central differences within 1e-4.'''
        assert finite_diff_check(f, points) < OPS_TOLERANCE, name

    @allure.title('Matrix and layout operations')
    def test_matrix_ops(self, rng: np.random.Generator) -> None:
        '''Matmul, reshape, transpose and axis reductions pass the oracle.'''
        w = rng.uniform(-3.0, 3.0, size=(4, 25))
        v = rng.uniform(-3.0, 3.0, size=25)

        def f(x: Node) -> Node:
            m = ops.reshape(x, (25, 4))
            h = ops.tanh(ops.matmul(w, m))
            return ops.sum(ops.mean(ops.transpose(h), axis=0) ** 2) + ops.sum(ops.matmul(v, m))

        assert finite_diff_check(f, rng.uniform(-3.0, 3.0, size=100)) < OPS_TOLERANCE

    @allure.title('Several parameters in place')
    def test_check_parameters(self, rng: np.random.Generator) -> None:
        '''Closure check perturbs and restores every parameter.'''
        # given
        w = Node(rng.normal(size=(3, 2)), requires_grad=True)
        b = Node(rng.normal(size=2), requires_grad=True)
        x = rng.normal(size=(5, 3))
        before = w.value.copy()
        # when
        error = check_parameters(lambda: ops.mean(ops.tanh(ops.matmul(x, w) + b) ** 2), [w, b])
        # then
        assert error < OPS_TOLERANCE
        np.testing.assert_array_equal(w.value, before)
