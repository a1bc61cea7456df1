# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/21/2026 14:20'

import math

import allure
import numpy as np
import pytest

from core.autodiff import Node
from core.training import (
    ADAM_DEFAULTS,
    ADAMW_DEFAULTS,
    Adam,
    AdamConfig,
    AdamState,
    AdamW,
    OptimizerKind,
    adam_step,
    make_optimizer,
    optimizer_config,
)


def scalar_adam(theta: float, grads: list, cfg: AdamConfig) -> float:
    '''Textbook Adam on a single float.'''
    m = v = 0.0
    for t, g in enumerate(grads, start=1):
        m = cfg.beta1 * m + (1.0 - cfg.beta1) * g
        v = cfg.beta2 * v + (1.0 - cfg.beta2) * g * g
        theta -= cfg.lr * (m / (1.0 - cfg.beta1**t)) / (math.sqrt(v / (1.0 - cfg.beta2**t)) + cfg.eps)
    return theta


@allure.feature('Training')
@allure.story('Adam')
class TestAdam:
    '''Bias-corrected Adam update.'''

    @allure.title('First step with unit gradient')
    def test_first_step(self) -> None:
        '''theta_1 = theta_0 - lr / (1 + eps).'''
        # given
        param = np.array([0.0])
        state = AdamState.zeros([param])
        # when
        adam_step(state, [param], [np.array([1.0])], ADAM_DEFAULTS)
        # then
        assert param[0] == pytest.approx(-1e-3 / (1.0 + 1e-8), abs=1e-8)
        assert state.step == 1

    @allure.title('Zero gradient keeps parameters')
    def test_zero_gradient(self) -> None:
        '''Without weight decay a zero gradient is a no-op.'''
        param = np.array([0.3, -2.0])
        adam_step(AdamState.zeros([param]), [param], [np.zeros(2)], ADAM_DEFAULTS)
        np.testing.assert_array_equal(param, [0.3, -2.0])

    @allure.title('Symmetric parameters stay symmetric')
    def test_symmetry(self, rng: np.random.Generator) -> None:
        '''Equal values with equal gradients update identically.'''
        param = np.full(4, 0.7)
        state = AdamState.zeros([param])
        for _ in range(20):
            adam_step(state, [param], [np.full(4, rng.normal())], ADAM_DEFAULTS)
        assert np.all(param == param[0])

    @allure.title('Matches scalar reference')
    def test_scalar_reference(self, rng: np.random.Generator) -> None:
        '''1000 random steps agree with a float implementation within 1e-12.'''
        # given
        grads = rng.normal(size=1000).tolist()
        param = np.array([0.25])
        state = AdamState.zeros([param])
        # when
        for g in grads:
            adam_step(state, [param], [np.array([g])], ADAM_DEFAULTS)
        # then
        assert param[0] == pytest.approx(scalar_adam(0.25, grads, ADAM_DEFAULTS), abs=1e-12)

    @allure.title('Per-element step scale')
    def test_step_scale(self) -> None:
        '''A node scale multiplies the first step elementwise.'''
        # given
        node = Node(np.zeros(3), requires_grad=True)
        node.lr_scale = np.array([1.0, 0.5, 0.0])
        optimizer = make_optimizer('adam', [node], ADAM_DEFAULTS)
        node.grad = np.ones(3)
        # when
        optimizer.step()
        # then
        np.testing.assert_allclose(node.value, [-1e-3, -5e-4, 0.0], atol=1e-10)

    @allure.title('Node optimizer reads accumulated gradients')
    def test_node_optimizer(self) -> None:
        '''Adam over nodes updates values and zero_grad clears gradients.'''
        node = Node(np.array([1.0, 1.0]), requires_grad=True)
        optimizer = make_optimizer('adam', [node], ADAM_DEFAULTS)
        node.grad = np.array([1.0, -1.0])
        optimizer.step()
        assert isinstance(optimizer, Adam) and not isinstance(optimizer, AdamW)
        np.testing.assert_allclose(node.value, [1.0 - 1e-3, 1.0 + 1e-3], atol=1e-10)
        optimizer.zero_grad()
        assert not node.grad.any()


@allure.feature('Training')
@allure.story('AdamW')
class TestAdamW:
    '''Decoupled weight decay.'''

    @allure.title('Preset')
    def test_preset(self) -> None:
        '''AdamW defaults are beta = (0.8, 0.99) with weight decay.'''
        cfg = optimizer_config(OptimizerKind.ADAMW, lr=0.01)
        assert (cfg.beta1, cfg.beta2, cfg.lr) == (0.8, 0.99, 0.01)
        assert cfg.weight_decay == ADAMW_DEFAULTS.weight_decay > 0
        assert optimizer_config('adam') is ADAM_DEFAULTS

    @allure.title('Decay with zero gradient')
    def test_decay(self) -> None:
        '''theta shrinks by lr * wd per step when the gradient is zero.'''
        node = Node(np.array([2.0]), requires_grad=True)
        optimizer = make_optimizer('adamw', [node], ADAMW_DEFAULTS)
        node.zero_grad()
        optimizer.step()
        optimizer.step()
        shrink = 1.0 - ADAMW_DEFAULTS.lr * ADAMW_DEFAULTS.weight_decay
        assert isinstance(optimizer, AdamW)
        assert node.value[0] == pytest.approx(2.0 * shrink**2, abs=1e-15)
