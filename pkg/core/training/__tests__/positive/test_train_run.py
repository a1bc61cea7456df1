# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/21/2026 14:40'

from typing import Tuple

import allure
import numpy as np
import pytest

from core.layers import Linear
from core.signal_gen import SignalConfig, generate_signal
from core.training import EarlyStop, TrainConfig, train_run
from ..conftest import AffineModel, PenaltyOnlyModel, ScriptedModel

Data = Tuple[np.ndarray, np.ndarray]


@allure.feature('Training')
@allure.story('Full Batch Loop')
class TestTrainRun:
    '''train_run on small problems.'''

    @allure.title('Constant target is fitted')
    def test_constant_target(self, constant_data: Data) -> None:
        '''Affine model reaches MSE < 1e-6 within 1000 steps.'''
        # given
        cfg = TrainConfig.create(lr=0.01, steps=1000)
        # when
        model, trace = train_run(AffineModel(), constant_data, cfg)
        # then
        assert trace.final_loss < 1e-6
        assert model.bias.value[0] == pytest.approx(0.5, abs=1e-3)
        assert trace.steps_run == 1000 and not trace.stopped_early

    @allure.title('Checkpoint schedule')
    def test_checkpoints(self, constant_data: Data) -> None:
        '''One checkpoint every steps // 100 steps plus the final step.'''
        cfg = TrainConfig(steps=251, checkpoints=100)
        _, trace = train_run(AffineModel(), constant_data, cfg)
        steps = [step for step, _ in trace.checkpoints]
        assert steps[:3] == [2, 4, 6]
        assert steps[-1] == 251
        assert len(steps) == 126

    @allure.title('Identical runs are bitwise equal')
    def test_determinism(self) -> None:
        '''Same seed and config give the same trace bits.'''
        # given
        dataset = generate_signal(SignalConfig(duration=1.0))
        cfg = TrainConfig(steps=50, checkpoints=10)
        traces = []
        # when
        for _ in range(2):
            _, trace = train_run(Linear(1, 1, seed=3), dataset, cfg)
            traces.append(trace.to_dict())
        # then
        assert traces[0] == traces[1]
        assert 'wall_time' not in traces[0]

    @allure.title('Loss decreases on the synthetic signal')
    def test_monotone(self) -> None:
        '''Affine fit of the signal improves at most checkpoints.'''
        dataset = generate_signal(SignalConfig(duration=1.0))
        _, trace = train_run(AffineModel(0.5, 0.5), dataset, TrainConfig(steps=200, checkpoints=20))
        assert trace.losses[-1] < trace.losses[0]
        assert trace.monotone_fraction() >= 0.8

    @allure.title('Early stop on a stalled loss')
    def test_early_stop(self, constant_data: Data) -> None:
        '''A model already at the optimum stops at the second window boundary.'''
        cfg = TrainConfig(steps=1000, early_stop=EarlyStop(window=100, tolerance=0.01))
        _, trace = train_run(AffineModel(0.0, 0.5), constant_data, cfg)
        assert trace.stopped_early
        assert trace.steps_run == 200
        assert trace.checkpoints[-1][0] == 200

    @allure.title('Penalty enters the gradient')
    def test_penalty(self, constant_data: Data) -> None:
        '''Only the penalty moves the parameter; the recorded loss excludes it.'''
        inputs, _ = constant_data
        model, trace = train_run(PenaltyOnlyModel(), (inputs, np.zeros_like(inputs)), TrainConfig(steps=100))
        assert 0.85 < model.weight.value[0] < 0.95
        assert trace.final_loss == 0.0

    @allure.title('Checkpoints hold the interval mean loss')
    def test_interval_mean(self, constant_data: Data) -> None:
        '''Loss k at step k gives the mean of each block of five steps.'''
        # given
        inputs, _ = constant_data
        model = ScriptedModel([float(k) for k in range(1, 21)])
        # when
        _, trace = train_run(model, (inputs, np.zeros_like(inputs)), TrainConfig(steps=20, checkpoints=4))
        # then
        assert [step for step, _ in trace.checkpoints] == [5, 10, 15, 20]
        assert trace.losses == pytest.approx([3.0, 8.0, 13.0, 18.0], rel=1e-9)

    @allure.title('Short runs record every step')
    def test_short_run(self, constant_data: Data) -> None:
        '''Fewer steps than checkpoints gives one checkpoint per step.'''
        inputs, _ = constant_data
        losses = [1.0 / k for k in range(1, 41)]
        _, trace = train_run(ScriptedModel(losses), (inputs, np.zeros_like(inputs)), TrainConfig(steps=40))
        assert TrainConfig(steps=40).checkpoint_interval == 1
        assert [step for step, _ in trace.checkpoints] == list(range(1, 41))
        assert trace.losses == pytest.approx(losses, rel=1e-9)

    @allure.title('Early stop ignores a spike at the window boundary')
    def test_early_stop_boundary_spike(self, constant_data: Data) -> None:
        '''Boundary steps stay at 1.0 while the window means keep falling.'''
        # given
        inputs, _ = constant_data
        losses = [1.0 if step % 10 == 0 else 1.0 / ((step - 1) // 10 + 1) for step in range(1, 101)]
        cfg = TrainConfig(steps=100, early_stop=EarlyStop(window=10, tolerance=0.01))
        # when
        _, trace = train_run(ScriptedModel(losses), (inputs, np.zeros_like(inputs)), cfg)
        # then
        assert not trace.stopped_early
        assert trace.steps_run == 100

    @allure.title('Early stop on a stalled window mean')
    def test_early_stop_window_mean(self, constant_data: Data) -> None:
        '''Falling boundary samples do not keep a stalled run alive.'''
        # given
        inputs, _ = constant_data
        losses = [1.0 / ((step - 1) // 10 + 1) if step % 10 == 0 else 1.0 for step in range(1, 101)]
        cfg = TrainConfig(steps=100, early_stop=EarlyStop(window=10, tolerance=0.01))
        # when
        _, trace = train_run(ScriptedModel(losses), (inputs, np.zeros_like(inputs)), cfg)
        # then
        assert trace.stopped_early
        assert trace.steps_run == 40
