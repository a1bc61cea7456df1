# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/22/2026 10:40'

from functools import partial
from typing import Tuple

import allure
import numpy as np
import pytest

from core.autodiff import Module, Node
from core.training import RunJob, RunLabels, TrainConfig, TrainingMetrics, execute, run_jobs
from ..conftest import AffineModel


@allure.feature('Training')
@allure.story('Job Runner')
class TestRunJobs:
    '''Thread fan-out of independent runs.'''

    @allure.title('Outcomes keep job order and match sequential runs')
    @pytest.mark.asyncio
    async def test_parallel_equals_sequential(self, constant_data: Tuple[np.ndarray, np.ndarray]) -> None:
        '''Parallel traces are identical to running the jobs one by one.'''
        # given
        jobs = []
        for seed in range(4):
            labels = RunLabels('table1', 'affine', seed)
            build = partial(AffineModel, 0.1 * seed)
            jobs.append(RunJob(labels, build, constant_data, TrainConfig(steps=40, seed=seed)))
        # when
        outcomes = await run_jobs(jobs, workers=3)
        # then
        assert [outcome.job.labels.seed for outcome in outcomes] == [0, 1, 2, 3]
        for job, outcome in zip(jobs, outcomes):
            assert outcome.ok
            assert outcome.trace.to_dict() == execute(job).trace.to_dict()

    @allure.title('Diverged run is recorded, not raised')
    @pytest.mark.asyncio
    async def test_divergence_recorded(self, constant_data: Tuple[np.ndarray, np.ndarray]) -> None:
        '''The aborted job keeps its trace and the others finish.'''
        # given
        inputs, targets = constant_data
        metrics = TrainingMetrics()
        jobs = [
            RunJob(RunLabels('table1', 'good', 0), AffineModel, (inputs, targets), TrainConfig(steps=10)),
            RunJob(RunLabels('table1', 'bad', 0), AffineModel, (inputs, targets * 1e4), TrainConfig(steps=10)),
        ]
        # when
        good, bad = await run_jobs(jobs, workers=2, metrics=metrics)
        # then
        assert good.ok and not bad.ok
        assert 'diverged' in bad.error
        assert (good.status, bad.status) == ('ok', 'diverged')
        assert bad.trace.steps_run == 0
        assert metrics.registry.get_sample_value('grkan_bench_runs_aborted_total', {'experiment': 'table1'}) == 1

    @allure.title('Failing build or model is recorded, not raised')
    @pytest.mark.asyncio
    async def test_failure_recorded(self, constant_data: Tuple[np.ndarray, np.ndarray]) -> None:
        '''Errors other than divergence abort only their own job.'''

        # given
        def broken_build() -> Module:
            raise ValueError('no model for this job')

        class BrokenModel(AffineModel):
            def forward(self, x: Node) -> Node:
                raise RuntimeError('forward failed')

        metrics = TrainingMetrics()
        cfg = TrainConfig(steps=10)
        jobs = [
            RunJob(RunLabels('table1', 'good', 0), AffineModel, constant_data, cfg),
            RunJob(RunLabels('table1', 'build', 0), broken_build, constant_data, cfg),
            RunJob(RunLabels('table1', 'forward', 0), BrokenModel, constant_data, cfg),
        ]
        # when
        good, build, forward = await run_jobs(jobs, workers=2, metrics=metrics)
        # then
        assert good.ok and good.status == 'ok'
        assert build.status == forward.status == 'failed'
        assert build.model is None and 'ValueError' in build.error
        assert isinstance(forward.model, BrokenModel) and 'forward failed' in forward.error
        assert forward.trace.checkpoints == [] and forward.trace.seed == 0
        assert metrics.registry.get_sample_value('grkan_bench_runs_aborted_total', {'experiment': 'table1'}) == 2
