# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '10/16/2026 10:20'
__version__ = '0.1.0'

import asyncio
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from app_config import AppConfig
from core.logger import getLogger
from core.autodiff import Module
from .loop import TrainData, train_run
from .metrics import RunLabels, TrainingMetrics
from .trace import RunTrace, TrainConfig
from .exceptions import TrainingDivergedError

log = getLogger(__file__)

RUN_OK = 'ok'
RUN_DIVERGED = 'diverged'
RUN_FAILED = 'failed'


@dataclass(frozen=True)
class RunJob:
    '''One (method, seed) training run; the model is built inside the worker.'''

    labels: RunLabels
    build: Callable[[], Module]
    data: TrainData
    cfg: TrainConfig


@dataclass
class RunOutcome:
    '''Trained model and trace of a job, or the error that aborted it.'''

    job: RunJob
    model: Optional[Module]
    trace: RunTrace
    error: Optional[str] = None
    status: str = RUN_OK

    @property
    def ok(self) -> bool:
        return self.error is None


def execute(job: RunJob, metrics: Optional[TrainingMetrics] = None) -> RunOutcome:
    '''
    Run a job to completion.

    A divergence or any other error is recorded in the outcome instead of raised,
    so one broken run never discards the outcomes of the others.
    '''
    model: Optional[Module] = None
    try:
        model = job.build()
        model, trace = train_run(model, job.data, job.cfg, metrics, job.labels)
    except TrainingDivergedError as e:
        log.warning(f'Run <{job.labels}> aborted: {e}')
        return RunOutcome(job, model, e.trace, str(e), RUN_DIVERGED)
    except Exception as e:
        if AppConfig.DEBUG_MODE:
            log.exception(f'Run <{job.labels}> failed: <{e}>')
        else:
            log.error(f'Run <{job.labels}> failed: <{e}>')
        if metrics:
            metrics.run_aborted(job.labels)
        return RunOutcome(job, model, RunTrace(seed=job.cfg.seed), f'{type(e).__name__}: {e}', RUN_FAILED)
    return RunOutcome(job, model, trace)


async def run_jobs(
    jobs: Sequence[RunJob], workers: Optional[int] = None, metrics: Optional[TrainingMetrics] = None
) -> List[RunOutcome]:
    '''
    Fan jobs out over worker threads.

    Every model is confined to its own thread; outcomes come back in job order.

    Args:
        jobs: runs to execute
        workers: concurrent runs, AppConfig.WORKERS by default
        metrics: shared registry updated by every run
    '''
    limit = asyncio.Semaphore(max(1, workers or AppConfig.WORKERS))

    async def worker(job: RunJob) -> RunOutcome:
        async with limit:
            return await asyncio.to_thread(execute, job, metrics)

    log.info(f'Running <{len(jobs)}> jobs on <{max(1, workers or AppConfig.WORKERS)}> workers')
    return list(await asyncio.gather(*(worker(job) for job in jobs)))
