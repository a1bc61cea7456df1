# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/21/2026 12:10'
__version__ = '0.1.0'

from pathlib import Path
from dataclasses import dataclass
from typing import Optional

from prometheus_client import CollectorRegistry, Counter, Gauge, push_to_gateway, write_to_textfile

from app_config import AppConfig
from core.logger import getLogger

METRIC_PREFIX = 'grkan_bench'
RUN_LABELS = ('experiment', 'method', 'seed')
TEXTFILE_NAME = 'metrics.prom'


@dataclass(frozen=True)
class RunLabels:
    '''Prometheus labels of one training run.'''

    experiment: str
    method: str
    seed: int

    def as_dict(self) -> dict:
        return {'experiment': self.experiment, 'method': self.method, 'seed': str(self.seed)}

    def __str__(self) -> str:
        return f'{self.experiment}/{self.method}/{self.seed}'


class TrainingMetrics:
    '''
    Per-benchmark Prometheus registry of training progress.

    Metrics are updated at every checkpoint and exported once at the end as a
    text file and, when a pushgateway url is configured, pushed under the job name.
    '''

    def __init__(self, registry: Optional[CollectorRegistry] = None) -> None:
        self.log = getLogger(self.__class__.__name__)
        self.registry = registry or CollectorRegistry()
        self.loss = Gauge(
            f'{METRIC_PREFIX}_train_loss', 'Training loss at the last checkpoint', RUN_LABELS, registry=self.registry
        )
        self.steps = Counter(
            f'{METRIC_PREFIX}_train_steps', 'Optimizer steps performed', RUN_LABELS, registry=self.registry
        )
        self.params = Gauge(
            f'{METRIC_PREFIX}_param_count', 'Trainable scalars of the model', RUN_LABELS, registry=self.registry
        )
        self.run_seconds = Gauge(
            f'{METRIC_PREFIX}_run_seconds', 'Wall time of a finished run', RUN_LABELS, registry=self.registry
        )
        self.aborted = Counter(
            f'{METRIC_PREFIX}_runs_aborted', 'Runs aborted by divergence', ('experiment',), registry=self.registry
        )

    def checkpoint(self, labels: RunLabels, steps: int, loss: float) -> None:
        '''Record a checkpoint reached after `steps` more optimizer steps.'''
        self.loss.labels(**labels.as_dict()).set(loss)
        self.steps.labels(**labels.as_dict()).inc(steps)

    def run_started(self, labels: RunLabels, param_count: int) -> None:
        self.params.labels(**labels.as_dict()).set(param_count)

    def run_finished(self, labels: RunLabels, seconds: float) -> None:
        self.run_seconds.labels(**labels.as_dict()).set(seconds)

    def run_aborted(self, labels: RunLabels) -> None:
        self.aborted.labels(experiment=labels.experiment).inc()

    def export(self, out_dir: Path, pushgateway_url: Optional[str] = None, job: Optional[str] = None) -> Path:
        '''
        Write the registry in text format and push it if a gateway is configured.

        Push failures are logged and never raised.

        Returns:
            Path of the written text file
        '''
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / TEXTFILE_NAME
        write_to_textfile(str(path), self.registry)
        self.log.info(f'Metrics written to <{path}>')

        url = AppConfig.PUSHGATEWAY_URL if pushgateway_url is None else pushgateway_url
        if url:
            job_name = job or AppConfig.METRICS_JOB_NAME
            try:
                push_to_gateway(url, job=job_name, registry=self.registry)
                self.log.info(f'Pushed metrics for job <{job_name}> to <{url}>')
            except Exception as e:
                if AppConfig.DEBUG_MODE:
                    self.log.exception(f'Failed to push metrics for job {job_name}: {e}')
                else:
                    self.log.error(f'Failed to push metrics for job {job_name}: {e}')
        return path
