# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '10/16/2026 16:00'
__version__ = '0.1.0'

import time
import statistics
from pathlib import Path
from functools import partial
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.logger import getLogger
from core.signal_gen import SignalConfig, SignalDataset, generate_signal
from core.training import RUN_OK, RunJob, RunLabels, RunOutcome, RunTrace, TrainConfig, TrainingMetrics, run_jobs
from .methods import TABLE1_METHODS, MethodName, build_method, describe_constants
from .report import build_report, write_report
from .export import export_fit_curve
from .exceptions import BenchConfigError

log = getLogger(__file__)

EXPERIMENT = 'table1'
CURVES_DIR = 'curves'
CSV_HEADER = ('method', 'seed', 'mse', 'params', 'status')

# exact parameter counts of the dense families
EXPECTED_PARAMS = {MethodName.RELU: 193, MethodName.GELU: 193, MethodName.PAU: 213, MethodName.APL: 257}
GELU_MARGIN = 0.01
GRKAN_MSE_TARGET = 0.12
RELU_GAP = 0.02
# share of non-increasing checkpoint pairs every finished run of a family must reach
MONOTONE_FRACTION = 0.95


@dataclass(frozen=True)
class Table1Config:
    '''Signal fitting benchmark settings.'''

    seeds: Tuple[int, ...] = (0, 1, 2)
    train: TrainConfig = field(default_factory=TrainConfig)
    methods: Tuple[MethodName, ...] = TABLE1_METHODS
    signal: SignalConfig = field(default_factory=SignalConfig)
    curves: bool = True

    def __post_init__(self) -> None:
        if not self.seeds:
            raise BenchConfigError('Benchmark needs at least one seed')
        if not self.methods:
            raise BenchConfigError('Benchmark needs at least one method')
        object.__setattr__(self, 'seeds', tuple(int(seed) for seed in self.seeds))
        object.__setattr__(self, 'methods', tuple(MethodName(method) for method in self.methods))

    def describe(self) -> Dict[str, Any]:
        return {
            'seeds': list(self.seeds),
            'methods': [method.value for method in self.methods],
            'train': self.train.describe(),
            'signal': self.signal.describe(),
            'constants': describe_constants(),
        }


@dataclass
class MethodRun:
    '''One (method, seed) training run.'''

    method: MethodName
    seed: int
    param_count: int
    param_table: List[List[Any]]
    trace: RunTrace
    error: Optional[str] = None
    status: str = RUN_OK

    @property
    def final_mse(self) -> Optional[float]:
        return self.trace.final_loss if self.error is None else None

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            'method': self.method.value,
            'seed': self.seed,
            'final_mse': self.final_mse,
            'param_count': self.param_count,
            'param_table': self.param_table,
            'status': self.status,
            'error': self.error,
            'trace': self.trace.to_dict(include_timing),
        }


@dataclass(frozen=True)
class Check:
    '''Named acceptance property.'''

    name: str
    passed: bool
    detail: str

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}


@dataclass
class Table1Report:
    '''Runs of every method and seed with medians and acceptance checks.'''

    config: Table1Config
    runs: List[MethodRun]

    def medians(self) -> Dict[MethodName, Optional[float]]:
        '''Median final MSE per method over finished runs.'''
        result: Dict[MethodName, Optional[float]] = {}
        for method in self.config.methods:
            values = [run.final_mse for run in self.runs if run.method is method and run.final_mse is not None]
            result[method] = statistics.median(values) if values else None
        return result

    def checks(self) -> List[Check]:
        '''Acceptance properties whose methods are part of the run.'''
        medians = self.medians()
        checks: List[Check] = []

        def less(name: str, left: MethodName, right: MethodName, margin: float = 0.0, strict: bool = True) -> None:
            if left not in medians or right not in medians:
                return
            a, b = medians[left], medians[right]
            passed = a is not None and b is not None and (a < b + margin if strict else a <= b + margin)
            relation = '<' if strict else '<='
            suffix = f' + {margin}' if margin else ''
            checks.append(Check(name, passed, f'{left.value} {a} {relation} {right.value} {b}{suffix}'))

        less('grkan_below_relu', MethodName.GRKAN, MethodName.RELU)
        less('kan_below_relu', MethodName.KAN, MethodName.RELU)
        less('grkan_near_gelu', MethodName.GRKAN, MethodName.GELU, GELU_MARGIN, strict=False)
        if MethodName.GRKAN in medians:
            grkan = medians[MethodName.GRKAN]
            checks.append(
                Check(
                    'grkan_target',
                    grkan is not None and grkan <= GRKAN_MSE_TARGET,
                    f'grkan {grkan} <= {GRKAN_MSE_TARGET}',
                )
            )
            if MethodName.RELU in medians:
                relu = medians[MethodName.RELU]
                checks.append(
                    Check(
                        'relu_gap',
                        grkan is not None and relu is not None and relu >= grkan + RELU_GAP,
                        f'relu {relu} >= grkan {grkan} + {RELU_GAP}',
                    )
                )
        for method, expected in EXPECTED_PARAMS.items():
            counts = sorted({run.param_count for run in self.runs if run.method is method})
            if counts:
                checks.append(Check(f'{method.value}_params', counts == [expected], f'{counts} == [{expected}]'))
        for method in self.config.methods:
            if method not in TABLE1_METHODS:
                continue
            finished = [run for run in self.runs if run.method is method and run.error is None]
            if finished:
                lowest = min(run.trace.monotone_fraction() for run in finished)
                detail = f'{lowest:.3f} >= {MONOTONE_FRACTION}'
                checks.append(Check(f'{method.value}_monotone', lowest >= MONOTONE_FRACTION, detail))
        return checks

    def acceptance(self) -> bool:
        '''All applicable checks pass and no run aborted.'''
        return all(check.passed for check in self.checks()) and not self.aborted_runs

    @property
    def aborted_runs(self) -> int:
        return sum(run.error is not None for run in self.runs)

    def csv_rows(self) -> List[List[Any]]:
        return [
            [run.method.value, run.seed, run.final_mse, run.param_count, run.status]
            for run in self.runs
        ]

    def summary_rows(self) -> List[List[Any]]:
        '''Per-method median row for the log table.'''
        medians = self.medians()
        rows = []
        for method in self.config.methods:
            params = next(run.param_count for run in self.runs if run.method is method)
            median = medians[method]
            rows.append([method.value, params, 'n/a' if median is None else median])
        return rows

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            'runs': [run.to_dict(include_timing) for run in self.runs],
            'medians': {method.value: value for method, value in self.medians().items()},
            'checks': [check.to_dict() for check in self.checks()],
            'acceptance': self.acceptance(),
        }


def _method_run(outcome: RunOutcome, method: MethodName) -> MethodRun:
    model = outcome.model
    # a run that failed to build has no parameters to report
    return MethodRun(
        method,
        outcome.job.cfg.seed,
        0 if model is None else model.param_count(),
        [] if model is None else [list(row) for row in model.param_table()],
        outcome.trace,
        outcome.error,
        outcome.status,
    )


def _export_curves(outcomes: Sequence[RunOutcome], dataset: SignalDataset, seed: int, out_dir: Path) -> None:
    for outcome in outcomes:
        if outcome.ok and outcome.model is not None and outcome.job.cfg.seed == seed:
            export_fit_curve(outcome.model, dataset, out_dir / CURVES_DIR / f'{outcome.job.labels.method}.csv')


async def run_table1(
    cfg: Table1Config,
    out_dir: Path,
    workers: Optional[int] = None,
    metrics: Optional[TrainingMetrics] = None,
) -> Table1Report:
    '''
    Train every method for every seed on the synthetic signal and write the reports.

    Fit curves of the first seed are written to `<out_dir>/curves` when enabled.

    Args:
        cfg: benchmark settings
        out_dir: output directory, created when missing
        workers: concurrent runs
        metrics: registry updated during training

    Returns:
        The assembled report
    '''
    started = time.perf_counter()
    dataset = generate_signal(cfg.signal)
    jobs = [
        RunJob(
            RunLabels(EXPERIMENT, method.value, seed),
            partial(build_method, method, seed, cfg.train.apl_penalty),
            dataset,
            replace(cfg.train, seed=seed),
        )
        for method in cfg.methods
        for seed in cfg.seeds
    ]
    log.info(f'Signal fitting: <{len(cfg.methods)}> methods x <{len(cfg.seeds)}> seeds, <{cfg.train.steps}> steps')
    outcomes = await run_jobs(jobs, workers, metrics)
    report = Table1Report(cfg, [_method_run(o, MethodName(o.job.labels.method)) for o in outcomes])

    if cfg.curves:
        _export_curves(outcomes, dataset, cfg.seeds[0], out_dir)
    timing = {
        'total_seconds': time.perf_counter() - started,
        'runs': {str(o.job.labels): o.trace.wall_time for o in outcomes},
    }
    envelope = build_report(EXPERIMENT, cfg.describe(), report.to_dict(), timing)
    write_report(out_dir, envelope, CSV_HEADER, report.csv_rows())

    log.blank()
    log.table(report.summary_rows(), header=('method', 'params', 'median_mse'))
    for check in report.checks():
        log.info(f'Check <{check.name}>: <{"pass" if check.passed else "FAIL"}> ({check.detail})')
    return report
