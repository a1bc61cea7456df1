# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/22/2026 15:30'
__version__ = '0.1.0'

import statistics
from dataclasses import dataclass, field, replace
from functools import partial
from typing import Any, Dict, List, Optional, Sequence

from core.logger import getLogger
from core.autodiff import Node, no_grad
from core.training import LossKind, RunJob, RunLabels, RunOutcome, RunTrace, TrainConfig, TrainingMetrics, l1_loss
from core.training import RUN_OK, run_jobs
from .data import DenoiseDataConfig, build_pairs, stack_pairs
from .model import ActivationSite, DenoiserActivation, DenoiserSpec, build_denoiser
from .exceptions import DenoiserSpecError

log = getLogger(__file__)

EXPERIMENT = 'denoise'
ADAPTED_SITES = (ActivationSite.ENC, ActivationSite.DEC, ActivationSite.BOTH)


@dataclass
class DenoiseRun:
    '''One trained variant for one seed.'''

    seed: int
    trace: RunTrace
    held_out_l1: Optional[float] = None
    error: Optional[str] = None
    status: str = RUN_OK

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            'seed': self.seed,
            'held_out_l1': self.held_out_l1,
            'status': self.status,
            'error': self.error,
            'trace': self.trace.to_dict(include_timing),
        }


@dataclass
class VariantResult:
    '''All seeds of one denoiser variant.'''

    spec: DenoiserSpec
    param_count: int
    param_table: List[List[Any]]
    runs: List[DenoiseRun] = field(default_factory=list)

    @property
    def median_l1(self) -> Optional[float]:
        '''Median held-out L1 over finished runs, None when every run aborted.'''
        values = [run.held_out_l1 for run in self.runs if run.held_out_l1 is not None]
        return statistics.median(values) if values else None

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            'spec': self.spec.describe(),
            'param_count': self.param_count,
            'param_table': self.param_table,
            'median_held_out_l1': self.median_l1,
            'runs': [run.to_dict(include_timing) for run in self.runs],
        }


@dataclass(frozen=True)
class SiteComparison:
    '''GR-KAN variant against the ReLU baseline of the same depth.'''

    depth: int
    site: ActivationSite
    grkan_l1: Optional[float]
    relu_l1: Optional[float]

    @property
    def improved(self) -> bool:
        return self.grkan_l1 is not None and self.relu_l1 is not None and self.grkan_l1 <= self.relu_l1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'depth': self.depth,
            'site': self.site.value,
            'grkan_median_l1': self.grkan_l1,
            'relu_median_l1': self.relu_l1,
            'improved': self.improved,
        }


@dataclass
class DenoiseReport:
    '''Per-variant medians and the site-by-site comparison against ReLU.'''

    data: DenoiseDataConfig
    train: TrainConfig
    seeds: List[int]
    variants: List[VariantResult]

    def variant(self, depth: int, kind: DenoiserActivation, site: ActivationSite) -> Optional[VariantResult]:
        for result in self.variants:
            spec = result.spec
            if spec.depth == depth and spec.activation_kind is kind:
                if spec.activation_site is site or (kind is DenoiserActivation.RELU and spec.adapted_sites()):
                    return result
        return None

    def comparisons(self) -> List[SiteComparison]:
        '''Every adapted GR-KAN variant that has a ReLU baseline at its depth.'''
        result = []
        for depth in sorted({v.spec.depth for v in self.variants}):
            baseline = self.variant(depth, DenoiserActivation.RELU, ActivationSite.BOTH)
            if baseline is None:
                continue
            for site in ADAPTED_SITES:
                adapted = self.variant(depth, DenoiserActivation.GRKAN, site)
                if adapted is not None:
                    result.append(SiteComparison(depth, site, adapted.median_l1, baseline.median_l1))
        return result

    @property
    def aborted_runs(self) -> int:
        return sum(run.error is not None for v in self.variants for run in v.runs)

    def acceptance(self) -> bool:
        '''Every GR-KAN site variant reaches a median held-out L1 no worse than ReLU.'''
        comparisons = self.comparisons()
        return bool(comparisons) and all(c.improved for c in comparisons)

    def summary_rows(self) -> List[List[Any]]:
        '''Depth-scaling view: one row per variant ordered by depth.'''
        rows: List[List[Any]] = [['variant', 'depth', 'params', 'median_l1', 'aborted']]
        for v in sorted(self.variants, key=lambda item: (item.spec.depth, item.spec.name)):
            median = 'n/a' if v.median_l1 is None else f'{v.median_l1:.5f}'
            rows.append([v.spec.name, v.spec.depth, v.param_count, median, sum(r.error is not None for r in v.runs)])
        return rows

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            'data': self.data.describe(),
            'train': self.train.describe(),
            'seeds': list(self.seeds),
            'variants': [v.to_dict(include_timing) for v in self.variants],
            'comparisons': [c.to_dict() for c in self.comparisons()],
            'acceptance': self.acceptance(),
        }


def denoise_variants(depths: Sequence[int], groups: int = 4, hidden: int = 16) -> List[DenoiserSpec]:
    '''ReLU baseline plus GR-KAN at enc, dec and both sites for every depth.'''
    specs = []
    for depth in depths:
        specs.append(DenoiserSpec(depth=depth, hidden=hidden, groups=groups))
        for site in ADAPTED_SITES:
            specs.append(
                DenoiserSpec(
                    depth=depth,
                    hidden=hidden,
                    groups=groups,
                    activation_site=site,
                    activation_kind=DenoiserActivation.GRKAN,
                )
            )
    return specs


def _held_out_l1(outcome: RunOutcome, noisy: Node, clean: Node) -> Optional[float]:
    if not outcome.ok or outcome.model is None:
        return None
    with no_grad():
        return l1_loss(outcome.model(noisy), clean).item()


async def run_denoise_experiment(
    variants: Sequence[DenoiserSpec],
    data: DenoiseDataConfig,
    train: TrainConfig,
    seeds: Sequence[int] = (0, 1, 2),
    workers: Optional[int] = None,
    metrics: Optional[TrainingMetrics] = None,
) -> DenoiseReport:
    '''
    Train every variant on the noisy train split with L1 loss for every seed.

    Aborted runs are kept in the report with their trace and no held-out score.

    Args:
        variants: at least two denoiser specs, repeated specs are trained and reported separately
        data: noisy pair settings
        train: training settings, the loss is forced to L1
        seeds: model initialization seeds
        workers: concurrent runs
        metrics: registry updated during training

    Raises:
        DenoiserSpecError: on fewer than two variants, no seeds or an empty held-out split
    '''
    if len(variants) < 2:
        raise DenoiserSpecError(f'Comparison needs at least two variants, got <{len(variants)}>')
    if not seeds:
        raise DenoiserSpecError('Comparison needs at least one seed')

    pairs = build_pairs(data)
    if not pairs.held_out:
        raise DenoiserSpecError(f'Pair count <{data.count}> leaves no held-out pairs')
    train_arrays = stack_pairs(pairs.train)
    held_noisy, held_clean = (Node(array) for array in stack_pairs(pairs.held_out))
    train_cfg = replace(train, loss=LossKind.L1)

    results = []
    for spec in variants:
        model = build_denoiser(spec, 0)
        results.append(VariantResult(spec, model.param_count(), [list(row) for row in model.param_table()]))
    jobs = [
        RunJob(
            RunLabels(EXPERIMENT, spec.name, seed),
            partial(build_denoiser, spec, seed),
            train_arrays,
            replace(train_cfg, seed=seed),
        )
        for spec in variants
        for seed in seeds
    ]
    outcomes = await run_jobs(jobs, workers, metrics)

    for index, outcome in enumerate(outcomes):
        result = results[index // len(seeds)]
        result.runs.append(
            DenoiseRun(
                outcome.job.cfg.seed,
                outcome.trace,
                _held_out_l1(outcome, held_noisy, held_clean),
                outcome.error,
                outcome.status,
            )
        )

    report = DenoiseReport(data, train_cfg, list(seeds), results)
    log.info(f'Denoise comparison done: <{len(variants)}> variants, <{report.aborted_runs}> aborted runs')
    return report
