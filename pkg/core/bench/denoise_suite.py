# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/23/2026 15:20'
__version__ = '0.1.0'

import time
from pathlib import Path
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from core.logger import getLogger
from core.denoise import DenoiseDataConfig, DenoiseReport, denoise_variants, parity_offset, run_denoise_experiment
from core.denoise import DenoiserActivation, DenoiserSpec
from core.denoise.experiment import EXPERIMENT
from core.training import TrainConfig, TrainingMetrics
from .report import build_report, write_report
from .exceptions import BenchConfigError

log = getLogger(__file__)

CSV_HEADER = ('variant', 'depth', 'site', 'activation', 'seed', 'held_out_l1', 'params', 'status')
DENOISE_STEPS = 2000


@dataclass(frozen=True)
class DenoiseConfig:
    '''Toy denoiser comparison settings.'''

    depths: Tuple[int, ...] = (2,)
    seeds: Tuple[int, ...] = (0, 1, 2)
    data: DenoiseDataConfig = field(default_factory=DenoiseDataConfig)
    train: TrainConfig = field(default_factory=lambda: TrainConfig(steps=DENOISE_STEPS))
    groups: int = 4
    hidden: int = 16

    def __post_init__(self) -> None:
        if not self.depths or min(self.depths) < 1:
            raise BenchConfigError(f'Denoise depths must be positive, got <{self.depths}>')
        if not self.seeds:
            raise BenchConfigError('Denoise comparison needs at least one seed')
        object.__setattr__(self, 'depths', tuple(sorted({int(d) for d in self.depths})))
        object.__setattr__(self, 'seeds', tuple(int(seed) for seed in self.seeds))

    def variants(self) -> List[DenoiserSpec]:
        return denoise_variants(self.depths, self.groups, self.hidden)

    def describe(self) -> Dict[str, Any]:
        return {
            'depths': list(self.depths),
            'seeds': list(self.seeds),
            'groups': self.groups,
            'hidden': self.hidden,
            'data': self.data.describe(),
            'train': self.train.describe(),
            'variants': [spec.describe() for spec in self.variants()],
            'parity_offsets': {
                spec.name: parity_offset(spec)
                for spec in self.variants()
                if spec.activation_kind is DenoiserActivation.GRKAN
            },
        }


def csv_rows(report: DenoiseReport) -> List[List[Any]]:
    '''One row per (variant, seed).'''
    rows = []
    for variant in report.variants:
        spec = variant.spec
        for run in variant.runs:
            rows.append(
                [
                    spec.name,
                    spec.depth,
                    spec.activation_site.value,
                    spec.activation_kind.value,
                    run.seed,
                    run.held_out_l1,
                    variant.param_count,
                    run.status,
                ]
            )
    return rows


async def run_denoise(
    cfg: DenoiseConfig,
    out_dir: Path,
    workers: Optional[int] = None,
    metrics: Optional[TrainingMetrics] = None,
) -> DenoiseReport:
    '''
    Compare GR-KAN activation sites against the ReLU denoiser and write the reports.

    Args:
        cfg: comparison settings
        out_dir: output directory, created when missing
        workers: concurrent runs
        metrics: registry updated during training

    Returns:
        The assembled report
    '''
    started = time.perf_counter()
    log.info(f'Denoise: depths <{list(cfg.depths)}>, <{len(cfg.seeds)}> seeds, SNR <{cfg.data.snr_db}> dB')
    report = await run_denoise_experiment(cfg.variants(), cfg.data, cfg.train, cfg.seeds, workers, metrics)

    timing = {
        'total_seconds': time.perf_counter() - started,
        'runs': {
            f'{EXPERIMENT}/{v.spec.name}/{run.seed}': run.trace.wall_time for v in report.variants for run in v.runs
        },
    }
    envelope = build_report(EXPERIMENT, cfg.describe(), report.to_dict(), timing)
    write_report(out_dir, envelope, CSV_HEADER, csv_rows(report))

    summary = report.summary_rows()
    log.blank()
    log.table(summary[1:], header=summary[0])
    for comparison in report.comparisons():
        log.info(
            f'Depth <{comparison.depth}> site <{comparison.site.value}>: grkan <{comparison.grkan_l1}> '
            f'vs relu <{comparison.relu_l1}> -> <{"improved" if comparison.improved else "WORSE"}>'
        )
    return report
