# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/20/2026 09:40'
__version__ = '0.1.0'

'''
Synthetic speech-like signal: syllables with a modulated carrier and formants,
separated by silent pauses.

Within a syllable of length D and local time tau the instantaneous base
frequency is

    f(tau) = f0 * (1 + d1 * sin(2 pi r1 tau) + d2 * cos(2 pi r2 tau))

and the carrier is the sine of its analytic phase integral. Each formant F is a
sinusoid at F + delta * sin(2 pi rf tau) with a random start phase. Carrier and
formants share the envelope s * exp(-c * tau / D).
'''

import csv
from pathlib import Path
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from core.logger import getLogger

log = getLogger(__file__)


class SignalConfigError(ValueError):
    '''Raised on invalid signal generator settings'''


@dataclass(frozen=True)
class SignalConfig:
    '''Generator settings. Durations are in seconds, frequencies in Hz.'''

    duration: float = 5.0
    sample_rate: float = 100.0
    syllable_dur: Tuple[float, float] = (0.150, 0.250)
    pause_dur: Tuple[float, float] = (0.020, 0.100)
    base_freq: float = 5.0
    freq_mod_depth: Tuple[float, float] = (0.3, 0.2)
    freq_mod_rate: Tuple[float, float] = (0.8, 1.3)
    formants: Tuple[float, ...] = (500.0, 1500.0, 3000.0)
    formant_mod: float = 40.0
    formant_mod_rate: float = 2.0
    formant_amplitude: float = 0.25
    envelope_scale: Tuple[float, float] = (0.5, 1.5)
    envelope_decay: float = 3.0
    noise_std: float = 0.05
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.duration > 0 or not self.sample_rate > 0:
            raise SignalConfigError(
                f'Duration and sample rate must be positive, got <{self.duration}, {self.sample_rate}>'
            )
        for name in ('syllable_dur', 'pause_dur', 'envelope_scale'):
            lo, hi = getattr(self, name)
            if not 0 < lo <= hi:
                raise SignalConfigError(f'Range <{name}> must satisfy 0 < lo <= hi, got <{lo}, {hi}>')
        if self.noise_std < 0:
            raise SignalConfigError(f'Noise std must be >= 0, got <{self.noise_std}>')
        if not 0 <= self.formant_mod <= min(self.formants, default=np.inf):
            raise SignalConfigError(f'Formant modulation <{self.formant_mod}> must be within [0, lowest formant]')

    @property
    def num_samples(self) -> int:
        return int(round(self.duration * self.sample_rate))

    def describe(self) -> Dict[str, Any]:
        '''JSON-compatible echo of all constants.'''
        return {name: list(value) if isinstance(value, tuple) else value for name, value in asdict(self).items()}


@dataclass(frozen=True)
class Segment:
    '''Half-open time interval [start, end) of a syllable or a pause.'''

    kind: str  # 'syllable' or 'pause'
    start: float
    end: float

    @property
    def length(self) -> float:
        return self.end - self.start


@dataclass(frozen=True)
class AffineMap:
    '''y = scale * x + offset.'''

    scale: float
    offset: float

    @classmethod
    def between(cls, src: Tuple[float, float], dst: Tuple[float, float]) -> 'AffineMap':
        '''Map sending src[0] to dst[0] and src[1] to dst[1].'''
        scale = (dst[1] - dst[0]) / (src[1] - src[0])
        return cls(scale=scale, offset=dst[0] - scale * src[0])

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.scale * np.asarray(x, dtype=np.float64) + self.offset

    def invert(self, y: np.ndarray) -> np.ndarray:
        return (np.asarray(y, dtype=np.float64) - self.offset) / self.scale

    def describe(self) -> Dict[str, float]:
        return {'scale': self.scale, 'offset': self.offset}


@dataclass(frozen=True)
class SyntheticSignal:
    '''Raw generator output in seconds.'''

    raw_time: np.ndarray
    values: np.ndarray
    segments: List[Segment]
    config: SignalConfig


@dataclass(frozen=True)
class SignalDataset:
    '''
    Regression dataset: normalized time inputs in [-1, 1] and signal targets.

    The normalization map is kept so inputs can be converted back to seconds.
    '''

    inputs: np.ndarray
    targets: np.ndarray
    raw_time: np.ndarray
    normalization: AffineMap
    segments: List[Segment] = field(default_factory=list)
    config: Optional[SignalConfig] = None

    def __len__(self) -> int:
        return len(self.targets)

    def columns(self) -> Tuple[np.ndarray, np.ndarray]:
        '''Inputs and targets as (N, 1) arrays for scalar regression models.'''
        return self.inputs.reshape(-1, 1), self.targets.reshape(-1, 1)


def _base_phase(cfg: SignalConfig, tau: np.ndarray) -> np.ndarray:
    '''Analytic integral of 2 pi f(tau).'''
    (d1, d2), (r1, r2) = cfg.freq_mod_depth, cfg.freq_mod_rate
    integral = tau + d1 * (1.0 - np.cos(2 * np.pi * r1 * tau)) / (2 * np.pi * r1)
    integral = integral + d2 * np.sin(2 * np.pi * r2 * tau) / (2 * np.pi * r2)
    return 2 * np.pi * cfg.base_freq * integral


def _formant_phase(cfg: SignalConfig, formant: float, tau: np.ndarray) -> np.ndarray:
    '''Analytic integral of 2 pi (F + delta * sin(2 pi rf tau)).'''
    rate = cfg.formant_mod_rate
    return 2 * np.pi * formant * tau + cfg.formant_mod * (1.0 - np.cos(2 * np.pi * rate * tau)) / rate


def synthesize(cfg: SignalConfig) -> SyntheticSignal:
    '''
    Generate the raw signal on the sample grid n / sample_rate.

    Per syllable the random draws happen in the order duration, envelope
    scale, one phase per formant; then the following pause duration is drawn.
    Noise is drawn last for all samples at once.
    '''
    rng = np.random.default_rng(cfg.seed)
    raw_time = np.arange(cfg.num_samples) / cfg.sample_rate
    values = np.zeros(cfg.num_samples)
    segments: List[Segment] = []

    start = 0.0
    while start < cfg.duration:
        length = rng.uniform(*cfg.syllable_dur)
        scale = rng.uniform(*cfg.envelope_scale)
        phases = rng.uniform(0.0, 2 * np.pi, len(cfg.formants))
        end = min(start + length, cfg.duration)
        segments.append(Segment('syllable', start, end))

        mask = (raw_time >= start) & (raw_time < end)
        tau = raw_time[mask] - start
        envelope = scale * np.exp(-cfg.envelope_decay * tau / length)
        wave = np.sin(_base_phase(cfg, tau))
        for formant, phase in zip(cfg.formants, phases):
            wave = wave + cfg.formant_amplitude * np.sin(_formant_phase(cfg, formant, tau) + phase)
        values[mask] = envelope * wave

        start = end
        if start >= cfg.duration:
            break
        pause = rng.uniform(*cfg.pause_dur)
        end = min(start + pause, cfg.duration)
        segments.append(Segment('pause', start, end))
        start = end

    if cfg.noise_std > 0:
        values = values + rng.normal(0.0, cfg.noise_std, cfg.num_samples)
    log.debug(f'Synthesized <{cfg.num_samples}> samples in <{len(segments)}> segments with seed <{cfg.seed}>')
    return SyntheticSignal(raw_time=raw_time, values=values, segments=segments, config=cfg)


def to_dataset(signal: SyntheticSignal, normalization: Optional[AffineMap] = None) -> SignalDataset:
    '''
    Map raw times affinely to normalized inputs; targets are unchanged.

    The default map sends [0, duration] to [-1, 1].

    Raises:
        SignalConfigError: if the signal is empty
    '''
    if not len(signal.values):
        raise SignalConfigError('Cannot build a dataset from an empty signal')
    normalization = normalization or AffineMap.between((0.0, signal.config.duration), (-1.0, 1.0))
    return SignalDataset(
        inputs=normalization.apply(signal.raw_time),
        targets=signal.values.copy(),
        raw_time=signal.raw_time.copy(),
        normalization=normalization,
        segments=list(signal.segments),
        config=signal.config,
    )


def generate_signal(cfg: Optional[SignalConfig] = None) -> SignalDataset:
    '''Synthesize a signal and convert it to a regression dataset.'''
    return to_dataset(synthesize(cfg or SignalConfig()))


def export_csv(dataset: SignalDataset, path: Path) -> Path:
    '''Write (time_s, value) rows for plotting.'''
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', newline='') as stream:
        writer = csv.writer(stream)
        writer.writerow(['time_s', 'value'])
        for time, value in zip(dataset.raw_time, dataset.targets):
            writer.writerow([f'{time:.6f}', repr(float(value))])
    log.info(f'Signal exported to <{path}>')
    return path
