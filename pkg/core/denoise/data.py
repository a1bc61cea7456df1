# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/22/2026 14:00'
__version__ = '0.1.0'

import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Tuple

import numpy as np

from core.logger import getLogger
from core.signal_gen import SignalConfig, generate_signal
from .exceptions import DenoiserSpecError

log = getLogger(__file__)

DENOISE_DURATION = 5.12  # 512 samples at 100 Hz
DEFAULT_SNR_DB = 5.0
TRAIN_FRACTION = 0.8
SEED_SPACE = 2**31


@dataclass(frozen=True)
class NoisyPair:
    '''Clean signal and its noisy copy at the requested SNR.'''

    clean: np.ndarray
    noisy: np.ndarray
    snr_db: float
    seed: int


@dataclass(frozen=True)
class NoisyPairs:
    '''Train and held-out pairs built from disjoint signal seeds.'''

    train: List[NoisyPair]
    held_out: List[NoisyPair]

    @property
    def train_seeds(self) -> List[int]:
        return [pair.seed for pair in self.train]

    @property
    def held_out_seeds(self) -> List[int]:
        return [pair.seed for pair in self.held_out]


@dataclass(frozen=True)
class DenoiseDataConfig:
    '''Noisy pair settings; signals are 5.12 s long so lengths divide 4^depth up to depth 4.'''

    count: int = 20
    snr_db: float = DEFAULT_SNR_DB
    seed: int = 0
    signal: SignalConfig = field(default_factory=lambda: SignalConfig(duration=DENOISE_DURATION, noise_std=0.0))

    def __post_init__(self) -> None:
        if self.count < 1:
            raise DenoiserSpecError(f'Pair count must be >= 1, got <{self.count}>')
        if math.isnan(self.snr_db) or self.snr_db == -math.inf:
            raise DenoiserSpecError(f'SNR must be finite or +inf, got <{self.snr_db}>')

    def describe(self) -> Dict[str, Any]:
        return {
            'count': self.count,
            'snr_db': self.snr_db if math.isfinite(self.snr_db) else 'inf',
            'seed': self.seed,
            'train_fraction': TRAIN_FRACTION,
            'signal': self.signal.describe(),
        }


def add_noise(clean: np.ndarray, snr_db: float, rng: np.random.Generator) -> np.ndarray:
    '''
    Add white Gaussian noise scaled so that 10 log10(P_clean / P_noise) equals snr_db exactly.

    An infinite SNR returns a copy of the clean signal.
    '''
    if snr_db == math.inf:
        return clean.copy()
    noise = rng.standard_normal(clean.shape)
    scale = math.sqrt(np.mean(clean**2) / (10.0 ** (snr_db / 10.0) * np.mean(noise**2)))
    return clean + scale * noise


def measured_snr_db(pair: NoisyPair) -> float:
    '''SNR recomputed from the pair.'''
    noise_power = float(np.mean((pair.noisy - pair.clean) ** 2))
    if noise_power == 0.0:
        return math.inf
    return 10.0 * math.log10(float(np.mean(pair.clean**2)) / noise_power)


def make_noisy_pairs(count: int, snr_db: float = DEFAULT_SNR_DB, seed: int = 0) -> NoisyPairs:
    '''Pairs from the default denoiser data settings, see `build_pairs`.'''
    return build_pairs(DenoiseDataConfig(count=count, snr_db=snr_db, seed=seed))


def build_pairs(cfg: DenoiseDataConfig) -> NoisyPairs:
    '''
    Clean signals from distinct generator seeds with additive noise, split 80/20.

    The held-out part takes the last count - ceil(0.8 * count) pairs, so seed sets are
    disjoint by construction.
    '''
    rng = np.random.default_rng(cfg.seed)
    signal_seeds = rng.choice(SEED_SPACE, size=cfg.count, replace=False)
    pairs = []
    for signal_seed in signal_seeds:
        clean = generate_signal(replace(cfg.signal, seed=int(signal_seed))).targets
        noisy = add_noise(clean, cfg.snr_db, rng)
        pairs.append(NoisyPair(clean, noisy, cfg.snr_db, int(signal_seed)))
    split = (4 * cfg.count + 4) // 5  # ceil(TRAIN_FRACTION * count)
    log.debug(f'Built <{cfg.count}> noisy pairs at <{cfg.snr_db}> dB, <{split}> for training')
    return NoisyPairs(pairs[:split], pairs[split:])


def stack_pairs(pairs: List[NoisyPair]) -> Tuple[np.ndarray, np.ndarray]:
    '''(noisy, clean) arrays of shape (batch, 1, length).'''
    if not pairs:
        raise DenoiserSpecError('No noisy pairs to stack')
    return np.stack([p.noisy for p in pairs])[:, None, :], np.stack([p.clean for p in pairs])[:, None, :]
