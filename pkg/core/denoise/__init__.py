# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/22/2026 10:50'

from .exceptions import DenoiserSpecError
from .conv import Conv1d, conv1d, conv_transpose1d, conv_padding, conv_output_length, conv_transpose_output_length
from .model import ActivationSite, DenoiserActivation, DenoiserSpec, Denoiser, build_denoiser, parity_offset
from .data import (
    DENOISE_DURATION,
    DEFAULT_SNR_DB,
    NoisyPair,
    NoisyPairs,
    DenoiseDataConfig,
    add_noise,
    build_pairs,
    make_noisy_pairs,
    measured_snr_db,
    stack_pairs,
)
from .experiment import (
    DenoiseRun,
    VariantResult,
    SiteComparison,
    DenoiseReport,
    denoise_variants,
    run_denoise_experiment,
)

__all__ = [
    'DenoiserSpecError',
    'Conv1d',
    'conv1d',
    'conv_transpose1d',
    'conv_padding',
    'conv_output_length',
    'conv_transpose_output_length',
    'ActivationSite',
    'DenoiserActivation',
    'DenoiserSpec',
    'Denoiser',
    'build_denoiser',
    'parity_offset',
    'DENOISE_DURATION',
    'DEFAULT_SNR_DB',
    'NoisyPair',
    'NoisyPairs',
    'DenoiseDataConfig',
    'add_noise',
    'build_pairs',
    'make_noisy_pairs',
    'measured_snr_db',
    'stack_pairs',
    'DenoiseRun',
    'VariantResult',
    'SiteComparison',
    'DenoiseReport',
    'denoise_variants',
    'run_denoise_experiment',
]
