# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/20/2026 09:30'

from .generator import (
    AffineMap,
    Segment,
    SignalConfig,
    SignalConfigError,
    SignalDataset,
    SyntheticSignal,
    export_csv,
    generate_signal,
    synthesize,
    to_dataset,
)

__all__ = [
    'AffineMap',
    'Segment',
    'SignalConfig',
    'SignalConfigError',
    'SignalDataset',
    'SyntheticSignal',
    'export_csv',
    'generate_signal',
    'synthesize',
    'to_dataset',
]
