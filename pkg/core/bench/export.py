# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/23/2026 11:40'

from pathlib import Path

import numpy as np

from core.logger import getLogger
from core.autodiff import Module, Node, no_grad
from core.signal_gen import SignalDataset
from .report import csv_text, write_atomic

log = getLogger(__file__)

CURVE_HEADER = ('time_s', 'target', 'prediction')


def predict(model: Module, dataset: SignalDataset) -> np.ndarray:
    '''Model output on the dataset inputs as a flat array.'''
    inputs, _ = dataset.columns()
    with no_grad():
        return model(Node(inputs)).value.reshape(-1)


def export_fit_curve(model: Module, dataset: SignalDataset, path: Path) -> Path:
    '''
    Write (time_s, target, prediction) rows on the signal sample grid.

    Raises:
        ReportError: if the file cannot be written
    '''
    prediction = predict(model, dataset)
    rows = [
        [f'{time:.6f}', repr(float(target)), repr(float(value))]
        for time, target, value in zip(dataset.raw_time, dataset.targets, prediction)
    ]
    write_atomic(path, csv_text(CURVE_HEADER, rows))
    log.debug(f'Fit curve written to <{path}>')
    return path
