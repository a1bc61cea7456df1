# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '10/16/2026 14:10'
__version__ = '0.1.0'

import math
import time
from typing import List, Optional, Tuple, Union

import numpy as np

from core.logger import getLogger
from core.autodiff import Module, Node, no_grad
from core.signal_gen import SignalDataset
from .losses import get_loss
from .metrics import RunLabels, TrainingMetrics
from .optimizers import make_optimizer
from .trace import RunTrace, TrainConfig
from .exceptions import NonFiniteGradientError, TrainConfigError, TrainingDivergedError

log = getLogger(__file__)

TrainData = Union[SignalDataset, Tuple[np.ndarray, np.ndarray]]


def _arrays(data: TrainData) -> Tuple[np.ndarray, np.ndarray]:
    if isinstance(data, SignalDataset):
        return data.columns()
    inputs, targets = data
    return np.asarray(inputs, dtype=np.float64), np.asarray(targets, dtype=np.float64)


def _diverged(loss: float, cfg: TrainConfig) -> bool:
    return not math.isfinite(loss) or loss > cfg.divergence_limit


def _window_stalled(history: List[float], tolerance: float) -> bool:
    '''Relative improvement between the mean losses of the last two windows is below tolerance.'''
    if len(history) < 2:
        return False
    before, after = history[-2], history[-1]
    return (before - after) <= tolerance * abs(before)


def train_run(
    model: Module,
    data: TrainData,
    cfg: TrainConfig,
    metrics: Optional[TrainingMetrics] = None,
    labels: Optional[RunLabels] = None,
) -> Tuple[Module, RunTrace]:
    '''
    Full-batch training of `model` in place.

    Every step evaluates the loss on the whole dataset, adds the model penalty
    when present and applies one optimizer update. Every `cfg.checkpoint_interval`
    steps the mean data loss of the interval is recorded. Early stopping compares
    the mean data loss of consecutive windows.

    Args:
        model: model to train
        data: dataset or (inputs, targets) arrays
        cfg: training settings
        metrics: optional registry updated at checkpoints
        labels: run labels for metrics and log messages

    Returns:
        The trained model and its trace

    Raises:
        TrainConfigError: on an empty dataset
        TrainingDivergedError: if the loss or a gradient becomes non-finite, or the loss exceeds the limit
    '''
    inputs, targets = _arrays(data)
    if not len(targets):
        raise TrainConfigError('Cannot train on an empty dataset')
    run_name = str(labels) if labels else f'seed {cfg.seed}'
    loss_fn = get_loss(cfg.loss)
    optimizer = make_optimizer(cfg.optimizer, model.parameters(), cfg.adam)
    x, y = Node(inputs), Node(targets)
    interval = cfg.checkpoint_interval

    trace = RunTrace(seed=cfg.seed)
    window_history: List[float] = []
    if metrics and labels:
        metrics.run_started(labels, model.param_count())
    log.debug(f'Run <{run_name}> started: <{cfg.steps}> steps, <{model.param_count()}> params')

    started = time.perf_counter()
    last_recorded = 0
    interval_sum = 0.0
    window_sum = 0.0
    for step in range(1, cfg.steps + 1):
        optimizer.zero_grad()
        data_loss = loss_fn(model(x), y)
        value = data_loss.item()
        if _diverged(value, cfg):
            trace.steps_run = step - 1
            trace.wall_time = time.perf_counter() - started
            if metrics and labels:
                metrics.run_aborted(labels)
            raise TrainingDivergedError(f'Run <{run_name}> diverged at step <{step}>: loss <{value}>', trace)

        penalty = model.penalty()
        total = data_loss if penalty is None else data_loss + penalty
        total.backward()
        try:
            optimizer.step()
        except NonFiniteGradientError as e:
            trace.steps_run = step - 1
            trace.wall_time = time.perf_counter() - started
            if metrics and labels:
                metrics.run_aborted(labels)
            raise TrainingDivergedError(f'Run <{run_name}> diverged: {e}', trace) from e
        trace.steps_run = step
        interval_sum += value
        window_sum += value

        if step % interval == 0:
            mean = interval_sum / (step - last_recorded)
            trace.record(step, mean)
            if metrics and labels:
                metrics.checkpoint(labels, step - last_recorded, mean)
            last_recorded = step
            interval_sum = 0.0

        if cfg.early_stop and step % cfg.early_stop.window == 0:
            window_history.append(window_sum / cfg.early_stop.window)
            window_sum = 0.0
            if _window_stalled(window_history, cfg.early_stop.tolerance):
                trace.stopped_early = True
                log.debug(f'Run <{run_name}> stopped early at step <{step}>')
                break

    if last_recorded != trace.steps_run:
        mean = interval_sum / (trace.steps_run - last_recorded)
        trace.record(trace.steps_run, mean)
        if metrics and labels:
            metrics.checkpoint(labels, trace.steps_run - last_recorded, mean)

    with no_grad():
        trace.final_loss = loss_fn(model(x), y).item()
    trace.wall_time = time.perf_counter() - started
    if _diverged(trace.final_loss, cfg):
        if metrics and labels:
            metrics.run_aborted(labels)
        raise TrainingDivergedError(f'Run <{run_name}> diverged after the last step: loss <{trace.final_loss}>', trace)
    if metrics and labels:
        metrics.run_finished(labels, trace.wall_time)
    log.info(f'Run <{run_name}> done in <{trace.wall_time:.1f}s>, final loss: <{trace.final_loss:.6g}>')
    return model, trace
