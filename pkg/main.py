#!/usr/bin/env python3
# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/24/2026 11:00'

'''Command line entry point of the GR-KAN benchmark.'''

import sys
import asyncio
import logging
import argparse
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from core.logger import LogConfig, getLogger
from core.bench import loader
from core.bench import DenoiseConfig, MethodName, ReportError, Table1Config, parse_methods, run_denoise, run_table1
from core.signal_gen import SignalConfig, export_csv, generate_signal
from core.training import LossKind, OptimizerKind, TrainingError, TrainingMetrics
from app_config import AppConfig, APP_NAME, APP_VERSION

log = getLogger(__file__)

EXIT_OK = 0
EXIT_ACCEPTANCE_FAILED = 1
EXIT_ERROR = 2  # also used by argparse for usage errors

DEFAULT_TABLE1_CONFIG = 'full_table1'
DEFAULT_DENOISE_CONFIG = 'desk_denoise'
SIGNAL_CSV = 'signal.csv'


def _int_list(value: str) -> List[int]:
    try:
        return [int(item) for item in value.split(',') if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f'expected comma separated integers, got <{value}>') from e


def _method_list(value: str) -> List[MethodName]:
    try:
        return parse_methods(value.split(','))
    except ValueError as e:
        raise argparse.ArgumentTypeError(
            f'unknown method in <{value}>, choose from {[m.value for m in MethodName]}'
        ) from e


def build_parser() -> argparse.ArgumentParser:
    '''Parser with the table1, denoise, signal and selftest subcommands.'''
    parser = argparse.ArgumentParser(prog='grkan-bench', description=f'{APP_NAME} v{APP_VERSION}')
    parser.add_argument('-ls', '--list-configs', action='store_true', help='List experiment presets and exit')
    parser.add_argument('--debug', action='store_true', help='Enable debug mode and logging')
    subparsers = parser.add_subparsers(dest='command')

    # shared by the experiment subcommands
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-c', '--config', help='Experiment preset from the configs folder')
    common.add_argument('-cls', '--class', dest='class_name', help='Preset class name (optional)')
    common.add_argument('--seeds', type=_int_list, help='Comma separated model seeds (default: 0,1,2)')
    common.add_argument('--steps', type=int, help='Optimizer steps per run (default: preset budget)')
    common.add_argument('--out', type=Path, help=f'Output directory (default: <{AppConfig.OUT_DIR}>)')
    common.add_argument('--workers', type=int, help=f'Concurrent runs (default: <{AppConfig.WORKERS}>)')
    common.add_argument('--optimizer', choices=[k.value for k in OptimizerKind], help='Optimizer (default: adam)')
    common.add_argument('--lr', type=float, help='Learning rate (default: optimizer preset)')

    table1 = subparsers.add_parser('table1', parents=[common], help='Signal fitting benchmark of all methods')
    table1.add_argument(
        '--early-stop', action='store_true', default=None, help='Stop on a 10k step plateau of 1%% relative change'
    )
    table1.add_argument('--methods', type=_method_list, help='Comma separated methods (default: the six families)')
    table1.add_argument('--loss', choices=[k.value for k in LossKind], help='Training loss (default: mse)')
    table1.add_argument('--no-curves', dest='curves', action='store_false', default=None, help='Skip fit curves')

    denoise = subparsers.add_parser('denoise', parents=[common], help='Toy denoiser activation site comparison')
    denoise.add_argument('--depths', type=_int_list, help='Comma separated depths (default: 1,2)')
    denoise.add_argument('--snr-db', type=float, help='Noise level in dB (default: 5)')
    denoise.add_argument('--count', type=int, help='Noisy pairs, 80%% used for training (default: 20)')

    signal = subparsers.add_parser('signal', help='Export the synthetic signal as CSV')
    signal.add_argument('--seed', type=int, default=0, help='Generator seed (default: 0)')
    signal.add_argument('--out', type=Path, help=f'Output file (default: <{AppConfig.OUT_DIR / SIGNAL_CSV}>)')

    selftest = subparsers.add_parser('selftest', help='Run the test suites')
    selftest.add_argument('--allure-dir', default='.allure-results', help='Directory to store allure results')
    return parser


def _overrides(args: argparse.Namespace, names: Sequence[str]) -> Dict[str, Any]:
    '''Preset build arguments given on the command line.'''
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def _list_configs() -> int:
    log.info('Available configuration files:')
    configs = loader.list_available_configs()
    if not configs:
        log.info(f'{" " * 2}No configuration files found in <{AppConfig.CONFIGS_DIR}>')
    for i, config_name in enumerate(configs):
        log.info(f' {i + 1}: {config_name}')
        try:
            log.info(f'{" " * 4}Class(es): <{", ".join(loader.get_config_classes(config_name))}>')
        except loader.ConfigLoadError as e:
            log.info(f'{" " * 4}(Error loading classes: {e})')
    return EXIT_OK


def _load(args: argparse.Namespace, default: str, expected: type, names: Sequence[str]) -> Any:
    '''
    Build the experiment from a preset and the command line overrides.

    Raises:
        ConfigLoadError: if the preset cannot be built or is for another experiment
    '''
    name = args.config or default
    kwargs = _overrides(args, names)
    log.info(f'Loading configuration: <{name}>' + (f' with overrides {kwargs}' if kwargs else ''))
    experiment = loader.load_config(name, args.class_name, **kwargs)
    if not isinstance(experiment, expected):
        raise loader.ConfigLoadError(
            f'Config <{name}> builds <{type(experiment).__name__}>, <{args.command}> needs <{expected.__name__}>'
        )
    return experiment


async def _run_experiment(args: argparse.Namespace, run: Callable[..., Any], cfg: Any) -> int:
    out_dir = args.out or AppConfig.OUT_DIR
    metrics = TrainingMetrics()
    report = await run(cfg, out_dir, args.workers, metrics)
    metrics.export(out_dir)

    passed = report.acceptance()
    log.blank()
    log.info(f'Acceptance: <{"pass" if passed else "FAIL"}>, aborted runs: <{report.aborted_runs}>')
    return EXIT_OK if passed else EXIT_ACCEPTANCE_FAILED


async def run_command(args: argparse.Namespace) -> int:
    '''Dispatch a parsed command line; returns the exit code.'''
    if args.command == 'table1':
        names = ('seeds', 'steps', 'methods', 'early_stop', 'optimizer', 'lr', 'loss', 'curves')
        cfg = _load(args, DEFAULT_TABLE1_CONFIG, Table1Config, names)
        return await _run_experiment(args, run_table1, cfg)

    if args.command == 'denoise':
        names = ('depths', 'seeds', 'snr_db', 'steps', 'count', 'optimizer', 'lr')
        cfg = _load(args, DEFAULT_DENOISE_CONFIG, DenoiseConfig, names)
        return await _run_experiment(args, run_denoise, cfg)

    if args.command == 'signal':
        path = args.out or AppConfig.OUT_DIR / SIGNAL_CSV
        export_csv(generate_signal(SignalConfig(seed=args.seed)), path)
        return EXIT_OK

    # selftest
    from tests import run_tests

    return EXIT_OK if run_tests(allure_dir=args.allure_dir) == 0 else EXIT_ACCEPTANCE_FAILED


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    '''
    Parse the command line and run the requested subcommand.

    Returns:
        0 when the subcommand succeeded and its acceptance properties hold,
        1 when acceptance failed, 2 on usage or runtime errors
    '''
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR

    if args.debug:
        AppConfig.DEBUG_MODE = True
    if AppConfig.DEBUG_MODE:
        LogConfig.set_loggers_level(logging.DEBUG)

    if args.list_configs:
        return _list_configs()
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_ERROR

    try:
        return asyncio.run(run_command(args))
    except (loader.ConfigLoadError, ReportError, TrainingError, ValueError) as e:
        if AppConfig.DEBUG_MODE:
            log.exception(f'Error running <{args.command}>: {e}')
        else:
            log.error(f'Error running <{args.command}>: {e}')
        return EXIT_ERROR


if __name__ == '__main__':
    try:
        msg = f'--- {APP_NAME} v{APP_VERSION} ---'
        log.blank()
        log.info('-' * len(msg))
        log.info(msg)
        log.info('-' * len(msg))
        log.blank()
        sys.exit(cli_main())
    except KeyboardInterrupt:
        log.warning('\nInterrupted by user')
        sys.exit(EXIT_ERROR)
    except Exception as e:
        if AppConfig.DEBUG_MODE:
            log.exception(f'Unexpected error: <{e}>')
        else:
            log.error(f'Unexpected error: <{e}>')
        sys.exit(EXIT_ERROR)
