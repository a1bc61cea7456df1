# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/24/2026 09:10'

import inspect
import importlib
from pathlib import Path
from typing import Any, List, Optional, Tuple, Type

from app_config import AppConfig
from core.logger import getLogger
from configs.base import BaseExperimentConfig, ExperimentConfig
from .table1 import Table1Config
from .denoise_suite import DenoiseConfig
from .exceptions import ConfigLoadError

log = getLogger(__file__)

SKIP_CONFIGS = ['base']
DEFAULT_CONFIG_CLASS_SUFFIX = 'Config'
DEFAULT_MODULES_PREFIX = 'configs'
EXPERIMENT_TYPES = (Table1Config, DenoiseConfig)


def _validate_config_file(config_name: str, configs_dir: Path) -> Path:
    '''
    Validate that the preset file exists.

    Args:
        config_name: preset file name with or without the .py extension
        configs_dir: folder with the preset files

    Returns:
        Preset file name

    Raises:
        ConfigLoadError: if the preset is missing or reserved
    '''
    config_file = Path(config_name if config_name.endswith('.py') else f'{config_name}.py')
    if config_file.stem in SKIP_CONFIGS:
        raise ConfigLoadError(f'Config <{config_name}> cannot be used as config!')
    if not (configs_dir / config_file).exists():
        raise ConfigLoadError(
            f'Config file <{config_file}> not found in configs directory. '
            f'Available configs: {list_available_configs(configs_dir)}'
        )
    return config_file


def _import_config_module(config_file: Path) -> Any:
    '''
    Raises:
        ConfigLoadError: if the import fails
    '''
    module_name = f'{DEFAULT_MODULES_PREFIX}.{config_file.stem}'
    try:
        config_module = importlib.import_module(module_name)
    except ImportError as e:
        raise ConfigLoadError(f'Failed to import config module <{module_name}>: {e}') from e
    log.debug(f'Imported module: <{module_name}>')
    return config_module


def _find_config_classes(config_module: Any, config_file: Path) -> List[Tuple[str, Type[BaseExperimentConfig]]]:
    '''
    Preset classes defined in a module, in name order.

    Raises:
        ConfigLoadError: if the module defines none
    '''
    config_classes = [
        (name, obj)
        for name, obj in inspect.getmembers(config_module, inspect.isclass)
        if issubclass(obj, BaseExperimentConfig) and obj.__module__ == config_module.__name__
    ]
    if not config_classes:
        available_classes = [
            name for name, obj in inspect.getmembers(config_module, inspect.isclass) if obj is not BaseExperimentConfig
        ]
        raise ConfigLoadError(
            f'No classes inheriting from BaseExperimentConfig found in <{config_file}>. '
            f'Available classes: {available_classes}'
        )
    return config_classes


def _select_config_class(
    config_classes: List[Tuple[str, Type[BaseExperimentConfig]]], class_name: Optional[str], config_file: Path
) -> Type[BaseExperimentConfig]:
    '''
    Pick the requested class, or the first one whose name ends with `Config`.

    Raises:
        ConfigLoadError: if the requested class is not a preset of the module
    '''
    if class_name:
        for name, cls in config_classes:
            if name == class_name:
                return cls
        raise ConfigLoadError(
            f'Class <{class_name}> not found in <{config_file}>. '
            f'Available BaseExperimentConfig classes: {[name for name, _ in config_classes]}'
        )

    for name, cls in config_classes:
        if name.endswith(DEFAULT_CONFIG_CLASS_SUFFIX):
            return cls
    log.info(f'Auto-selected class <{config_classes[0][0]}> from <{config_file}>')
    return config_classes[0][1]


def _instantiate_and_build_config(target_class: Type[BaseExperimentConfig], **kwargs: Any) -> ExperimentConfig:
    '''
    Instantiate the preset and call its build method.

    Raises:
        ConfigLoadError: if instantiation or build fails, or build returns another type
    '''
    try:
        config_instance = target_class()
    except Exception as e:
        raise ConfigLoadError(f'Error instantiating config class <{target_class.__name__}>: {e}') from e

    try:
        experiment = config_instance.build(**kwargs)
    except Exception as e:
        raise ConfigLoadError(f'Error calling build method on <{target_class.__name__}>: {e}') from e

    if not isinstance(experiment, EXPERIMENT_TYPES):
        raise ConfigLoadError(
            f'Build method of <{target_class.__name__}> returned <{type(experiment).__name__}> '
            f'instead of one of {[t.__name__ for t in EXPERIMENT_TYPES]}'
        )
    return experiment


def load_config(
    config_name: str, class_name: Optional[str] = None, configs_dir: Optional[Path] = None, **kwargs: Any
) -> ExperimentConfig:
    '''
    Load an experiment preset from the configs folder.

    Args:
        config_name: preset file name without the .py extension
        class_name: preset class to use, auto-detected when None
        configs_dir: folder with the presets, AppConfig.CONFIGS_DIR by default
        **kwargs: overrides passed to the build method

    Returns:
        Table1Config or DenoiseConfig

    Raises:
        ConfigLoadError: if loading fails for any reason
    '''
    configs_dir = configs_dir or AppConfig.CONFIGS_DIR
    try:
        config_file = _validate_config_file(config_name, configs_dir)
        config_module = _import_config_module(config_file)
        config_classes = _find_config_classes(config_module, config_file)
        target_class = _select_config_class(config_classes, class_name, config_file)
        experiment = _instantiate_and_build_config(target_class, **kwargs)
    except ConfigLoadError:
        raise
    except Exception as e:
        raise ConfigLoadError(f'Unexpected error loading config from <{config_name}>: {e}') from e

    log.info(
        f'Loaded config <{config_file.stem}> using class <{target_class.__name__}> '
        f'as <{type(experiment).__name__}>'
    )
    return experiment


def list_available_configs(configs_dir: Optional[Path] = None) -> List[str]:
    '''Preset names in the configs directory, sorted.'''
    configs_dir = configs_dir or AppConfig.CONFIGS_DIR
    if not configs_dir.exists():
        return []
    return sorted(f.stem for f in configs_dir.glob('*.py') if not f.name.startswith('_') and f.stem not in SKIP_CONFIGS)


def get_config_classes(config_name: str, configs_dir: Optional[Path] = None) -> List[str]:
    '''
    Preset class names of a config file.

    Raises:
        ConfigLoadError: if the file doesn't exist or can't be imported
    '''
    config_file = _validate_config_file(config_name, configs_dir or AppConfig.CONFIGS_DIR)
    config_module = _import_config_module(config_file)
    return [name for name, _ in _find_config_classes(config_module, config_file)]
