# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/15/2026 13:05'
__version__ = '0.1.0'

import logging
from pathlib import Path

from core.logger import LogConfig
from core.config import TypedConfig, EnvVariablePrefix


APP_NAME = 'GR-KAN Benchmark (grkan-bench)'
APP_VERSION = '1.0.0'


@EnvVariablePrefix('GKB_')
class BenchAppConfiguration(TypedConfig):
    '''Benchmark application configuration.'''

    DEBUG_MODE: bool = False  # enable debug mode

    OUT_DIR: Path = Path('results')  # report output directory
    CONFIGS_DIR: Path = Path(__file__).parent / 'configs'  # experiment presets
    WORKERS: int = 1  # threads for independent (method, seed) runs
    CHECKPOINTS: int = 100  # trace length of a training run

    # prometheus export; empty url disables push
    PUSHGATEWAY_URL: str = ''
    METRICS_JOB_NAME: str = 'grkan_bench'

    SCHEMA_VERSION: int = 1  # report schema version

    def __init__(self) -> None:
        super().__init__()
        if self.DEBUG_MODE:
            LogConfig.set_loggers_level(logging.DEBUG)


if 'app_config' in __name__:
    AppConfig = BenchAppConfiguration()
