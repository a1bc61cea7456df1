# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/24/2026 15:45'

import allure

from core.bench import DenoiseConfig, MethodName, Table1Config
from core.bench.loader import get_config_classes, list_available_configs, load_config
from core.training import EarlyStop, LossKind, OptimizerKind


@allure.feature('Benchmark')
@allure.story('Experiment Presets')
class TestLoader:
    '''Presets from the configs folder.'''

    @allure.title('Available presets')
    def test_list(self) -> None:
        assert list_available_configs() == ['desk_denoise', 'desk_table1', 'full_table1', 'smoke_table1']

    @allure.title('Preset classes')
    def test_classes(self) -> None:
        '''Only classes defined in the preset module are listed.'''
        assert get_config_classes('full_table1') == ['FullTable1Config']
        assert get_config_classes('desk_denoise.py') == ['DeskDenoiseConfig']

    @allure.title('Full budget preset')
    def test_full(self) -> None:
        cfg = load_config('full_table1')
        assert isinstance(cfg, Table1Config)
        assert cfg.train.steps == 300_000
        assert cfg.train.early_stop is None
        assert cfg.seeds == (0, 1, 2)
        assert cfg.methods == (
            MethodName.RELU, MethodName.GELU, MethodName.PAU, MethodName.APL, MethodName.KAN, MethodName.GRKAN,
        )  # fmt: skip

    @allure.title('Desk preset stops early')
    def test_desk(self) -> None:
        cfg = load_config('desk_table1')
        assert cfg.train.early_stop == EarlyStop(window=10_000, tolerance=0.01)

    @allure.title('Build overrides')
    def test_overrides(self) -> None:
        # when
        cfg = load_config(
            'smoke_table1', seeds=[4], steps=20, methods=['relu', 'swish'], optimizer='adamw', lr=0.01, loss='l1'
        )
        # then
        assert cfg.seeds == (4,)
        assert cfg.train.steps == 20
        assert cfg.methods == (MethodName.RELU, MethodName.SWISH)
        assert cfg.train.optimizer is OptimizerKind.ADAMW
        assert (cfg.train.adam.lr, cfg.train.adam.beta1, cfg.train.adam.beta2) == (0.01, 0.8, 0.99)
        assert cfg.train.loss is LossKind.L1

    @allure.title('Smoke preset budget')
    def test_smoke(self) -> None:
        assert load_config('smoke_table1').train.steps == 1000

    @allure.title('Denoise preset')
    def test_denoise(self) -> None:
        cfg = load_config('desk_denoise', snr_db=10.0, seeds=[0])
        assert isinstance(cfg, DenoiseConfig)
        assert cfg.depths == (1, 2)
        assert cfg.data.snr_db == 10.0
        assert cfg.seeds == (0,)
