# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/20/2026 11:10'

import csv
from pathlib import Path

import allure
import numpy as np
import pytest

from core.signal_gen import AffineMap, SignalConfig, export_csv, generate_signal, synthesize, to_dataset


@allure.feature('Signal Generator')
@allure.story('Synthesis')
class TestSynthesis:
    '''Syllables, pauses and noise.'''

    @allure.title('Default length and sample grid')
    def test_length(self) -> None:
        '''5 s at 100 Hz gives 500 samples at n / 100.'''
        signal = synthesize(SignalConfig())
        assert len(signal.values) == 500
        np.testing.assert_allclose(signal.raw_time, np.arange(500) / 100.0)

    @allure.title('Same seed gives bit-identical output')
    @pytest.mark.parametrize('noise_std', [0.0, 0.05])
    def test_deterministic(self, noise_std: float) -> None:
        '''Generation is a pure function of the config.'''
        cfg = SignalConfig(noise_std=noise_std, seed=3)
        np.testing.assert_array_equal(synthesize(cfg).values, synthesize(cfg).values)

    @allure.title('Silent pauses')
    def test_pauses(self, clean_config: SignalConfig) -> None:
        '''Without noise every sample inside a pause is exactly zero.'''
        signal = synthesize(clean_config)
        pauses = [s for s in signal.segments if s.kind == 'pause']
        assert pauses
        for segment in pauses:
            mask = (signal.raw_time >= segment.start) & (signal.raw_time < segment.end)
            assert not signal.values[mask].any()

    @allure.title('Amplitude bound')
    @pytest.mark.parametrize('seed', range(5))
    def test_bound(self, seed: int) -> None:
        '''Without noise |y| <= 1.5 * (1 + 3 * 0.25).'''
        signal = synthesize(SignalConfig(noise_std=0.0, seed=seed))
        assert np.max(np.abs(signal.values)) <= 1.5 * (1 + 3 * 0.25)

    @allure.title('Different seeds differ')
    def test_seeds(self) -> None:
        '''Correlation between two seeds stays below 0.99.'''
        first = synthesize(SignalConfig(seed=1)).values
        second = synthesize(SignalConfig(seed=2)).values
        assert np.corrcoef(first, second)[0, 1] < 0.99

    @allure.title('Segments tile the duration')
    def test_segments(self, clean_config: SignalConfig) -> None:
        '''Alternating syllables and pauses cover [0, 5) without gaps or overlap.'''
        # given
        segments = synthesize(clean_config).segments
        # then
        assert segments[0].start == 0.0
        assert segments[-1].end == pytest.approx(clean_config.duration)
        for previous, current in zip(segments[:-1], segments[1:]):
            assert current.start == previous.end
            assert current.kind != previous.kind
        for segment in segments[:-1]:
            lo, hi = clean_config.syllable_dur if segment.kind == 'syllable' else clean_config.pause_dur
            assert lo <= segment.length <= hi + 1e-12

    @allure.title('Noise is additive')
    def test_noise(self, clean_config: SignalConfig) -> None:
        '''Noisy minus clean signal has roughly the configured std.'''
        clean = synthesize(clean_config).values
        noisy = synthesize(SignalConfig(noise_std=0.05, seed=clean_config.seed)).values
        assert np.std(noisy - clean) == pytest.approx(0.05, rel=0.2)


@allure.feature('Signal Generator')
@allure.story('Dataset')
class TestDataset:
    '''Normalized regression dataset.'''

    @allure.title('Inputs in [-1, 1)')
    def test_inputs(self) -> None:
        '''[0, 5) seconds map to [-1, 1).'''
        dataset = generate_signal()
        assert dataset.inputs[0] == -1.0
        assert dataset.inputs.max() < 1.0
        assert len(dataset) == 500
        assert np.mean(np.abs(dataset.targets)) > 0.0

    @allure.title('Inverse map recovers seconds')
    def test_inverse(self) -> None:
        '''Normalization is invertible to 1e-12.'''
        dataset = generate_signal()
        np.testing.assert_allclose(dataset.normalization.invert(dataset.inputs), dataset.raw_time, atol=1e-12)

    @allure.title('Custom normalization')
    def test_custom_map(self, clean_config: SignalConfig) -> None:
        '''Targets are unchanged by the input map.'''
        signal = synthesize(clean_config)
        dataset = to_dataset(signal, AffineMap(scale=1.0, offset=0.0))
        np.testing.assert_array_equal(dataset.inputs, signal.raw_time)
        np.testing.assert_array_equal(dataset.targets, signal.values)
        inputs, targets = dataset.columns()
        assert inputs.shape == targets.shape == (500, 1)

    @allure.title('Config echo')
    def test_describe(self) -> None:
        '''All constants are reported as JSON-compatible values.'''
        echo = SignalConfig().describe()
        assert echo['formants'] == [500.0, 1500.0, 3000.0]
        assert echo['noise_std'] == 0.05
        assert echo['syllable_dur'] == [0.150, 0.250]

    @allure.title('CSV export')
    def test_export(self, tmp_path: Path) -> None:
        '''One header and one row per sample.'''
        dataset = generate_signal(SignalConfig(seed=4))
        path = export_csv(dataset, tmp_path / 'out' / 'signal.csv')
        with open(path, newline='') as stream:
            rows = list(csv.reader(stream))
        assert rows[0] == ['time_s', 'value']
        assert len(rows) == 501
        assert float(rows[10][1]) == dataset.targets[9]
