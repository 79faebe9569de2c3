import pytest

from config import (DevelopmentConfig, ProductionConfig, TestingConfig, _int_setting, get_config,
                    invalid_settings)
from holkit import create_app, run
from holkit.utils.random_checks import Limits


class TestGetConfig:
    def test_named(self):
        assert get_config('testing') is TestingConfig
        assert get_config('production') is ProductionConfig

    def test_unknown_falls_back_to_development(self):
        assert get_config('staging') is DevelopmentConfig

    def test_reads_environment(self, monkeypatch):
        monkeypatch.setenv('HOLKIT_ENV', 'production')
        assert get_config() is ProductionConfig
        monkeypatch.delenv('HOLKIT_ENV')
        assert get_config() is DevelopmentConfig


class TestTestingConfig:
    def test_small_defaults(self):
        assert TestingConfig.DEFAULT_COUNT == 50
        assert TestingConfig.CHUNK_SIZE == 25
        assert TestingConfig.WORKERS == 1

    def test_limits(self):
        assert Limits.from_config(TestingConfig) == Limits(word=32, x=4, sanov=64)

    def test_app_carries_config(self):
        assert create_app('testing').config is TestingConfig


class TestLimits:
    def test_parse(self):
        assert Limits.parse('word=8 x=2 sanov=16') == Limits(8, 2, 16)
        assert str(Limits(8, 2, 16)) == 'word=8 x=2 sanov=16'

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            Limits.parse('word=eight')


class TestProductionConfig:
    def test_rejects_non_integer_seed(self, monkeypatch):
        monkeypatch.setenv('HOLKIT_SEED', 'seven')
        with pytest.raises(ValueError):
            ProductionConfig.init_app(None)

    def test_accepts_integer_seed(self, monkeypatch):
        monkeypatch.setenv('HOLKIT_SEED', '-3')
        ProductionConfig.init_app(None)

    def test_cli_reports_bad_seed(self, runner, monkeypatch):
        monkeypatch.setenv('HOLKIT_SEED', 'seven')
        result = runner.invoke(create_app('production'), ['reduce', 'a a^-1'])
        assert result.exit_code != 0


class TestIntegerSettings:
    def test_bad_text_falls_back_to_default(self, monkeypatch):
        monkeypatch.setenv('HOLKIT_COUNT', 'many')
        assert _int_setting('HOLKIT_COUNT', 1000) == 1000
        monkeypatch.setenv('HOLKIT_WORKERS', '0')
        assert _int_setting('HOLKIT_WORKERS', 1) == 1
        monkeypatch.setenv('HOLKIT_MAX_X_LENGTH', ' 3 ')
        assert _int_setting('HOLKIT_MAX_X_LENGTH', 6) == 3

    def test_invalid_settings(self, monkeypatch):
        monkeypatch.setenv('HOLKIT_COUNT', '12')
        monkeypatch.setenv('HOLKIT_WORKERS', 'two')
        monkeypatch.delenv('HOLKIT_MAX_X_LENGTH', raising=False)
        assert invalid_settings() == {'HOLKIT_WORKERS': 'two'}

    def test_init_app_names_the_setting(self, monkeypatch):
        monkeypatch.setenv('HOLKIT_COUNT', 'many')
        with pytest.raises(ValueError, match='HOLKIT_COUNT'):
            DevelopmentConfig.init_app(None)
        with pytest.raises(ValueError, match='HOLKIT_COUNT'):
            ProductionConfig.init_app(None)

    def test_run_exits_with_usage_error(self, monkeypatch, capsys):
        monkeypatch.setenv('HOLKIT_MAX_X_LENGTH', 'long')
        assert run(['reduce', 'a'], config_name='development') == 2
        assert 'HOLKIT_MAX_X_LENGTH' in capsys.readouterr().err
