"""
Tests for JSON helpers and configuration
"""

import json

import pytest

from rcc_toolkit.config import Config, get_config, reset_config
from rcc_toolkit.utils import dumps_json, load_json, read_text, save_json


class TestJson:

    def test_dumps_is_deterministic(self, config):
        text = dumps_json({"b": 1, "a": [1, 2]}, config=config)
        assert text.endswith("\n")
        assert text.index('"a"') < text.index('"b"')
        assert dumps_json({"a": [1, 2], "b": 1}, config=config) == text

    def test_indent_from_config(self, config):
        config.set("output.indent", 4)
        assert dumps_json({"a": 1}, config=config) == '{\n    "a": 1\n}\n'
        assert dumps_json({"a": 1}, indent=0, config=config) == '{\n"a": 1\n}\n'

    def test_save_creates_parents(self, tmp_path, config):
        path = tmp_path / "deep" / "er" / "out.json"
        save_json({"regions": ["r1"]}, str(path), config=config)
        assert load_json(str(path)) == {"regions": ["r1"]}
        assert json.loads(path.read_text(encoding="utf-8")) == {"regions": ["r1"]}

    def test_read_text_strips(self, tmp_path):
        path = tmp_path / "phi.txt"
        path.write_text("\n  <ec>p & q \n\n", encoding="utf-8")
        assert read_text(str(path)) == "<ec>p & q"


class TestConfig:

    def test_dot_access(self):
        config = Config()
        assert config.get("logic.max_regions") == 6
        assert config.get("suite.quick.fo2_formulas") == 40
        assert config.get("logic.missing", "x") == "x"
        config.set("new.section.key", 3)
        assert config.get("new.section.key") == 3

    def test_defaults_are_not_shared(self):
        Config().set("logic.max_regions", 2)
        assert Config().get("logic.max_regions") == 6

    def test_yaml_merge_and_save(self, tmp_path):
        path = tmp_path / "custom.yaml"
        path.write_text("logic:\n  bounded_sat_engine: sat\n", encoding="utf-8")
        config = Config(str(path))
        assert config.get("logic.bounded_sat_engine") == "sat"
        assert config.get("logic.max_regions") == 6
        saved = tmp_path / "out" / "saved.yaml"
        config.save(str(saved))
        assert Config(str(saved)).to_dict() == config.to_dict()

    def test_missing_file_keeps_defaults(self, tmp_path):
        assert Config(str(tmp_path / "absent.yaml")).to_dict() == Config().to_dict()

    def test_environment_overrides(self, tmp_path, monkeypatch):
        path = tmp_path / "env.yaml"
        path.write_text("reductions:\n  max_triangle: 5\n", encoding="utf-8")
        monkeypatch.setenv("RCC_TOOLKIT_CONFIG", str(path))
        monkeypatch.setenv("RCC_TOOLKIT_SEED", "7")
        monkeypatch.setenv("RCC_TOOLKIT_LOG_LEVEL", "info")
        reset_config()
        try:
            config = get_config()
            assert config.get("reductions.max_triangle") == 5
            assert config.get("suite.seed") == 7
            assert config.get("logging.level") == "INFO"
            assert get_config() is config
        finally:
            reset_config()

    @pytest.mark.parametrize("verbose", [False, True])
    def test_configure_logging(self, verbose):
        Config().configure_logging(verbose)
