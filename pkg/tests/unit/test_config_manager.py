"""
Unit tests for environment overrides and configuration persistence.
"""

import json

import pytest

from src.utils.config_manager import env_default, env_var_name, load_saved_config, save_effective_config


class TestEnvironmentOverrides:
    @pytest.mark.parametrize("flag, expected", [
        ("--null-samples", "NETGROUPS_NULL_SAMPLES"),
        ("restarts", "NETGROUPS_RESTARTS"),
        ("--log-file", "NETGROUPS_LOG_FILE"),
    ])
    def test_env_var_name(self, flag, expected):
        assert env_var_name(flag) == expected

    def test_default_without_variable(self, monkeypatch):
        monkeypatch.delenv("NETGROUPS_RESTARTS", raising=False)
        assert env_default("restarts", 20) == 20

    def test_variable_wins_as_raw_string(self, monkeypatch):
        monkeypatch.setenv("NETGROUPS_RESTARTS", "7")
        assert env_default("--restarts", 20) == "7"

    def test_empty_variable_is_ignored(self, monkeypatch):
        monkeypatch.setenv("NETGROUPS_ALPHA", "")
        assert env_default("alpha", 0.01) == 0.01


class TestPersistence:
    def test_sorted_and_reloadable(self, tmp_path):
        path = save_effective_config(tmp_path / "cfg" / "config.json", {"b": 1, "a": {"y": 2, "x": 1}})
        text = path.read_text(encoding="utf-8")
        assert text.index('"a"') < text.index('"b"')
        assert load_saved_config(path) == {"a": {"x": 1, "y": 2}, "b": 1}

    def test_identical_configs_identical_bytes(self, tmp_path):
        data = {"seed": 3, "methods": ["rd", "bf"]}
        a = save_effective_config(tmp_path / "a.json", data).read_bytes()
        b = save_effective_config(tmp_path / "b.json", dict(reversed(list(data.items())))).read_bytes()
        assert a == b

    def test_corrupted(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(ValueError):
            load_saved_config(path)

    def test_not_an_object(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text(json.dumps([1, 2]), encoding="utf-8")
        with pytest.raises(ValueError):
            load_saved_config(path)
