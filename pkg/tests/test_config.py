"""
Tests for molr.config, molr.__init__, and molr.logging.
Purpose: Covers dataclass defaults, Config load paths, environment
         overrides, and setup_logging.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

import logging
import textwrap

import pytest

import molr
from molr.config import (
    DEFAULT_BUDGET,
    DEFAULT_CHUNK_SIZE,
    Config,
    EnumerationSettings,
    OutputSettings,
    effective_budget,
    effective_workers,
)
from molr.logging import get_logger, setup_logging


# ---------------------------------------------------------------------------
# TestConfigDefaults
# ---------------------------------------------------------------------------


class TestConfigDefaults:
    def test_enumeration_settings_defaults(self):
        s = EnumerationSettings()
        assert s.budget == DEFAULT_BUDGET
        assert s.workers == 1
        assert s.chunk_size == DEFAULT_CHUNK_SIZE
        assert s.level_dir is None

    def test_output_settings_defaults(self):
        o = OutputSettings()
        assert o.directory == "."
        assert o.format == "text"

    def test_config_without_file(self):
        cfg = Config()
        assert cfg.config_path is None
        assert cfg.enumeration.budget == DEFAULT_BUDGET
        assert cfg.data["logging"]["level"] == "INFO"

    def test_missing_path_falls_back_to_defaults(self, tmp_path):
        cfg = Config(str(tmp_path / "absent.yaml"))
        assert cfg.enumeration.workers == 1

    def test_version_string(self):
        assert molr.__version__ == "1.0.0"


# ---------------------------------------------------------------------------
# TestConfigLoad
# ---------------------------------------------------------------------------


def _write(tmp_path, text):
    path = tmp_path / "config.yaml"
    path.write_text(textwrap.dedent(text))
    return str(path)


class TestConfigLoad:
    def test_full_file(self, tmp_path):
        path = _write(tmp_path, """\
            enumeration:
              budget: 1000
              workers: 1
              chunk_size: 4
              level_dir: /tmp/levels
            output:
              directory: results
              format: json
        """)
        cfg = Config(path)
        assert cfg.enumeration.budget == 1000
        assert cfg.enumeration.chunk_size == 4
        assert cfg.enumeration.level_dir == "/tmp/levels"
        assert cfg.output.directory == "results"
        assert cfg.output.format == "json"

    def test_found_in_home(self, tmp_path):
        target = tmp_path / ".config" / "molr"
        target.mkdir(parents=True)
        (target / "config.yaml").write_text("enumeration:\n  budget: 77\n")
        cfg = Config()
        assert cfg.config_path == str(target / "config.yaml")
        assert cfg.enumeration.budget == 77

    def test_invalid_values_are_clamped(self, tmp_path):
        path = _write(tmp_path, """\
            enumeration:
              budget: 0
              workers: lots
              chunk_size: -3
            output:
              format: xml
        """)
        cfg = Config(path)
        assert cfg.enumeration.budget == 1
        assert cfg.enumeration.workers == 1
        assert cfg.enumeration.chunk_size == 1
        assert cfg.output.format == "text"

    def test_empty_file(self, tmp_path):
        cfg = Config(_write(tmp_path, ""))
        assert cfg.enumeration.budget == DEFAULT_BUDGET

    def test_malformed_yaml(self, tmp_path):
        path = _write(tmp_path, "enumeration: [unclosed\n")
        with pytest.raises(ValueError, match="Failed to load config"):
            Config(path)

    def test_top_level_must_be_a_mapping(self, tmp_path):
        with pytest.raises(ValueError):
            Config(_write(tmp_path, "- a\n- b\n"))


# ---------------------------------------------------------------------------
# TestEnvironmentOverrides
# ---------------------------------------------------------------------------


class TestEnvironmentOverrides:
    def test_budget_from_config(self, tmp_path):
        cfg = Config(_write(tmp_path, "enumeration:\n  budget: 123\n"))
        assert effective_budget(cfg) == 123

    def test_budget_env_wins(self, tmp_path, monkeypatch):
        cfg = Config(_write(tmp_path, "enumeration:\n  budget: 123\n"))
        monkeypatch.setenv("MOLR_BUDGET", "9")
        assert effective_budget(cfg) == 9

    def test_invalid_budget_env_is_ignored(self, tmp_path, monkeypatch, caplog):
        cfg = Config(_write(tmp_path, "enumeration:\n  budget: 123\n"))
        monkeypatch.setenv("MOLR_BUDGET", "many")
        with caplog.at_level(logging.WARNING, logger="molr"):
            assert effective_budget(cfg) == 123
        assert "MOLR_BUDGET" in caplog.text

    def test_non_positive_budget_env_is_ignored(self, monkeypatch):
        monkeypatch.setenv("MOLR_BUDGET", "0")
        assert effective_budget(Config()) == DEFAULT_BUDGET

    def test_workers_env_is_clamped(self, monkeypatch):
        monkeypatch.setenv("MOLR_WORKERS", "0")
        assert effective_workers(Config()) == 1
        monkeypatch.setattr("os.cpu_count", lambda: 2)
        monkeypatch.setenv("MOLR_WORKERS", "64")
        assert effective_workers(Config()) == 2


# ---------------------------------------------------------------------------
# TestSetupLogging
# ---------------------------------------------------------------------------


class TestSetupLogging:
    def _config(self, tmp_path, **settings):
        cfg = Config()
        cfg.data["logging"] = {"file": str(tmp_path / "logs" / "molr.log"), **settings}
        return cfg

    def test_level_and_file(self, tmp_path):
        logger = setup_logging(self._config(tmp_path, level="DEBUG"))
        assert logger.name == "molr"
        assert logger.level == logging.DEBUG
        assert (tmp_path / "logs" / "molr.log").exists()

    def test_unknown_level_defaults_to_info(self, tmp_path):
        logger = setup_logging(self._config(tmp_path, level="CHATTY"))
        assert logger.level == logging.INFO

    def test_no_duplicate_handlers(self, tmp_path):
        cfg = self._config(tmp_path)
        first = len(setup_logging(cfg).handlers)
        second = len(setup_logging(cfg).handlers)
        assert first == second == 2

    def test_unwritable_file_falls_back_to_console(self, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        cfg = Config()
        cfg.data["logging"] = {"file": str(blocker / "molr.log")}
        logger = setup_logging(cfg)
        assert len(logger.handlers) == 1

    def test_child_loggers_propagate(self, tmp_path):
        setup_logging(self._config(tmp_path, level="INFO"))
        get_logger("enumerate").info("hello")
        for handler in logging.getLogger("molr").handlers:
            handler.flush()
        assert "molr.enumerate - INFO - hello" in (tmp_path / "logs" / "molr.log").read_text()

    def test_get_logger_without_name(self):
        assert get_logger().name == "molr"
