"""
Unit tests for the logging helpers.
"""

import logging

import pytest

from src.utils.logger import log_config, log_timed, setup_logging, shutdown_logging


@log_timed(stage="TEST")
def succeed(x):
    return x + 1


@log_timed
def fail():
    raise RuntimeError("nope")


class TestLogTimed:
    def test_success(self, caplog):
        with caplog.at_level(logging.INFO):
            assert succeed(1) == 2
        assert "[TEST] succeed completed - Status: SUCCESS" in caplog.text

    def test_failure_is_reraised(self, caplog):
        with caplog.at_level(logging.INFO):
            with pytest.raises(RuntimeError):
                fail()
        assert "[STAGE] fail completed - Status: FAILED" in caplog.text

    def test_preserves_name(self):
        assert succeed.__name__ == "succeed"


class TestSetup:
    def test_file_handler(self, tmp_path):
        log_file = tmp_path / "logs" / "run.log"
        try:
            assert setup_logging(log_file=log_file) == log_file
            logging.getLogger("netgroups.test").debug("detail line")
        finally:
            shutdown_logging()
        assert "detail line" in log_file.read_text(encoding="utf-8")

    def test_log_config_one_liner(self, caplog):
        with caplog.at_level(logging.INFO):
            log_config("extract", {"restarts": 5, "nested": {"a": 1}})
        assert "Configuration: extract (restarts=5)" in caplog.text
