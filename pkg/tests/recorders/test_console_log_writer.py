from logging import Logger
from pathlib import Path

import pytest

from torsionrank.core import get_logger
from torsionrank.recorders import ConsoleLogWriter


@pytest.fixture
def logger() -> Logger:
    return get_logger("test", throttle_duration_sec=0)


class TestConsoleLogWriter:
    def test_single_log(self, data_root: Path, logger: Logger):
        writer = ConsoleLogWriter()

        writer.start_recording(data_root)
        logger.debug("DEBUG level message")
        logfile = writer.log_file_path
        writer.stop_recording()

        assert logfile.read_text().count("DEBUG level message") == 1

    def test_log_outside_recording(self, data_root: Path, logger: Logger):
        writer = ConsoleLogWriter()

        logger.error("ERROR level message")
        writer.start_recording(data_root)
        logger.warning("WARNING level message")
        logfile = writer.log_file_path
        writer.stop_recording()
        logger.critical("CRITICAL level message")

        text = logfile.read_text()
        assert "ERROR level message" not in text
        assert text.count("WARNING level message") == 1
        assert "CRITICAL level message" not in text

    def test_reuse(self, data_root: Path, logger: Logger):
        writer = ConsoleLogWriter()

        writer.start_recording(data_root)
        logger.info("First run")
        first = writer.log_file_path
        writer.stop_recording()

        writer.start_recording(data_root)
        logger.info("Second run")
        second = writer.log_file_path
        writer.stop_recording()

        assert second.name == "console(1).log"
        assert "Second run" not in first.read_text()
        assert "First run" not in second.read_text()

    def test_ignores_data(self, data_root: Path):
        assert not ConsoleLogWriter().append("weights.tsv", [{"x": 1}])
