"""Tests of the file, logging, timing and configuration utilities"""

# Standard modules
import logging
import os
from typing import Any

# External modules
import pytest

# Local modules
from liescheme.core.errors import ConfigError
from liescheme.utils import file, log, time
from liescheme.utils.config import Config


class StepConfig(Config):

    def __init__(self, path: str) -> None:
        super().__init__(path)
        self.steps: int = 10
        self.spacing: tuple[float, float] = (0.1, 0.2)

    def load_attribute(self, attribute: str, data: dict) -> Any | None:
        if attribute == "spacing" and attribute in data:
            return tuple(data[attribute])

    def save_attribute(self, attribute: str, value: Any, data: dict) -> Any | None:
        if attribute == "spacing":
            data[attribute] = list(value)
            return value


def test_load_json_errors(tmp_path):
    with pytest.raises(ConfigError):
        file.load_json(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{\"steps\": ", encoding="utf-8")
    with pytest.raises(ConfigError):
        file.load_json(str(broken))
    listing = tmp_path / "list.json"
    listing.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ConfigError):
        file.load_json(str(listing))


def test_save_text_replaces_atomically(tmp_path):
    path = tmp_path / "out" / "result.csv"
    file.save_text(str(path), "a\n")
    file.save_text(str(path), "b\n")
    assert path.read_text(encoding="utf-8") == "b\n"
    assert os.listdir(tmp_path / "out") == ["result.csv"]


def test_save_json_sorts_keys(tmp_path):
    path = str(tmp_path / "data.json")
    file.save_json(path, {"b": 1, "a": [1.5, 2]})
    assert file.load_json(path) == {"a": [1.5, 2], "b": 1}
    with open(path, encoding="utf-8") as f:
        content = f.read()
    assert content.index("\"a\"") < content.index("\"b\"")
    assert content.endswith("}\n")


def test_path_helpers(tmp_path):
    path = file.join(str(tmp_path), "run.log")
    assert file.name(path) == "run.log"
    assert file.file_type(path) == "log"
    assert file.directory(path) == str(tmp_path)
    assert not file.exists(path)
    file.save_text(path, "")
    assert file.is_file(path)
    file.delete(path)
    assert not file.exists(path)
    file.delete(path, ignore_error=True)
    with pytest.raises(OSError):
        file.delete(path)


def test_log_directory_keeps_the_newest_files(tmp_path):
    for day in range(1, 6):
        (tmp_path / f"log_2026-01-0{day}.log").write_text("", encoding="utf-8")
    (tmp_path / "notes.txt").write_text("", encoding="utf-8")
    log.setup_log_directory(str(tmp_path), file_limit=2)
    assert sorted(os.listdir(tmp_path)) == ["log_2026-01-04.log", "log_2026-01-05.log", "notes.txt"]


def test_create_logger_writes_the_log_file(tmp_path):
    path = str(tmp_path / "run.log")
    logger = log.create_logger(path, "TEST", logging.INFO)
    logger.debug("hidden")
    logger.info("Solve ...")
    for handler in logger.handlers:
        handler.flush()
    content = open(path, encoding="utf-8").read()
    assert "[TEST] [INFO] Solve ..." in content
    assert "hidden" not in content
    for handler in logger.handlers:
        handler.close()


def test_benchmark_reports_a_duration():
    durations = []
    with time.benchmark(durations.append):
        sum(range(1000))
    assert len(durations) == 1
    assert durations[0] >= 0


def test_benchmark_reports_on_errors():
    durations = []
    with pytest.raises(RuntimeError):
        with time.benchmark(durations.append):
            raise RuntimeError("failed")
    assert len(durations) == 1


def test_config_round_trip(tmp_path):
    path = str(tmp_path / "config.json")
    config = StepConfig(path)
    assert config.attributes == ["steps", "spacing"]
    config.steps = 25
    config.spacing = (0.05, 0.5)
    config.save()
    assert file.load_json(path) == {"steps": 25, "spacing": [0.05, 0.5]}

    loaded = StepConfig(path)
    loaded.load()
    assert loaded.steps == 25
    assert loaded.spacing == (0.05, 0.5)


def test_config_keeps_defaults_for_missing_keys(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{\"steps\": 3}", encoding="utf-8")
    config = StepConfig(str(path))
    config.load()
    assert config.steps == 3
    assert config.spacing == (0.1, 0.2)
