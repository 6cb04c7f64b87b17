"""Engine configuration, runtime settings, run logs and input paths."""

import json
from pathlib import Path

import pytest

from koszul_lab.config import EngineConfig, get_settings, update_settings
from koszul_lab.utils.logger import RunLogger, emit, list_run_logs, load_run_log
from koszul_lab.utils.paths import resolve_path, set_data_dir


def test_default_config():
    config = EngineConfig()
    assert config.default_prime == 2147483647
    assert config.default_prime % 3 == 1
    assert config.logs_dir == Path("logs")


@pytest.mark.parametrize("overrides", [
    {"default_prime": 11},
    {"default_prime": 3},
    {"default_prime": 25},
    {"default_cap": 1},
])
def test_config_rejects(overrides):
    with pytest.raises(ValueError):
        EngineConfig(**overrides)


def test_config_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("KOSZUL_PRIME", "1000003")
    monkeypatch.setenv("KOSZUL_NMAX", "4")
    monkeypatch.setenv("KOSZUL_DATA_DIR", str(tmp_path))
    config = EngineConfig.from_env()
    assert config.default_prime == 1000003
    assert config.default_nmax == 4
    assert config.data_dir == tmp_path
    assert config.max_rules == 1000


def test_runtime_settings_update():
    assert get_settings().verbose is False
    settings = update_settings({"verbose": True, "fieldName": "prime"})
    assert settings.to_dict() == {"verbose": True}
    assert get_settings() is settings


def test_emit_respects_verbose(capsys):
    emit("COUNT", "quiet")
    assert capsys.readouterr().err == ""
    update_settings({"verbose": True})
    emit("COUNT", "degree 4: 157 words")
    assert capsys.readouterr().err == "[COUNT] degree 4: 157 words\n"


def test_run_log_round_trip(tmp_path):
    logger = RunLogger(tmp_path / "logs", "koszul", {"n_max": 4})
    logger.start_step()
    logger.log_step("certificate", "ok", "4 cells")
    logger.end_run(0)
    log = load_run_log(logger.log_file)
    assert log.command == "koszul"
    assert log.config == {"n_max": 4}
    assert log.exit_code == 0
    assert log.steps[0].name == "certificate"
    assert log.steps[0].duration_ms >= 0


def test_sidecar_sits_next_to_output(tmp_path):
    logger = RunLogger(tmp_path / "logs", "present")
    output = tmp_path / "k3.json"
    output.write_text("{}")
    logger.record_output(output)
    meta = json.loads((tmp_path / "k3.json.meta.json").read_text())
    assert meta["session_id"] == logger.session_id
    assert meta["output"] == str(output)
    assert output.read_text() == "{}"


def test_list_run_logs_filters_by_command(tmp_path):
    logs = tmp_path / "logs"
    for command in ("present", "koszul"):
        logger = RunLogger(logs, command)
        logger.end_run(0)
    (logs / "run_broken.json").write_text("not json")
    assert len(list_run_logs(logs)) == 2
    [koszul] = list_run_logs(logs, "koszul")
    assert load_run_log(koszul).command == "koszul"
    assert list_run_logs(tmp_path / "missing") == []


def test_resolve_path(tmp_path):
    assert resolve_path(str(tmp_path / "a.txt")) == tmp_path / "a.txt"
    set_data_dir(tmp_path)
    assert resolve_path("graphs/k3.txt") == (tmp_path / "graphs" / "k3.txt").resolve()


def test_run_log_keeps_runtime_settings(tmp_path):
    update_settings({"verbose": True})
    logger = RunLogger(tmp_path / "logs", "koszul", {"field": "prime:7"})
    logger.end_run(1)
    log = load_run_log(logger.log_file)
    assert log.settings == {"verbose": True}
    assert log.config == {"field": "prime:7"}
