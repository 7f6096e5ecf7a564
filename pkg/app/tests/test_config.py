import json

import pytest

from src.common import load_config
from src.common.audit import record_run
from src.common.caching import cache_sizes, clear_caches
from src.common.config import EngineSettings, get_settings, reset_settings
from src.crystal.series import kostant
from src.crystal.tableaux import f, highest


def test_example_config_defaults(fresh_settings):
    for name in ("GKCRYSTAL_MAX_RANK", "GKCRYSTAL_STRATEGY", "GKCRYSTAL_AUDIT_LOG", "GKCRYSTAL_CONFIG_FILE"):
        fresh_settings.delenv(name, raising=False)
    settings = EngineSettings(load_config())
    assert settings.GRAPH_DEPTH == 4
    assert settings.VERIFY_DEPTH == 6
    assert settings.STRATEGY in ("bfs", "direct")


def test_environment_overrides(fresh_settings, tmp_path):
    fresh_settings.setenv("GKCRYSTAL_MAX_RANK", "3")
    fresh_settings.setenv("GKCRYSTAL_STRATEGY", "DIRECT")
    fresh_settings.setenv("GKCRYSTAL_AUDIT_LOG", str(tmp_path / "runs.jsonl"))
    settings = get_settings()
    assert settings.MAX_RANK == 3
    assert settings.STRATEGY == "direct"
    assert settings.AUDIT_PATH == str(tmp_path / "runs.jsonl")


def test_audit_can_be_disabled(fresh_settings, tmp_path):
    fresh_settings.setenv("GKCRYSTAL_AUDIT_LOG", str(tmp_path / "runs.jsonl"))
    fresh_settings.setenv("GKCRYSTAL_AUDIT_ENABLED", "false")
    assert get_settings().AUDIT_PATH is None


def test_invalid_override_raises(fresh_settings):
    fresh_settings.setenv("GKCRYSTAL_VERIFY_DEPTH", "deep")
    with pytest.raises(ValueError):
        get_settings()


def test_invalid_strategy_raises():
    with pytest.raises(ValueError):
        EngineSettings({"engine": {"strategy": "dfs"}})


def test_config_file_override(fresh_settings, tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("engine:\n  max_rank: 2\n", encoding="utf-8")
    fresh_settings.setenv("GKCRYSTAL_CONFIG_FILE", str(path))
    assert get_settings().MAX_RANK == 2


def test_record_run_appends_json_lines(tmp_path):
    ledger = tmp_path / "ledger" / "runs.jsonl"
    record_run(ledger, "verify", {"rank": 2}, {"status": "MATCH"})
    record_run(ledger, "verify", {"rank": 3}, {"status": "MISMATCH"})
    entries = [json.loads(line) for line in ledger.read_text(encoding="utf-8").splitlines()]
    assert [entry["params"]["rank"] for entry in entries] == [2, 3]
    assert entries[1]["outcome"]["status"] == "MISMATCH"
    assert "timestamp" in entries[0]


def test_record_run_disabled_without_path():
    assert record_run(None, "verify", {}, {}) is None


def test_caches_are_sized_from_settings(fresh_settings):
    fresh_settings.setenv("GKCRYSTAL_CACHE_SIZE", "7")
    clear_caches()
    f(highest(2), 1)
    kostant(2, (1, 1))
    sizes = cache_sizes()
    assert sizes["f"] == 7
    assert sizes["kostant"] == 7

    reset_settings()
    fresh_settings.setenv("GKCRYSTAL_CACHE_SIZE", "9")
    assert f(highest(2), 2) is not None
    assert cache_sizes()["f"] == 9


def test_clear_caches_drops_memoized_results(fresh_settings):
    f(highest(2), 1)
    assert cache_sizes()["f"] is not None
    clear_caches()
    assert set(cache_sizes().values()) == {None}
    assert f(highest(2), 1) == f(highest(2), 1)
