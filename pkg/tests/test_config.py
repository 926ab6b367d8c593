import pytest

from orbitwist.src.utils.config_loader import (
    DEFAULT_BRUTE_BUDGET,
    DEFAULT_ORDER_CAP,
    Limits,
    get_config_path,
    get_limits,
    load_config,
)


@pytest.fixture
def config_file(monkeypatch, tmp_path):
    path = tmp_path / "config.toml"
    monkeypatch.setenv("ORBITWIST_CONFIG", str(path))
    for name in (
        "ORBITWIST_ORDER_CAP",
        "ORBITWIST_BRUTE_BUDGET",
        "ORBITWIST_ENUMERATION_CAP",
        "ORBITWIST_THREADS",
    ):
        monkeypatch.delenv(name, raising=False)
    return path


def test_defaults_without_config(config_file):
    assert get_config_path() == config_file
    assert load_config() == {}
    assert get_limits() == Limits()
    assert get_limits().order_cap == DEFAULT_ORDER_CAP
    assert get_limits().brute_budget == DEFAULT_BRUTE_BUDGET


def test_config_env_and_flags_layer(config_file, monkeypatch):
    config_file.write_text("[limits]\norder_cap = 50\nthreads = 2\n", encoding="utf-8")
    limits = get_limits()
    assert limits.order_cap == 50
    assert limits.threads == 2

    monkeypatch.setenv("ORBITWIST_THREADS", "4")
    assert get_limits().threads == 4
    assert get_limits(threads=8, seed=3) == Limits(order_cap=50, threads=8, seed=3)
    assert get_limits(threads=None).threads == 4


def test_bad_config_values(config_file, monkeypatch):
    config_file.write_text("[limits]\nbrute_budget = 0\n", encoding="utf-8")
    with pytest.raises(ValueError, match="positive"):
        get_limits()

    config_file.write_text("[limits\n", encoding="utf-8")
    with pytest.raises(ValueError, match="Failed to load config"):
        load_config()

    config_file.unlink()
    monkeypatch.setenv("ORBITWIST_ORDER_CAP", "lots")
    with pytest.raises(ValueError, match="integer"):
        get_limits()
