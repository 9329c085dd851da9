import json
from pathlib import Path

import pytest

from inflation.config.parameter import get_parameter, thread_count
from inflation.config.settings import RunConfig, parse_range
from inflation.exceptions import ConfigurationError, InvalidParameterError

EVENTS = Path(__file__).resolve().parents[2] / "events"


@pytest.fixture()
def events():
    """Sample events shipped in events/"""
    return {path.stem: json.loads(path.read_text(encoding="utf-8")) for path in EVENTS.glob("*.json")}


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("THREADS", "SEED"):
        monkeypatch.delenv(f"INFLATION_SPECTRA_{name}", raising=False)


def test_sample_events_are_valid(events):
    assert {"classify", "table1", "report"} <= set(events)
    for event in events.values():
        RunConfig.from_event(event)


def test_defaults(events):
    config = RunConfig.from_event(events["classify"])
    assert config.m_range == (1, 20)
    assert config.n == 100_000
    assert config.samples == 100
    assert config.resolution == 2048
    assert config.seed == 1
    assert config.fmt == "csv"
    assert list(config.m_values()) == list(range(1, 21))


def test_unknown_and_null_keys_are_ignored():
    config = RunConfig.from_event({"m": 4, "body": "x", "n": None})
    assert config.m == 4
    assert config.n == 100_000
    assert list(config.m_values()) == [4]


@pytest.mark.parametrize(
    "value, expected",
    [("3:7", (3, 7)), ("5", (5, 5)), ((2, 9), (2, 9)), ([1, 1], (1, 1))],
)
def test_parse_range(value, expected):
    assert parse_range(value) == expected


@pytest.mark.parametrize("value", ["a:b", "1:2:3", None, 7])
def test_parse_range_rejects(value):
    with pytest.raises(InvalidParameterError):
        parse_range(value)


@pytest.mark.parametrize(
    "event",
    [
        {"m": 0},
        {"m_range": "5:3"},
        {"n": 0},
        {"tol": -1e-3},
        {"seed": -1},
        {"fmt": "xml"},
    ],
)
def test_invalid_events(event):
    with pytest.raises(InvalidParameterError):
        RunConfig.from_event(event)


def test_m_values_requires_m():
    with pytest.raises(InvalidParameterError):
        RunConfig().m_values()


def test_with_overrides_validates():
    config = RunConfig(m=3)
    assert config.with_overrides(n=10).n == 10
    with pytest.raises(InvalidParameterError):
        config.with_overrides(samples=0)


def test_environment_parameters(monkeypatch):
    monkeypatch.setenv("INFLATION_SPECTRA_THREADS", "3")
    monkeypatch.setenv("INFLATION_SPECTRA_SEED", "42")
    assert thread_count() == 3
    config = RunConfig.from_event({"m": 2})
    assert config.threads == 3
    assert config.seed == 42
    assert RunConfig.from_event({"m": 2, "seed": 7}).seed == 7


def test_get_parameter_default_and_cast(monkeypatch):
    assert get_parameter("MISSING", 5, int) == 5
    monkeypatch.setenv("INFLATION_SPECTRA_TOL", "0.5")
    assert get_parameter("TOL", cast=float) == 0.5
    assert get_parameter("INFLATION_SPECTRA_TOL") == "0.5"


def test_bad_environment_values(monkeypatch):
    monkeypatch.setenv("INFLATION_SPECTRA_THREADS", "many")
    with pytest.raises(ConfigurationError):
        thread_count()
    monkeypatch.setenv("INFLATION_SPECTRA_THREADS", "0")
    with pytest.raises(ConfigurationError):
        thread_count()
