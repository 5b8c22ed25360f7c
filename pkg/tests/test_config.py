import pytest
from pydantic import ValidationError

from selfconverse.core.config import ConfigManager, SelfConverseConfig, get_settings


def test_defaults():
    settings = get_settings()
    assert settings.log_level == "WARNING"
    assert settings.witness_search_cap == 10
    assert settings.symmetric_search_cap == 24
    assert settings.symmetric_strategy == "peel"
    assert settings.oracle_max_n == 6
    assert settings.executor_mode == "sync"


def test_manager_is_a_singleton():
    assert ConfigManager() is ConfigManager()
    ConfigManager().update(witness_search_cap=3)
    assert get_settings().witness_search_cap == 3


def test_load_yaml(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("oracle_max_n: 5\nsymmetric_strategy: backtrack\n", encoding="utf-8")
    ConfigManager().load(path)
    assert get_settings().oracle_max_n == 5
    assert get_settings().symmetric_strategy == "backtrack"
    assert get_settings().witness_search_cap == 10


def test_empty_yaml_gives_defaults(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("", encoding="utf-8")
    assert ConfigManager().load(path) == SelfConverseConfig()


@pytest.mark.parametrize(
    "content",
    ["unknown_key: 1\n", "witness_search_cap: 0\n", "log_level: LOUD\n"],
)
def test_load_rejects_bad_settings(tmp_path, content):
    path = tmp_path / "bad.yaml"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ValidationError):
        ConfigManager().load(path)


def test_load_rejects_non_mapping(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        ConfigManager().load(path)


def test_reset():
    ConfigManager().update(max_workers=9)
    assert ConfigManager().reset() == SelfConverseConfig()
    assert get_settings().max_workers == 4


@pytest.mark.parametrize(
    "overrides",
    [{"symmetric_strategy": "flow"}, {"oracle_max_n": 0}, {"unknown_key": 1}],
)
def test_update_validates(overrides):
    with pytest.raises(ValidationError):
        ConfigManager().update(**overrides)
    assert get_settings() == SelfConverseConfig()
