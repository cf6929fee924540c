from pathlib import Path

import pytest

from pachner.config import GuardConfig, RunConfig, load_config
from pachner.config.loader import env_settings
from pachner.errors import ConfigError


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("PACHNER_JOBS", raising=False)
    monkeypatch.delenv("PACHNER_SPHERES_DIR", raising=False)


def test_defaults():
    config = load_config()
    assert config == RunConfig()
    assert config.jobs == 1
    assert config.guards == GuardConfig()
    assert config.guards.max_height == 8
    assert config.guards.max_rounds == 64
    assert config.guards.census_ceiling == 6
    assert config.sphere_height == 2


def test_environment(monkeypatch):
    monkeypatch.setenv("PACHNER_JOBS", "3")
    assert load_config().jobs == 3


def test_dotenv_file(tmp_path):
    (tmp_path / ".env").write_text("PACHNER_JOBS=5\nPACHNER_SPHERES_DIR=levels\n")
    assert env_settings() == {"jobs": "5", "spheres_dir": "levels"}
    config = load_config()
    assert config.jobs == 5
    assert config.spheres_path == Path("levels")


def test_yaml_beats_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("PACHNER_JOBS", "3")
    (tmp_path / "pachner.yaml").write_text("jobs: 4\nguards:\n  max_height: 3\n")
    config = load_config()
    assert config.jobs == 4
    assert config.guards.max_height == 3
    assert config.guards.max_rounds == 64


def test_flags_beat_yaml(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("jobs: 4\nguards:\n  max_height: 3\n  max_rounds: 5\n")
    overrides = {"jobs": 2, "guards": {"max_height": None, "max_rounds": 9}}
    config = load_config(path, overrides)
    assert config.jobs == 2
    assert config.guards.max_height == 3
    assert config.guards.max_rounds == 9


def test_unset_flags_keep_yaml_verbosity(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("verbosity: 1\n")
    config = load_config(path, {"verbosity": None, "quiet": None})
    assert config.verbosity == 1
    assert not config.quiet


def test_empty_yaml(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert load_config(path) == RunConfig()


@pytest.mark.parametrize(
    "text",
    [
        "jobs: 0\n",
        "jobs: [1\n",
        "- 1\n- 2\n",
        "guards:\n  max_height: -1\n",
        "verbosity: 3\n",
    ],
)
def test_invalid_configuration(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_config(path)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.yaml")


def test_quiet_and_verbose_conflict():
    with pytest.raises(ConfigError):
        load_config(overrides={"quiet": True, "verbosity": 1})


def test_default_spheres_path(monkeypatch, tmp_path):
    monkeypatch.setattr("platformdirs.user_cache_dir", lambda *args: str(tmp_path))
    assert RunConfig().spheres_path == tmp_path / "spheres"
    assert RunConfig(spheres_dir=Path("x")).spheres_path == Path("x")
