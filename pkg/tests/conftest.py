import pytest

from settings import EngineSettings
from tiltserver.engine.algebra import make_cyclic, make_linear
from tiltserver.engine.controller import TiltController

ENV_VARS = ("NAKAYAMA_LOG_LEVEL", "NAKAYAMA_MAX_VERTICES", "NAKAYAMA_DEFAULT_FORMAT")


@pytest.fixture
def clean_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


@pytest.fixture
def settings(clean_env):
    return EngineSettings()


@pytest.fixture
def engine(settings):
    return TiltController(settings)


@pytest.fixture
def lambda33():
    return make_cyclic(3, 3)


@pytest.fixture
def lambda34():
    return make_cyclic(3, 4)


@pytest.fixture
def lambda44():
    return make_cyclic(4, 4)


@pytest.fixture
def path3():
    """K A_3 on 3 -> 2 -> 1"""
    return make_linear([1, 2, 3])
