from ltlc.oracle.frames import LassoFrame
from ltlc.oracle.valuation import Valuation
import pytest


@pytest.fixture
def single_loop():
    # one state looping on itself
    return LassoFrame((0,))


@pytest.fixture
def two_cycle():
    return LassoFrame((1, 0))


@pytest.fixture
def lasso():
    # 0 -> 1 -> 2 -> 1
    return LassoFrame((1, 2, 1))


@pytest.fixture
def chain():
    # 0 -> 1 -> 2 -> 3 -> 3
    return LassoFrame((1, 2, 3, 3))


@pytest.fixture
def q_at_two():
    return Valuation({"q": (2,)})


@pytest.fixture
def ltlc_home(tmp_path, monkeypatch):
    monkeypatch.setenv("LTLC_HOME", str(tmp_path))
    monkeypatch.delenv("LTLC_COLOR", raising=False)
    return tmp_path
