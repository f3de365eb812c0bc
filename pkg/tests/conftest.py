import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from mdrs.code import get_code_manager  # noqa: E402
from mdrs.config import reset_settings  # noqa: E402
from mdrs.field import field_for_order  # noqa: E402
from mdrs.code.params import CodeSpec  # noqa: E402
from mdrs.logging_config import configure_logging  # noqa: E402

configure_logging("WARNING")

ENV_KEYS = ("MDRS_CI", "MDRS_BUDGET", "MDRS_THREADS", "MDRS_CHUNK", "MDRS_LOG_LEVEL")


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def make_spec():
    def _make(q: int, n: int, d: int) -> CodeSpec:
        return CodeSpec(field=field_for_order(q), n=n, d=d)
    return _make


@pytest.fixture
def manager():
    return get_code_manager()
