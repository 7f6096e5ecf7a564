import pytest

from src.common.config import reset_settings


@pytest.fixture
def fresh_settings(monkeypatch):
    """Re-read configuration after the test sets GKCRYSTAL_* variables."""
    reset_settings()
    yield monkeypatch
    reset_settings()
