import pytest

from randomtrap import control


@pytest.fixture(autouse=True)
def no_session():
    """Run every test without an initialized session."""

    control.end()
    yield
    control.end()


@pytest.fixture
def results_dir(tmp_path):
    path = tmp_path / "results"
    path.mkdir()
    return path
