import os

import pytest

from randomtrap import _internals, control
from randomtrap.control import Session, get_defaults, run_self_check
from randomtrap.io import read_json


def test_uninitialized_session_logs_nothing():
    session = _internals.active_session
    assert not session.is_initialized
    _internals.log_event("Nothing,happens", 1)
    assert control.end() is False


def test_initialize_and_end(tmp_path):
    session = control.initialize(directory=str(tmp_path), log_level=1)
    assert _internals.active_session is session
    assert session.is_initialized and session.clock is not None
    _internals.log_event("Solve,diamond,3", 1)
    _internals.log_event("Detail,hidden", 2)
    _internals.warn_event("careful")
    path = session.events.fullpath
    assert control.end() is True
    assert not _internals.active_session.is_initialized
    text = open(path).read()
    assert "Session,initialized" in text and "Session,ended" in text
    assert ",Solve,diamond,3" in text and "Detail,hidden" not in text
    assert ",WARNING,careful" in text


def test_log_level_zero_writes_no_file(tmp_path):
    session = control.initialize(directory=str(tmp_path), log_level=0)
    assert session.events is None
    _internals.log_event("Solve,diamond,3", 1)
    control.end()
    assert os.listdir(str(tmp_path)) == []


def test_log_level_validation():
    session = Session("test")
    session.set_log_level(2)
    assert session.log_level == 2
    with pytest.raises(ValueError):
        session.set_log_level(3)


def test_get_defaults():
    values = get_defaults()
    assert values["randomtrap.game.defaults.trap_guard"] == 24
    assert values["randomtrap.control.defaults.threads"] >= 1
    found = get_defaults("trap_guard")
    assert list(found) == ["randomtrap.game.defaults.trap_guard"]
    text = get_defaults("selfcheck_guard", as_string=True)
    assert text.startswith("randomtrap.control.defaults.selfcheck_guard:")


def test_self_check(tmp_path):
    out = str(tmp_path / "selfcheck.json")
    results = run_self_check(out=out)
    assert set(results) == {"trap_oracle", "vicious_dual", "bootstrap",
                            "draw_map"}
    assert all(r["passed"] for r in results.values())
    assert all(r["checked"] > 0 for r in results.values())
    document = read_json(out)
    assert document["kind"] == "selfcheck"
    assert document["config"] == {"seed": 0}
