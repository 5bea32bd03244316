from ltlc import utils
import io
import json
import logging
import os
import pytest


def test_get_ltlc_path_default(monkeypatch):
    monkeypatch.delenv("LTLC_HOME", raising=False)
    assert utils.get_ltlc_path() == os.path.expanduser(os.path.join("~", ".ltlc"))


def test_get_ltlc_path_env(ltlc_home):
    assert utils.get_ltlc_path() == str(ltlc_home)


def test_get_settings_defaults(ltlc_home):
    assert utils.get_settings() == utils.default_settings()


def test_get_settings_user_file(ltlc_home):
    settings_path = ltlc_home / "settings.json"
    settings_path.write_text(json.dumps({"max_states": 4, "unknown": 1}))
    settings = utils.get_settings()
    assert settings["max_states"] == 4
    assert "unknown" not in settings
    assert settings["atoms"] == utils.default_settings()["atoms"]


def test_get_settings_malformed_file(ltlc_home, caplog):
    (ltlc_home / "settings.json").write_text("{not json")
    with caplog.at_level(logging.WARNING):
        settings = utils.get_settings()
    assert settings == utils.default_settings()
    assert "malformed" in caplog.text


@pytest.mark.parametrize("value,expected", [("0", False), ("1", True)])
def test_use_color_env(ltlc_home, monkeypatch, value, expected):
    monkeypatch.setenv("LTLC_COLOR", value)
    assert utils.use_color(io.StringIO(), {"color": not expected}) == expected


def test_use_color_setting(ltlc_home):
    assert utils.use_color(io.StringIO(), {"color": True})


def test_use_color_not_a_terminal(ltlc_home):
    assert not utils.use_color(io.StringIO(), {"color": None})


def test_dump_json_keeps_key_order():
    text = utils.dump_json({"b": 1, "a": [1, 2]})
    assert list(json.loads(text)) == ["b", "a"]
    assert "\r" not in text


def test_record_execution_time(caplog):
    with caplog.at_level(logging.INFO, logger="ltlc.utils"):
        with utils.RecordExecutionTime("block name") as timer:
            pass
    assert timer.duration >= 0
    assert "block name took" in caplog.text
