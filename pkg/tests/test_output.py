import json

import numpy as np
import pytest

from wzslab.config import RunConfig
from wzslab.errors import ConfigError
from wzslab.output import make_report, render, render_csv, render_json, render_text, write_report

@pytest.fixture
def report():
    return make_report(
        "demo",
        {"group": "3"},
        {"count": np.int64(2), "lengths": [2, 3], "nested": {"flag": True}},
        rows=[{"n": 1, "ok": True}, {"n": 2, "ok": False}],
        columns=("n", "ok"),
    )

def test_json_is_sorted_and_plain(report):
    text = render_json(report)
    data = json.loads(text)
    assert data["body"]["count"] == 2
    assert list(data) == sorted(data)
    assert text.endswith("\n")

def test_csv_rows(report):
    assert render_csv(report).splitlines() == ["n,ok", "1,true", "2,false"]

def test_csv_key_values_without_rows():
    plain = make_report("demo", {}, {"a": 1, "b": {"c": None}})
    assert render_csv(plain).splitlines() == ["key,value", "a,1", "b.c,"]

def test_text_table(report):
    lines = render_text(report).splitlines()
    assert lines[0] == "# demo"
    assert "nested.flag: true" in lines
    assert lines[-1].split() == ["2", "false"]

def test_unknown_format(report):
    with pytest.raises(ConfigError):
        render(report, "xml")

def test_write_to_file(report, tmp_path):
    target = tmp_path / "sub" / "report.csv"
    text = write_report(report, "csv", target)
    assert target.read_text(encoding="utf-8") == text

def test_run_config_validation():
    assert RunConfig().header()["group"] == "3"
    assert "threads" not in RunConfig().header()
    with pytest.raises(ConfigError):
        RunConfig(length_bound=0)
    with pytest.raises(ConfigError):
        RunConfig(output_format="xml")
    with pytest.raises(ConfigError):
        RunConfig.from_mapping({"colour": "red"})
