import json

import pytest
from fastapi.testclient import TestClient

from wzslab.api import app
from wzslab.api.report_cache import ReportCache, report_cache
from wzslab.cli_module import commands
from wzslab.config import RunConfig
from wzslab.output import render_json

@pytest.fixture
def client():
    report_cache.clear()
    return TestClient(app)

def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"

def test_atoms_match_cli_report(client):
    response = client.get("/api/monoid/atoms", params={"group": "3", "weights": "pm"})
    assert response.status_code == 200
    assert response.text == render_json(commands.cmd_atoms(RunConfig(group="3", weights="pm")))
    assert response.json()["body"]["atom_count"] == 8

def test_lengths(client):
    response = client.get("/api/monoid/lengths", params={"group": "3", "seq": "[(1)^6]"})
    assert response.json()["body"]["lengths"] == [2, 3]

def test_parse_error_is_422(client):
    response = client.get("/api/monoid/lengths", params={"group": "3", "seq": "[(1)"})
    assert response.status_code == 422
    assert response.json()["error"] == "ParseError"

def test_cap_error_is_400(client):
    response = client.get("/api/monoid/atoms", params={"group": "8,16"})
    assert response.status_code == 400
    assert response.json()["exitCode"] == 2

def test_structure_routes(client):
    seminormal = client.get("/api/structure/seminormal", params={"group": "8", "search_bound": 2}).json()
    assert seminormal["body"]["witness"] == "[(1),(3)]"
    cs = client.get("/api/structure/class-semigroup", params={"group": "3"}).json()
    assert cs["body"]["size"] == 3
    verdict = client.get("/api/structure/verdict", params={"group": "2,2"}).json()
    assert verdict["body"]["krull_expected"] is True

def test_qform_routes(client):
    cg = client.get("/api/qform/classgroup", params={"disc": "-23"}).json()
    assert cg["body"]["class_group"]["class_number"] == 3
    check = client.get("/api/qform/check", params={"disc": "-23", "n": 2}).json()
    assert check["body"]["verdict"] == "not represented"
    assert client.get("/api/qform/check", params={"disc": "-23"}).status_code == 422

def test_system_info(client):
    info = client.get("/api/system/info").json()
    assert "numpy_version" in info
    assert info["order_cap"] == 64

def test_report_cache_evicts_oldest():
    cache = ReportCache(size=2)
    for name in ("a", "b", "c"):
        cache.get_or_build((name,), lambda: {"command": name})
    assert len(cache) == 2
    built = []
    text = cache.get_or_build(("a",), lambda: built.append(1) or {"command": "a"})
    assert built == [1]
    assert json.loads(text) == {"command": "a"}
