import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from yhecke.catalog import load_bundled
from yhecke.rings import parse_expr
from yhecke.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_invariant_theta_all_routes(client):
    r = client.post("/invariant", json={
        "braid": [1, 1], "strands": 2, "invariant": "theta", "d": 2, "route": "all"})
    assert r.status_code == 200
    body = r.json()
    assert body["agree"] is True
    values = {rv["route"]: rv["value"] for rv in body["routes"]}
    assert set(values) == {"trace", "skein", "comb"}
    assert parse_expr(values["trace"]) == parse_expr("q^3 - q - 2*(q^5 + q^3)")


def test_invariant_jones_includes_classical_route(client):
    r = client.post("/invariant", json={
        "braid": [1, 1, 1], "strands": 2, "invariant": "jones", "route": "all"})
    body = r.json()
    routes = {rv["route"] for rv in body["routes"]}
    assert "trace-u" in routes
    assert body["agree"] is True


def test_invariant_with_symbolic_e(client):
    r = client.post("/invariant", json={
        "braid": [1, 1], "strands": 2, "invariant": "theta", "route": "comb", "E": "1/3"})
    assert r.status_code == 200
    value = parse_expr(r.json()["routes"][0]["value"])
    assert value == parse_expr("q^3 - q - 3*(q^5 + q^3)")


def test_invariant_usage_errors(client):
    r = client.post("/invariant", json={
        "braid": [5], "strands": 2, "invariant": "theta", "d": 2})
    assert r.status_code == 400
    r = client.post("/invariant", json={
        "braid": [1], "strands": 2, "invariant": "gamma", "d": 2, "route": "skein"})
    assert r.status_code == 400
    r = client.post("/invariant", json={
        "braid": [1], "strands": 2, "invariant": "theta"})
    assert r.status_code == 400
    r = client.post("/invariant", json={
        "braid": [1], "strands": 0, "invariant": "theta", "d": 1})
    assert r.status_code == 422


def test_gamma_endpoint(client):
    r = client.post("/invariant", json={
        "braid": [], "strands": 1, "invariant": "gamma", "d": 2,
        "D": [0, 1], "framings": [0]})
    assert r.status_code == 200
    assert r.json()["routes"][0]["value"] == "1"


def test_tables_dims(client):
    r = client.post("/tables", json={"table": "dims", "d": 2, "n": 3})
    assert r.json() == {"headers": ["Y", "YTL", "CTL", "FTL"],
                        "rows": [["48", "28", "47", "46"]]}


def test_tables_dims_d1(client):
    r = client.post("/tables", json={"table": "dims", "d": 1, "n": 4})
    assert r.json()["rows"] == [["24", "14", "14", "14"]]


def test_tables_esystem(client):
    r = client.post("/tables", json={"table": "esystem", "d": 2, "n": 3})
    rows = r.json()["rows"]
    assert len(rows) == 3
    assert rows[0][0] == "{0}" and rows[2][0] == "{0,1}"
    assert rows[2][2] == "1/2"


def test_tables_irreps(client):
    r = client.post("/tables", json={"table": "irreps", "d": 2, "n": 3})
    rows = r.json()["rows"]
    assert len(rows) == 10
    total = sum(int(row[1]) ** 2 for row in rows)
    assert total == 48


def test_pairs_demo(client):
    r = client.post("/pairs", json={
        "catalog_text": load_bundled("catalog.txt"),
        "pairs_text": load_bundled("pairs_demo.txt")})
    assert r.status_code == 200
    results = r.json()["results"]
    assert len(results) == 3
    assert all(res["match"] is True for res in results)
    assert results[0]["difference"] == "0"


def test_pairs_missing_name(client):
    r = client.post("/pairs", json={
        "catalog_text": load_bundled("catalog.txt"),
        "pairs_text": "hopf+ no-such-link\n"})
    assert r.status_code == 400
    assert "no-such-link" in r.json()["detail"]["message"]


def test_pairs_bad_catalog_line(client):
    r = client.post("/pairs", json={
        "catalog_text": "only-two fields\n",
        "pairs_text": ""})
    assert r.status_code == 400
    assert "line 1" in r.json()["detail"]["message"]


def test_concurrent_requests(client):
    # memo tables are shared across requests; concurrent use must stay
    # consistent (values are pure functions of the request)
    from concurrent.futures import ThreadPoolExecutor

    payloads = [
        {"braid": [1, 1], "strands": 2, "invariant": "theta", "d": 2, "route": "all"},
        {"braid": [1, 2] * 3, "strands": 3, "invariant": "theta", "d": 2, "route": "comb"},
        {"braid": [1, -2, 1], "strands": 3, "invariant": "jones", "route": "all"},
        {"braid": [1, 1, 1], "strands": 2, "invariant": "homflypt", "route": "all"},
    ] * 5
    def call(p):
        r = client.post("/invariant", json=p)
        assert r.status_code == 200
        return tuple(sorted((rv["route"], rv["value"]) for rv in r.json()["routes"]))
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(call, payloads))
    for i in range(4):
        group = {results[j] for j in range(i, len(results), 4)}
        assert len(group) == 1  # identical requests give identical answers
