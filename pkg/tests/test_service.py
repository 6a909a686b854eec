import math

import pytest
from fastapi.testclient import TestClient

from gendirichlet.service import app

client = TestClient(app)

ZETA = {
    "frequency": {"kind": "log_n", "n_max": 20000},
    "coefficients": {"kind": "ones"},
    "label": "zeta",
}


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok" and body["version"]


def test_analyze_frequency_log_n():
    r = client.post("/frequency/analyze", json={"frequency": {"kind": "log_n"}})
    assert r.status_code == 200
    body = r.json()
    assert body["strip_width"]["exact"] == 1.0
    assert body["bohr_condition"]["verdict"] == "holds"
    assert body["bohr_condition_l"] == 1.0
    assert body["landau_condition"]["verdict"] == "holds"
    assert body["bohr_theorem"]["verdict"] == "holds"
    assert body["hypercontractive"]["verdict"] == "holds"


def test_analyze_frequency_infinite_width_serializes():
    r = client.post("/frequency/analyze",
                    json={"frequency": {"kind": "log_n_pow", "alpha": 0.5}})
    assert r.status_code == 200
    assert r.json()["strip_width"]["exact"] == "inf"


def test_decompose_log_n():
    r = client.post("/frequency/decompose",
                    json={"frequency": {"kind": "log_n"}, "n": 12})
    assert r.status_code == 200
    body = r.json()
    assert body["natural_type"] is True
    assert body["basis"][0]["log_of"] == 2
    # row for n = 12 = 2^2 * 3
    assert body["rows"][11] == [
        {"column": 1, "numerator": 2, "denominator": 1},
        {"column": 2, "numerator": 1, "denominator": 1},
    ]


def test_abscissas_endpoint():
    r = client.post("/series/abscissas",
                    json={"series": ZETA, "n_max": 20000, "sup_horizon": 400})
    assert r.status_code == 200
    body = r.json()
    assert abs(body["sigma_c"]["value"] - 1.0) < 0.05
    assert abs(body["sigma_a"]["value"] - 1.0) < 0.05
    assert body["sigma_c"]["scan"]


def test_translate_endpoint():
    r = client.post("/series/translate", json={"series": ZETA, "sigma": 1.0, "count": 3})
    assert r.status_code == 200
    terms = r.json()["terms"]
    assert [t["re"] for t in terms] == pytest.approx([1.0, 0.5, 1 / 3], rel=1e-11)


def test_abschnitt_endpoint():
    r = client.post("/series/abschnitt",
                    json={"series": ZETA, "n_basis": 1, "horizon": 10})
    assert r.status_code == 200
    lam = [t["frequency"] for t in r.json()["terms"]]
    assert lam == pytest.approx([math.log(v) for v in (1, 2, 4, 8)], abs=1e-12)


def test_riesz_endpoint_single_mean():
    r = client.post("/summation/riesz", json={"series": ZETA, "x": math.log(3)})
    assert r.status_code == 200
    body = r.json()
    assert len(body["terms"]) == 2
    assert body["value"][0] == pytest.approx(1.0 + 1.0 - math.log(2) / math.log(3), rel=1e-11)


def test_riesz_endpoint_scan():
    r = client.post("/summation/riesz",
                    json={"series": ZETA, "x_points": [2.0, 3.0, 4.0, 5.0],
                          "grid_t_max": 5.0})
    assert r.status_code == 200
    body = r.json()
    assert len(body["scan"]) == 4
    assert body["estimate"]["confidence"]["verdict"] in ("holds", "inconclusive")


def test_kernels_endpoint():
    r = client.post("/summation/kernels",
                    json={"kind": "poisson", "sigma": 2.0, "t": [1.0], "transform": True})
    assert r.status_code == 200
    assert r.json()["points"][0]["value"] == pytest.approx(math.exp(-2.0), rel=1e-12)
    r = client.post("/summation/kernels",
                    json={"kind": "fejer", "x": 2.0, "t": [0.0, 3.0], "transform": True})
    vals = [p["value"] for p in r.json()["points"]]
    assert vals == [1.0, 0.0]


def test_bohr_coeff_endpoint():
    r = client.post("/summation/bohr-coeff",
                    json={"terms": [[0.4, 0.25, -0.1]], "sigma": 0.5, "x": 0.4, "T": 100.0})
    assert r.status_code == 200
    body = r.json()
    assert body["value"] == [0.25, -0.1]
    assert body["error_bound"] == 0.0


def test_koethe_endpoint():
    r = client.post("/koethe/matrix",
                    json={"frequency": {"kind": "n"}, "n_max": 2, "k_max": 2})
    assert r.status_code == 200
    entries = {(e["n"], e["k"]): e["entry"] for e in r.json()["entries"]}
    assert entries[(1, 1)] == 1.0
    assert entries[(2, 1)] == pytest.approx(math.exp(-1.0), rel=1e-12)


def test_nuclearity_endpoint():
    r = client.post("/koethe/nuclearity", json={"frequency": {"kind": "n"}})
    assert r.status_code == 200
    assert r.json()["verdict"] == "holds"
    r = client.post("/koethe/nuclearity", json={"frequency": {"kind": "log_n"}})
    assert r.json()["verdict"] == "fails"


def test_report_endpoint():
    r = client.post("/report", json={"frequency": {"kind": "n"}})
    assert r.status_code == 200
    body = r.json()
    for space in body["spaces"]:
        assert space["flags"]["is_nuclear"]["verdict"] == "holds"
    r = client.post("/report", json={"frequency": {"kind": "log_log_n"}})
    d = next(s for s in r.json()["spaces"] if s["space"] == "D_inf_plus")
    assert d["flags"]["is_frechet"]["verdict"] == "inconclusive"


def test_unknown_kind_becomes_422():
    r = client.post("/frequency/analyze", json={"frequency": {"kind": "bogus"}})
    assert r.status_code == 422
    r = client.post("/report", json={"frequency": {"kind": "explicit", "values": [1.0, 0.5]}})
    assert r.status_code == 422  # non-monotone explicit data


def test_pydantic_validation_422():
    r = client.post("/frequency/analyze", json={"frequency": {"kind": "log_n", "n_max": -5}})
    assert r.status_code == 422
    r = client.post("/summation/kernels", json={"kind": "poisson", "t": [0.0]})
    assert r.status_code == 422  # missing sigma


def test_frequency_schema_roundtrip():
    from gendirichlet.service.schemas import FrequencyIn

    payloads = [
        {"kind": "log_n", "n_max": 500},
        {"kind": "scaled_log_n", "c": [3, 2]},
        {"kind": "explicit", "values": [0.0, 0.5, 1.25]},
        {"kind": "rational_combination", "basis": [0.5, 1.7],
         "matrix": [[[1, 1]], [[0, 1], [1, 2]]]},
    ]
    for payload in payloads:
        model = FrequencyIn(**payload)
        core = model.to_core()
        again = FrequencyIn(**model.model_dump()).to_core()
        assert core == again
