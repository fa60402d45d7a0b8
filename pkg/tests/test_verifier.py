import json

import numpy as np
import pytest

from jetfinsler import (JetPoint, ParameterError, UnknownTensorError, VerifyConfig,
                        contract_cubic, eval_tensor, fd_partial, finsler_value,
                        parse_h, parse_metric, report_to_json, run_suite)


def ypoint(y, t=0.0):
    return JetPoint(t, np.zeros(4), np.asarray(y, dtype=float))


# -------------------------------------------------------------- fd_partial

def test_fd_partial_of_cubic(chernov):
    p = ypoint([1.0, 2.0, 3.0, 4.0])
    field = lambda q: contract_cubic(chernov, q).S111
    val = fd_partial(field, p, ("y", 0))
    assert val == pytest.approx(26.0, abs=1e-7)


def test_fd_partial_second_order_of_linear_field():
    p = ypoint([1.0, 2.0, 3.0, 4.0])
    val = fd_partial(lambda q: q.y[1], p, ("y", 1), order=2)
    assert abs(val) < 1e-8


def test_fd_partial_second_order_of_finsler_squared(chernov, h_const, ones_point):
    field = lambda q: finsler_value(chernov, h_const, q)[1]
    val = fd_partial(field, ones_point, ("y", 0), order=2)
    assert val == pytest.approx(-2.0 * 4.0 ** (-4.0 / 3.0), abs=1e-5)


def test_fd_partial_rejects_bad_order(chernov, ones_point):
    with pytest.raises(ValueError):
        fd_partial(lambda q: q.t, ones_point, ("t",), order=3)


# ------------------------------------------------------------ config parse

def test_parse_metric_variants(tmp_path):
    assert parse_metric("chernov").kind == "chernov"
    assert parse_metric("f2").kind == "f2"
    path = tmp_path / "c.cubic"
    path.write_text("1 2 3 1.0\n")
    assert parse_metric(f"custom:{path}").kind == "custom"
    with pytest.raises(ParameterError):
        parse_metric("nope")


def test_parse_h_variants():
    assert parse_h("const:2.5").h11(0.3) == 2.5
    assert parse_h("exp:0.5").christoffel(0.0) == (0.5, 0.0)
    assert parse_h("poly:1,0,1").christoffel(1.0)[0] == pytest.approx(0.5)
    with pytest.raises(ParameterError):
        parse_h("exp:abc")
    with pytest.raises(ParameterError):
        parse_h("weird:1")


def test_config_validation():
    with pytest.raises(ParameterError):
        VerifyConfig(samples=0)
    with pytest.raises(ParameterError):
        VerifyConfig(tol={"metric-inverse": -1.0})
    with pytest.raises(ParameterError):
        VerifyConfig(K=0.0)


# -------------------------------------------------------------- run_suite

@pytest.fixture(scope="module")
def small_report():
    return run_suite(VerifyConfig(samples=10, seed=42))


def test_suite_passes(small_report):
    failed = [c.name for c in small_report.checks if not c.passed]
    assert small_report.overall_pass, failed


def test_suite_records_are_complete(small_report):
    for c in small_report.checks:
        assert c.samples == 10
        assert c.tolerance > 0
        assert np.isfinite(c.max_residual)
    assert small_report.seed == 42
    assert small_report.config["metric"] == "chernov"


def test_f2_suite_check_names():
    rep = run_suite(VerifyConfig(metric_spec="f2", samples=10))
    names = {c.name: c for c in rep.checks}
    for required in ("curvature-zero", "einstein-trivial", "em-zero"):
        assert required in names
        assert names[required].passed
        assert names[required].max_residual < 1e-12
    assert rep.overall_pass


@pytest.mark.parametrize("h_spec", ["const:2.0", "poly:1,0,1", "exp:-0.7"])
def test_suite_passes_for_each_h_family(h_spec):
    rep = run_suite(VerifyConfig(h_spec=h_spec, samples=8, seed=1))
    assert rep.overall_pass, [c.name for c in rep.checks if not c.passed]


def test_tolerance_override_can_force_failure():
    rep = run_suite(VerifyConfig(samples=5, tol={"metric-fd-oracle": 1e-20}))
    record = next(c for c in rep.checks if c.name == "metric-fd-oracle")
    assert not record.passed
    assert not rep.overall_pass


def test_unknown_tolerance_override_rejected():
    with pytest.raises(ParameterError):
        run_suite(VerifyConfig(samples=2, tol={"no-such-check": 1e-3}))


def test_report_determinism():
    cfg = VerifyConfig(samples=5, seed=7)
    a = report_to_json(run_suite(cfg))
    b = report_to_json(run_suite(cfg))
    strip = lambda text: "\n".join(l for l in text.splitlines() if '"timestamp"' not in l)
    assert strip(a) == strip(b)


def test_report_is_valid_json_with_full_precision(small_report):
    text = report_to_json(small_report)
    data = json.loads(text)
    assert data["overall_pass"] is True
    assert data["artifact"]["name"] == "jetfinsler"
    assert data["config"]["samples"] == 10
    # round-trip at full precision
    for rec, check in zip(data["checks"], small_report.checks):
        assert rec["max_residual"] == check.max_residual


# ------------------------------------------------------------- eval_tensor

def test_eval_metric_tensor(chernov, h_const, ones_point):
    payload = eval_tensor("g", ones_point, chernov, h_const)
    values = np.array(payload["values"])
    assert values[0, 0] == pytest.approx(-0.1574901, abs=1e-7)
    assert payload["slots"] == ["xl", "xl"]
    assert payload["point"]["t"] == 0.0


def test_eval_nonlinear_connection(chernov, h_exp, ones_point):
    payload = eval_tensor("N", ones_point, chernov, h_exp)
    assert np.abs(np.array(payload["values"]) + 0.5 * np.eye(4)).max() < 1e-12


def test_eval_em_two_form(chernov, h_exp, ones_point):
    payload = eval_tensor("em.F", ones_point, chernov, h_exp)
    assert np.abs(np.array(payload["values"])).max() < 1e-10


def test_eval_scalar(chernov, h_const, ones_point):
    payload = eval_tensor("S111", ones_point, chernov, h_const)
    assert payload["values"] == pytest.approx(4.0)
    assert payload["slots"] == []


def test_eval_unknown_name(chernov, h_const, ones_point):
    with pytest.raises(UnknownTensorError):
        eval_tensor("bogus", ones_point, chernov, h_const)


def test_eval_cubic_tensor_rejected_for_f2(f2, h_const, ones_point):
    with pytest.raises(ParameterError):
        eval_tensor("S111", ones_point, f2, h_const)


def test_eval_every_registered_name(chernov, h_exp, ones_point):
    from jetfinsler.verify import EVAL_TENSOR_NAMES
    for name in EVAL_TENSOR_NAMES:
        payload = eval_tensor(name, ones_point, chernov, h_exp)
        assert payload["tensor"] == name
