"""CLI: end-to-end pipelines, demo tables, exit codes."""

import csv
import json

import numpy as np
import pytest

from orthocub import apply_rule, demo_spline_element
from orthocub.cli import main
from orthocub.functional import cubature_from_dict
from orthocub.rules import bundle_from_rule, rule_from_dict


def _read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def _startup(tmp_path, dim, ade, rule="mpx"):
    out = tmp_path / f"bundle-{dim}-{ade}.json"
    assert main(["startup", "--dim", str(dim), "--ade", str(ade),
                 "--rule", rule, "--out", str(out)]) == 0
    return out


def test_startup_writes_rule_json(tmp_path):
    out = _startup(tmp_path, 2, 10)
    payload = json.loads(out.read_text())
    assert payload["dim"] == 2
    assert payload["ade"] == 20
    assert len(payload["nodes"]) == 72
    assert payload["rule_kind"] == "near-minimal"
    bundle = bundle_from_rule(rule_from_dict(payload))
    assert bundle.degree == 10


def test_startup_stdout_default(capsys):
    assert main(["startup", "--dim", "2", "--ade", "0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["nodes"]) == 2


def test_spline_pipeline_recovers_area(tmp_path):
    bundle = _startup(tmp_path, 2, 10)
    moments = tmp_path / "m.json"
    assert main(["moments", "spline", "--ade", "10", "--out", str(moments)]) == 0
    rule_path = tmp_path / "rule.json"
    assert main(["rule", "--bundle", str(bundle), "--moments", str(moments),
                 "--out", str(rule_path)]) == 0
    rule = cubature_from_dict(json.loads(rule_path.read_text()))
    area = apply_rule(rule, np.ones(len(rule)))
    ref = demo_spline_element().signed_area()
    assert area == pytest.approx(ref, rel=1e-12)


def test_rule_box_must_match_moments(tmp_path):
    bundle = _startup(tmp_path, 2, 4)
    moments = tmp_path / "m.json"
    assert main(["moments", "spline", "--ade", "4", "--out", str(moments)]) == 0
    box = json.loads(moments.read_text())["box"]
    same = json.dumps([[lo, hi] for lo, hi in zip(box["lo"], box["hi"])])
    assert main(["rule", "--bundle", str(bundle), "--moments", str(moments),
                 "--box", same, "--out", str(tmp_path / "r.json")]) == 0
    assert main(["rule", "--bundle", str(bundle), "--moments", str(moments),
                 "--box", "[[0,1],[0,1]]", "--out", str(tmp_path / "r2.json")]) == 2


def test_qmc_moments_report_retention(tmp_path):
    out = tmp_path / "q.json"
    assert main(["moments", "qmc", "--ade", "3", "--halton-count", "20000",
                 "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["points_total"] == 20000
    assert 0 < payload["points_retained"] < 20000
    assert payload["functional_tag"] == "qmc"


def test_diff_weights_command(tmp_path):
    bundle = _startup(tmp_path, 2, 6)
    out = tmp_path / "dw.json"
    assert main(["diff-weights", "--bundle", str(bundle),
                 "--box", "[[0,2],[-1,1]]", "--point", "1.0,0.25",
                 "--alpha", "1,0", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    w = np.asarray(payload["weights"])
    nodes = np.asarray(payload["nodes"])
    # d/dx of x^2 at x=1 is 2, independent of the y coordinate
    assert float(w @ nodes[:, 0] ** 2) == pytest.approx(2.0, abs=1e-10)
    assert payload["alpha"] == [1, 0]


def test_demo_spline_table(tmp_path):
    out = tmp_path / "spline.csv"
    assert main(["demo", "ade-spline", "--degrees", "2,4", "--trials", "3",
                 "--out", str(out)]) == 0
    header, rows = _read_csv(str(out))
    assert header == ["kind", "dim", "degree", "alpha", "trial", "error"]
    assert len(rows) == 2 * 4  # 3 trials + geomean per degree
    for row in rows:
        assert row[0] == "integrate-spline" and row[1] == "2"
        assert float(row[5]) <= 1e-10


def test_demo_derivative_deterministic(tmp_path):
    args = ["demo", "ade-derivative", "--dims", "2", "--degrees", "2",
            "--trials", "1", "--seed", "7"]
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    header, rows = _read_csv(str(a))
    # five derivative orders in 2D, one trial row plus the geomean row each
    assert len(rows) == 5 * 2
    alphas = {row[3] for row in rows}
    assert alphas == {"1;0", "0;1", "2;0", "0;2", "1;1"}


def test_demo_sumweights_ratios(tmp_path):
    out = tmp_path / "sw.csv"
    assert main(["demo", "sumweights", "--kind", "spline",
                 "--degrees", "2:2:6", "--out", str(out)]) == 0
    header, rows = _read_csv(str(out))
    assert [row[2] for row in rows] == ["2", "4", "6"]
    for row in rows:
        assert 1.0 <= float(row[3]) <= 2.0


def test_demo_lebesgue_fit_column(tmp_path):
    out = tmp_path / "leb.csv"
    assert main(["demo", "lebesgue", "--dim", "2", "--alpha", "0,0",
                 "--degrees", "2,4,6", "--probes", "400",
                 "--out", str(out)]) == 0
    header, rows = _read_csv(str(out))
    assert header == ["degree", "value", "fit"]
    assert all(row[2] == "" for row in rows)
    assert main(["demo", "lebesgue", "--dim", "2", "--alpha", "1,0",
                 "--degrees", "2,4,6,8", "--probes", "400",
                 "--out", str(out)]) == 0
    _, rows = _read_csv(str(out))
    for row in rows:
        float(row[2])  # populated when a growth fit is requested


def test_demo_weights_distribution_sorted(tmp_path):
    out = tmp_path / "wd.csv"
    assert main(["demo", "weights-distribution", "--kind", "spline",
                 "--ade", "6", "--out", str(out)]) == 0
    _, rows = _read_csv(str(out))
    weights = [float(row[1]) for row in rows]
    assert weights == sorted(weights, reverse=True)
    assert len(weights) == 32


def test_usage_errors_exit_one():
    with pytest.raises(SystemExit) as exc:
        main(["startup", "--dim", "4", "--ade", "2"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["startup", "--ade", "2"])
    assert exc.value.code == 1


def test_config_errors_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["rule", "--bundle", str(bad), "--moments", str(bad)]) == 2
    assert main(["rule", "--bundle", str(tmp_path / "missing.json"),
                 "--moments", str(bad)]) == 2
    assert main(["demo", "ade-spline", "--dims", "3", "--degrees", "2",
                 "--trials", "1"]) == 2
    assert main(["demo", "ade-spline", "--degrees", "2:0:4", "--trials", "1"]) == 2
    assert main(["demo", "lebesgue", "--dim", "2", "--alpha", "1,0,0",
                 "--degrees", "2,4,6"]) == 2
    assert main(["demo", "ade-derivative", "--dims", "5", "--degrees", "2",
                 "--trials", "1"]) == 2
    err = capsys.readouterr().err
    assert "orthocub: error:" in err
