import json
import math
import subprocess
import sys

import numpy as np
import pytest

from substar.cli import class_region, main, parse_complex
from substar.power_series import PowerSeries
from substar.regions import CARDIOID, HALF_PLANE, SECTOR, car_margin

FAST = ["--radii", "0.9,0.99", "--samples", "256"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


@pytest.mark.parametrize("preset", ["f1", "f2", "identity"])
def test_classify_named_examples(capsys, preset):
    code, rep = run_json(capsys, "classify", "--preset", preset, "--class", "SSC")
    assert code == 0 and rep["verdict"] == "holds" and rep["region"] == CARDIOID


def test_classify_identity_any_class(capsys):
    for cls in ("S*", "S*(0.5)", "S*[0.3]"):
        assert run(capsys, "classify", "--preset", "identity", "--class", cls, *FAST)[0] == 0


def test_classify_counterexample_exit_2(capsys):
    # z f2'/f2 reaches |arg| ~ 0.4 on the circle, beyond 0.1 * pi/2
    code, rep = run_json(capsys, "classify", "--preset", "f2", "--class", "S*[0.1]", *FAST)
    assert code == 2 and rep["min_margin"] < 0
    assert rep["witness_z"] and rep["evidence"] == "sampled circles; not a proof"


def test_classify_coefficient_file(tmp_path, capsys):
    z = np.zeros(65, dtype=complex)
    z[1] = 1.0
    path = tmp_path / "f.json"
    path.write_text(PowerSeries(z).to_json())
    code, rep = run_json(capsys, "classify", "--f", str(path), "--class", "SSC", "--r", "0.999", "--m", "2048")
    assert code == 0 and rep["route"] == "series"


def test_classify_inconclusive_exit_3(tmp_path, capsys):
    # truncated series of 4z/(2-z)^2: the tail indicator exceeds the margin guard
    coeffs = [[0, 0]] + [[k / 2 ** (k - 1), 0] for k in range(1, 9)]
    path = tmp_path / "short.json"
    path.write_text(json.dumps(coeffs))
    code, rep = run_json(capsys, "classify", "--f", str(path), "--class", "SSC")
    assert code == 3 and rep["verdict"] == "inconclusive"


@pytest.mark.parametrize("argv", [
    ["classify", "--preset", "f1", "--class", "S**"],
    ["classify", "--preset", "f1"],
    ["classify", "--class", "SSC"],
    ["classify", "--preset", "kummer", "--class", "SSC", "--a", "2"],
    ["classify", "--preset", "f1", "--class", "SSC", "--radii", "0.9,0.5"],
    ["classify", "--preset", "f1", "--class", "SSC", "--samples", "0"],
    ["classify", "--f", "missing.json", "--class", "SSC"],
    ["special", "eval", "--kind", "kummer", "--a", "2", "--c", "-1", "--z", "0.1"],
    ["special", "eval", "--kind", "kummer", "--a", "2", "--c", "6", "--z", "abc"],
    ["threshold", "--theorem", "3.1"],
    ["threshold", "--theorem", "kummer", "--a", "1", "--c", "1.5"],
    ["verify", "--theorem", "3.1", "--preset", "one", "--alpha", "0.5"],
    ["curves"],
    ["frobnicate"],
])
def test_bad_input_exit_4(capsys, argv):
    # argparse-level errors exit directly; the rest return the code
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 4


def test_argparse_errors_exit_4(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 4


def test_class_region_parsing():
    assert class_region("S*", None).kind == HALF_PLANE
    assert class_region("S*(0.25)", None).param == 0.25
    r = class_region("S*[a]", 0.4)
    assert r.kind == SECTOR and r.param == 0.4
    assert class_region("SSC", None).kind == CARDIOID


def test_parse_complex():
    assert parse_complex("0.3+0.1i") == 0.3 + 0.1j
    assert parse_complex("-2i") == -2j
    assert parse_complex("1") == 1


def test_special_eval(capsys):
    code, res = run_json(capsys, "special", "eval", "--kind", "kummer", "--a", "2", "--c", "6", "--z", "0")
    assert code == 0 and res["value"] == [1.0, 0.0] and res["terms_used"] >= 1
    code, res = run_json(capsys, "special", "eval", "--kind", "bessel", "--p", "2", "--b", "2", "--c", "6", "--z", "0.3+0.1i")
    assert code == 0 and len(res["value"]) == 2


def test_special_series_and_residual(capsys):
    code, res = run_json(capsys, "special", "series", "--kind", "kummer", "--a", "2", "--c", "6", "--order", "5")
    assert code == 0 and len(res["coeffs"]) == 6 and res["coeffs"][1] == [pytest.approx(1 / 3), 0.0]
    code, res = run_json(capsys, "special", "residual", "--kind", "bessel", "--p", "2", "--b", "2", "--c", "6", "--order", "50")
    assert code == 0 and res["residual"] <= 1e-12


def test_threshold_31(capsys):
    code, res = run_json(capsys, "threshold", "--theorem", "3.1", "--alpha", "1")
    assert code == 0
    assert res["analytic"] == pytest.approx(1.694973, abs=1e-6) and res["gap"] <= 1e-4


def test_threshold_tolerance_exit_2(capsys):
    code, res = run_json(capsys, "threshold", "--theorem", "3.1", "--alpha", "1", "--tgrid", "16", "--tol", "1e-12")
    assert code == 2 and res["verdict"] == "gap-exceeds-tolerance"


def test_threshold_trace_and_corollaries(capsys):
    code, res = run_json(capsys, "threshold", "--theorem", "3.2", "--alpha", "0.5", "--trace")
    assert code == 0 and len(res["predicate_trace"]) >= 60
    assert run(capsys, "threshold", "--theorem", "bessel", "--p", "7", "--b", "6", "--c", "10")[0] == 0


def test_verify_theorem21(capsys):
    code, res = run_json(capsys, "verify", "--theorem", "2.1", "--preset", "kummer", "--a", "2", "--c", "6", "--alpha", "0.45")
    assert code == 0 and res["margin"] > 0 and res["verdict"] == "holds"
    assert {"margin", "subordination", "verdict"} <= set(res)
    assert run(capsys, "verify", "--theorem", "2.1", "--preset", "bessel", "--p", "2", "--b", "2", "--c", "6", "--alpha", "0.65")[0] == 0
    code, res = run_json(capsys, "verify", "--theorem", "2.1", "--preset", "kummer", "--a", "2", "--c", "6", "--alpha", "0.3", *FAST)
    assert code == 2 and res["verdict"] == "hypothesis-fails"


def test_verify_implications(capsys):
    code, res = run_json(capsys, "verify", "--theorem", "3.4", "--preset", "mobius", "--gamma", "0.6",
                         "--dilate", "0.5", "--alpha", "0.6", "--beta", "0.5", "--k", "0", *FAST)
    assert code == 0 and res["verdict"] == "holds" and res["theorem_guarantee"]
    code, out, err = run(capsys, "verify", "--theorem", "3.4", "--preset", "one", "--alpha", "0.75",
                         "--beta", "0.3", "--k", "2", *FAST)
    assert code == 0 and "outside" in err


def test_verify_premise_fails_exit_2(capsys):
    code, res = run_json(capsys, "verify", "--theorem", "3.5", "--preset", "mobius", "--gamma", "1",
                         "--alpha", "1", "--beta", "1", *FAST)
    assert code == 2 and res["verdict"] == "premise-fails"


def test_curves_region_car(tmp_path, capsys):
    out = tmp_path / "car.csv"
    assert run(capsys, "curves", "--region", "car", "--samples", "512", "--out", str(out))[0] == 0
    raw = out.read_bytes()
    assert b"\r" not in raw
    lines = raw.decode().splitlines()
    assert lines[0] == "t,u,v" and len(lines) == 513
    t, u, v = map(float, lines[1].split(","))
    assert t == pytest.approx(-math.pi) and u == pytest.approx(1 / 3) and v == pytest.approx(0, abs=1e-11)
    assert lines[1] == "-3.14159265359,0.333333333333,0"


def test_curves_default_stdout(capsys):
    code, out, _ = run(capsys, "curves", "--region", "sector", "--alpha", "0.5")
    assert code == 0 and out.splitlines()[0] == "t,u,v"


def test_curves_fig1(tmp_path, capsys):
    code, res = run_json(capsys, "curves", "--figure", "fig1", "--out", str(tmp_path))
    assert code == 0
    assert all(c["min_margin"] > 0 for c in res["checks"].values())
    for name in ("fig1_q1_image.csv", "fig1_q2_image.csv"):
        data = np.loadtxt(tmp_path / name, delimiter=",", skiprows=1)
        assert np.all(car_margin(data[:, 1] + 1j * data[:, 2]) > 0)
    assert (tmp_path / "fig1_cardioid.csv").exists()


def test_curves_fig2_fig3(tmp_path, capsys):
    code, res = run_json(capsys, "curves", "--figure", "fig2", "--a", "2", "--c", "6", "--out", str(tmp_path))
    assert code == 0 and res["checks"]["phi"]["alpha"] == pytest.approx(1 / math.sqrt(6) + 0.01)
    assert (tmp_path / "fig2_phi_sector.csv").exists() and (tmp_path / "fig2_phi_image.csv").exists()
    code, res = run_json(capsys, "curves", "--figure", "fig3", "--out", str(tmp_path))
    assert code == 0 and set(res["checks"]) == {"u2", "u7"}


def test_curves_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert run(capsys, "curves", "--figure", "fig2", "--out", str(d))[0] == 0
    for f in sorted(a.iterdir()):
        assert f.read_bytes() == (b / f.name).read_bytes()


def test_json_output_deterministic(tmp_path, capsys):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        run(capsys, "classify", "--preset", "f2", "--class", "SSC", "--out", str(path), *FAST)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_config_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"radii": [0.5, 0.6], "samples": 128}))
    code, res = run_json(capsys, "classify", "--preset", "f1", "--class", "SSC", "--config", str(cfg))
    assert res["radii"] == [0.5, 0.6] and res["samples_per_circle"] == 128
    code, res = run_json(capsys, "classify", "--preset", "f1", "--class", "SSC", "--config", str(cfg), "--samples", "64")
    assert res["samples_per_circle"] == 64
    cfg.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "classify", "--preset", "f1", "--class", "SSC", "--config", str(cfg))[0] == 4


def test_csv_format(capsys):
    code, out, _ = run(capsys, "special", "eval", "--kind", "kummer", "--a", "2", "--c", "6", "--z", "0", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "key,value" and "terms_used" in out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "substar.cli", "special", "eval", "--kind", "kummer",
                           "--a", "2", "--c", "6", "--z", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == [1.0, 0.0]
    proc = subprocess.run([sys.executable, "-m", "substar.cli", "classify"], capture_output=True, text=True)
    assert proc.returncode == 4
