import csv
import io
import json

import pytest

from leolte.cli import _parse_values, main


@pytest.fixture
def fast_scenario(tmp_path):
    p = tmp_path / "fast.yaml"
    p.write_text("harq:\n  duration_ms: 1000\nhandover:\n  horizon_s: 3600\n")
    return p


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_report_json(capsys, fast_scenario):
    code, out, _ = run(capsys, "report", "--scenario", str(fast_scenario), "--seed", "1")
    assert code == 0
    data = json.loads(out)
    assert data["harq"]["min_processes"] == 23
    assert data["verdict_summary"]["waveform"]["verdict"] == "FAIL"


def test_report_text(capsys, fast_scenario):
    code, out, _ = run(capsys, "report", "--scenario", str(fast_scenario), "--format", "text")
    assert code == 0
    assert "rn_attach" in out and "FAIL" in out


def test_report_to_directory(capsys, tmp_path, fast_scenario):
    out_dir = tmp_path / "out"
    code, out, _ = run(capsys, "report", "--scenario", str(fast_scenario), "--out", str(out_dir))
    assert code == 0 and out == ""
    assert json.loads((out_dir / "report.json").read_text())["rtt_ms"] == pytest.approx(21.06, abs=0.15)


def test_report_bytes_identical(tmp_path, fast_scenario):
    for name in ("a", "b"):
        assert main(["report", "--scenario", str(fast_scenario), "--seed", "3", "--out", str(tmp_path / name)]) == 0
    assert (tmp_path / "a" / "report.json").read_bytes() == (tmp_path / "b" / "report.json").read_bytes()


def test_bad_scenario_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.yaml"
    p.write_text("orbit:\n  altitude_km: -5\n  colour: red\n")
    code, out, err = run(capsys, "report", "--scenario", str(p))
    assert code == 2
    assert "orbit.colour" in err
    assert out == ""


def test_missing_scenario_exit_code(capsys, tmp_path):
    code, _, err = run(capsys, "report", "--scenario", str(tmp_path / "nope.yaml"))
    assert code == 1
    assert "error" in err


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--param", "ambiguity_km", "--values", "0:2:0.5")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["ambiguity_km", "max_residual_hz"]
    assert [float(r[0]) for r in rows[1:]] == [0.0, 0.5, 1.0, 1.5, 2.0]


def test_sweep_list_values(capsys):
    code, out, _ = run(capsys, "sweep", "--param", "elevation", "--values", "45,90")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert float(rows[-1][-1]) == 0.0


def test_sweep_unknown_parameter():
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--param", "beam", "--values", "1"])
    assert exc.value.code != 0


def test_parse_values():
    assert _parse_values("45:90:15") == [45.0, 60.0, 75.0, 90.0]
    assert _parse_values("1, 2,3") == [1.0, 2.0, 3.0]


def test_grid(capsys):
    code, out, _ = run(capsys, "grid", "--bw", "20", "--format", "json")
    assert code == 0
    row = json.loads(out)
    assert (row["n_rb_dl"], row["fft_size"], row["active_subcarriers"]) == (100, 2048, 1200)
    assert row["cp_lengths_samples"] == [160] + [144] * 6


def test_grid_rejects_unknown_bandwidth(capsys):
    code, _, err = run(capsys, "grid", "--bw", "7")
    assert code == 1
    assert "error" in err


def test_check_timers_text(capsys):
    code, out, _ = run(capsys, "check", "timers")
    assert code == 0
    assert "rn_attach_rar_window" in out
    assert "ad hoc deployment" in out


def test_check_timers_json_and_csv(capsys):
    code, out, _ = run(capsys, "check", "timers", "--format", "json")
    assert code == 0
    verdicts = {v["mechanism"]: v["verdict"] for v in json.loads(out)["verdicts"]}
    assert verdicts["contention_resolution_timer"] == "PASS"
    assert verdicts["rn_attach_rar_window"] == "FAIL"
    code, out, _ = run(capsys, "check", "timers", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "mechanism" and len(rows) == 5


def test_harq_size(capsys):
    code, out, _ = run(capsys, "harq", "size", "--rtt", "21.06")
    assert code == 0
    data = json.loads(out)
    assert (data["n_processes"], data["harq_id_bits"], data["buffer_units_tb"]) == (23, 5, 23)


def test_harq_sim_outputs(tmp_path, fast_scenario):
    out_dir = tmp_path / "h"
    assert main(["harq", "sim", "--config", str(fast_scenario), "--seed", "5", "--out", str(out_dir)]) == 0
    metrics = json.loads((out_dir / "harq_metrics.json").read_text())
    assert metrics["seed"] == 5
    assert 0 < metrics["goodput_fraction"] <= 1
    rows = list(csv.reader(io.StringIO((out_dir / "harq_retx_histogram.csv").read_text())))
    assert rows[0] == ["transmission_index", "count"]


def test_harq_sim_bytes_identical(tmp_path, fast_scenario):
    for name in ("a", "b"):
        main(["harq", "sim", "--config", str(fast_scenario), "--seed", "9", "--out", str(tmp_path / name)])
    for f in ("harq_metrics.json", "harq_retx_histogram.csv"):
        assert (tmp_path / "a" / f).read_bytes() == (tmp_path / "b" / f).read_bytes()


def test_harq_sim_seed_matters(capsys, fast_scenario):
    _, a, _ = run(capsys, "harq", "sim", "--config", str(fast_scenario), "--seed", "1")
    _, b, _ = run(capsys, "harq", "sim", "--config", str(fast_scenario), "--seed", "2")
    assert a != b


def test_handover(capsys, tmp_path, fast_scenario):
    out_dir = tmp_path / "ho"
    code, _, _ = run(capsys, "handover", "--scenario", str(fast_scenario), "--mechanism", "traditional",
                     "--out", str(out_dir))
    assert code == 0
    summary = json.loads((out_dir / "handover_summary.json").read_text())
    assert summary["mechanism"] == "TraditionalReattach"
    assert summary["availability"] < 1.0
    rows = list(csv.reader(io.StringIO((out_dir / "handover_events.csv").read_text())))
    assert len(rows) - 1 == summary["n_events"] > 0


def test_handover_phy_is_lossless(capsys, fast_scenario):
    code, out, _ = run(capsys, "handover", "--scenario", str(fast_scenario), "--mechanism", "phy")
    assert code == 0
    assert json.loads(out)["availability"] == 1.0
