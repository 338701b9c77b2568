import hashlib
import json

from frozen import LEVELS, SUPERSTABLE
from quintic_newton.cli import main


def test_reduce_reports_canonical_form(capsys):
    assert main(["reduce", "2", "--", "-1"]) == 0
    out = capsys.readouterr().out
    assert "kind = canonical" in out
    assert "c = -2" in out
    assert "regime = negative-c" in out


def test_reduce_json_output(capsys):
    assert main(["reduce", "--json", "0", "1"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["kind"] == "canonical"
    assert info["c"] == 0.0
    assert info["conjugacy_residual"] < 1e-9


def test_itinerary_command(capsys):
    assert main(["itinerary", str(SUPERSTABLE["RLRC"])]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "(CRLR)^"
    assert "period = 4" in out


def test_find_window_command(capsys):
    assert main(["find-window", "RC"]) == 0
    out = capsys.readouterr().out
    c = float([l for l in out.splitlines() if l.startswith("c =")][0][4:])
    assert abs(c - SUPERSTABLE["RC"]) < 1e-9


def test_find_window_rejects_bad_word(capsys):
    assert main(["find-window", "RMRC"]) == 2
    assert "error:" in capsys.readouterr().err


def test_tree_json(capsys):
    assert main(["tree", "--max-level", "4", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    for level in (2, 3, 4):
        nodes = payload["levels"][str(level)]
        cycles = [n for n in nodes if n["kind"] == "cycle"]
        assert len(cycles) == LEVELS[level]
    roots = [n for n in payload["levels"]["2"] if n["parent"] is None]
    assert [n["word"] for n in roots] == ["RC"]


def test_entropy_curve_is_deterministic(tmp_path):
    args = ["entropy-curve", "--lo", "0.4", "--hi", "1.5", "--n", "12"]
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0] == "c,entropy,method,period"
    assert len(lines) == 13


def test_run_record_sidecar(tmp_path):
    out = tmp_path / "curve.csv"
    assert main(["entropy-curve", "--lo", "0.5", "--hi", "1.0", "--n", "4",
                 "--out", str(out)]) == 0
    record = json.loads((tmp_path / "curve.csv.run.json").read_text())
    assert record["command"] == "entropy-curve"
    assert record["version"]
    assert "timestamp" not in record
    digest = hashlib.sha256(out.read_bytes()).hexdigest()
    assert record["output_sha256"] == digest
    assert record["config_sha256"] is None


def test_config_defaults_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n": 5, "lo": 0.5, "hi": 1.0}))
    assert main(["--config", str(cfg), "entropy-curve", "--lo", "0.6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 6                       # header + n=5 from config
    assert float(lines[1].split(",")[0]) == 0.6  # explicit flag wins


def test_config_digest_lands_in_sidecar(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n": 4}))
    out = tmp_path / "c.csv"
    assert main(["--config", str(cfg), "entropy-curve", "--lo", "0.5",
                 "--hi", "0.9", "--out", str(out)]) == 0
    record = json.loads((tmp_path / "c.csv.run.json").read_text())
    assert record["config_sha256"] == hashlib.sha256(cfg.read_bytes()).hexdigest()


def test_bifurcation_csv(capsys):
    assert main(["bifurcation", "--lo", "1.0", "--hi", "1.3", "--n", "4",
                 "--transient", "50", "--samples", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "c,x"
    assert len(lines) == 13
    c0, x0 = lines[1].split(",")
    float(c0), float(x0)


def test_verify_suites_pass(capsys):
    assert main(["verify", "--suite", "markov-rlrc"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "0 failures" in out


def test_verify_all_suites(capsys):
    assert main(["verify", "--suite", "all"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
