import json
import subprocess
import sys

from topvertex.cli import main


def test_verify_one_leg(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["verify", "--legs", "1", "--max-size", "4", "--framings", "0;1;-2", "--out", str(out)])
    assert code == 0
    assert "0 mismatch" in capsys.readouterr().out
    data = json.loads(out.read_text())
    assert data["summary"]["config"]["framings"] == [[0], [1], [-2]]


def test_verify_three_legs_reports_variants(capsys):
    code = main(
        ["verify", "--legs", "3", "--max-size", "3", "--framings", "1,-1,0", "--sign-variant", "all"]
    )
    assert code == 0
    assert "consistent with the expansion: laplace+per-block" in capsys.readouterr().out


def test_verify_mismatch_exit_code(capsys):
    code = main(["verify", "--legs", "3", "--max-size", "3", "--framings", "0,0,0", "--sign-variant", "as-written"])
    assert code == 1


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "sweep.toml"
    cfg.write_text('legs = 2\nmax_total_size = 2\nframings = "0,0"\nmode = "sampled"\n')
    out = tmp_path / "r.json"
    assert main(["verify", "--config", str(cfg), "--max-size", "3", "--out", str(out)]) == 0
    echo = json.loads(out.read_text())["summary"]["config"]
    assert echo["max_total_size"] == 3 and echo["mode"] == "sampled" and echo["legs"] == 2


def test_configuration_errors_exit_2(tmp_path, capsys):
    assert main(["verify", "--legs", "1", "--framings", "x"]) == 2
    assert main(["verify", "--legs", "1", "--max-size", "4", "--cutoff", "1"]) == 2
    assert main(["verify", "--legs", "1", "--sign-variant", "nope"]) == 2
    assert main(["verify", "--config", str(tmp_path / "missing.toml")]) == 2
    assert main(["table", "--out", str(tmp_path / "no" / "dir" / "t.csv")]) == 2
    assert main(["table", "--legs", "1", "--framing", "1;2"]) == 2
    assert "error" in capsys.readouterr().err


def test_no_expansion_flag(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--legs", "2", "--max-size", "2", "--framings", "0", "--no-expansion", "--out", str(out)]) == 0
    rec = json.loads(out.read_text())["records"][1]
    assert list(rec["fermionic_values"]) == ["FERMION_DET"]


def test_selfcheck_command(capsys):
    assert main(["selfcheck"]) == 0
    text = capsys.readouterr().out
    assert text.count("pass ") == 8 and "FAIL" not in text


def test_table_command(tmp_path, capsys):
    assert main(["table", "--legs", "1", "--max-size", "3"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 8
    out = tmp_path / "t.json"
    assert main(["table", "--legs", "3", "--max-size", "1", "--framing", "1,0,-1", "--format", "json", "--out", str(out)]) == 0
    rows = json.loads(out.read_text())
    assert len(rows) == 4 and rows[0]["framing"] == "1,0,-1"


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "topvertex.cli", "table", "--max-size", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "mu1,framing,value,value_json"
