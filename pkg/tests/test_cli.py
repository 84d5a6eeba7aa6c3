import json
import subprocess
import sys

import pytest

from asymdl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_worked_example_preset(capsys):
    code, out, _ = run(capsys, "decode", "--family", "block", "--preset", "paper-example")
    assert code == 0
    lines = out.strip().splitlines()
    assert json.loads(lines[0])["eps"] == [0, -2, 0, -2, 1]
    assert lines[-1] == "0100101001"


def test_gen_and_decode_single(capsys, tmp_path):
    out_file = tmp_path / "code.txt"
    code, out, _ = run(capsys, "gen", "--family", "single", "--n", "6", "--a", "23", "--p", "29",
                       "--out", str(out_file))
    assert code == 0
    assert "010100" in out_file.read_text().split()
    assert json.loads(out)["size"] == len(out_file.read_text().split())
    code, out, _ = run(capsys, "decode", "--family", "single", "--n", "6", "--a", "23", "--p", "29",
                       "--input", "01010")
    assert code == 0 and out.strip() == "010100"


def test_decode_failure_exit_code(capsys):
    code, _, err = run(capsys, "decode", "--family", "single", "--n", "6", "--a", "23", "--p", "29",
                       "--input", "0101")
    assert code == 1 and "decode failure" in err


def test_usage_errors(capsys):
    assert run(capsys, "corrupt", "--input", "0101")[0] == 2
    assert run(capsys, "decode", "--family", "single", "--input", "01")[0] == 2
    assert run(capsys, "decode", "--family", "single", "--n", "4", "--input", "0a1")[0] == 2
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_corrupt_is_deterministic(capsys):
    args = ("corrupt", "--input", "0111010100", "--mode", "asym", "--t", "2", "--s-plus", "1",
            "--s-minus", "1", "--seed", "7")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second and first[0] == 0
    y, pattern = first[1].strip().splitlines()
    assert "deletions" in json.loads(pattern)


def test_systematic_roundtrip(capsys):
    msg = "0110100111010"
    code, out, _ = run(capsys, "encode", "--k", "13", "--t-b", "1", "--ell", "2", "--s", "1", "--input", msg)
    assert code == 0
    x = out.strip()
    code, out, _ = run(capsys, "corrupt", "--mode", "block", "--t-b", "1", "--ell", "2", "--s", "1",
                       "--seed", "3", "--input", x)
    y = out.splitlines()[0]
    code, out, _ = run(capsys, "decode", "--family", "systematic", "--k", "13", "--t-b", "1",
                       "--ell", "2", "--s", "1", "--input", y)
    assert code == 0 and out.strip() == msg


def test_verify_and_bounds(capsys):
    code, out, _ = run(capsys, "verify", "--family", "single", "--n", "7")
    assert code == 0 and json.loads(out)["verified"]
    code, out, _ = run(capsys, "bounds", "--n", "16", "--t", "1", "--s", "1")
    assert code == 0 and json.loads(out)["upper_size"] == 2048


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "single", "n": 6, "a": "23", "p": 29}))
    code, out, _ = run(capsys, "decode", "--config", str(cfg), "--input", "001100")
    assert code == 0 and out.strip() == "010100"
    cfg.write_text(json.dumps({"bogus": 1}))
    assert run(capsys, "decode", "--config", str(cfg))[0] == 2


def test_list_decode(capsys):
    code, out, _ = run(capsys, "decode", "--family", "list", "--n", "8", "--t", "1", "--s-plus", "1",
                       "--s-minus", "0", "--p", "11", "--a", "0,0", "--input", "11111111")
    assert code == 0
    assert "11111111" in out.split()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "asymdl", "bounds", "--n", "10"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["n"] == 10
