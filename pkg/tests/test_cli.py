import io
import json
from pathlib import Path

import pytest

from lexpoint.cli import build_parser, main, parse_command, run_command

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"
E1 = str(FIXTURES / "E1.json")
E2 = str(FIXTURES / "E2.json")


def run(args):
    buf = io.StringIO()
    code = run_command(parse_command(args), out=buf)
    return code, buf.getvalue()


def test_gb_reduced_e1():
    code, out = run(["gb", "--reduced", E1])
    assert code == 0
    payload = json.loads(out)
    assert payload["flavor"] == "reduced"
    assert payload["polys"] == ["x1^2 - x1", "x1*x2", "x2^2 - x2"]


def test_stdmon_e2():
    code, out = run(["stdmon", E2])
    assert code == 0
    assert json.loads(out) == ["1", "x1", "x2", "x3"]


def test_verify_e1_e2():
    for path in (E1, E2):
        code, out = run(["verify", path])
        payload = json.loads(out)
        assert payload["ok"] and code == 0
        assert all(c["pass"] for c in payload["checks"])


def test_specialize_flags():
    code, out = run(["specialize", E2, "--alpha", "1,0", "--level", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["stable"] is True
    assert payload["fiberGBMatch"] is True


def test_error_object_on_bad_input(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(
        {"field": "Q", "n": 2, "points": [["0", "0"], ["0", "0"]]}))
    code, out = run(["gb", str(bad)])
    assert code == 1
    payload = json.loads(out)
    assert payload["error"]["type"] == "DuplicatePoint"


def test_error_object_on_nonprime_modulus(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": "Fp:6", "n": 1, "points": [["0"]]}))
    code, out = run(["gb", str(bad)])
    assert code == 1
    assert json.loads(out)["error"]["type"] == "NonPrimeModulus"


def test_verify_exit_code_is_zero_only_when_green():
    code, _ = run(["verify", E2])
    assert code == 0


def test_bench_csv_shape(tmp_path):
    code, out = run(["bench", E1, "--repeat", "2", "--random", "1",
                     "--seed", "3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "instance,method,seconds,basis_size"
    assert len(lines) == 1 + 2 * 2  # two instances, two methods
    for line in lines[1:]:
        name, method, seconds, size = line.split(",")
        assert method in ("construction", "buchberger_moller")
        float(seconds)
        assert int(size) >= 1


def test_jobs_flag_matches_serial():
    _, serial = run(["gb", E2])
    _, parallel = run(["gb", "--jobs", "2", E2])
    assert serial == parallel


def test_runs_are_byte_identical():
    for args in (["gb", E2], ["gb", "--reduced", E2], ["stdmon", E2],
                 ["indices", E2], ["triangular", E2], ["verify", E2],
                 ["specialize", E2, "--alpha", "0", "--level", "1"]):
        a = run(args)
        b = run(args)
        assert a == b


@pytest.mark.parametrize("name,args", [
    ("e1_gb.json", ["gb", E1]),
    ("e1_gb_reduced.json", ["gb", "--reduced", E1]),
    ("e1_stdmon.json", ["stdmon", E1]),
    ("e1_indices.json", ["indices", E1]),
    ("e1_triangular.json", ["triangular", E1]),
    ("e2_gb.json", ["gb", E2]),
    ("e2_gb_reduced.json", ["gb", "--reduced", E2]),
    ("e2_stdmon.json", ["stdmon", E2]),
    ("e2_indices.json", ["indices", E2]),
    ("e2_triangular.json", ["triangular", E2]),
])
def test_golden_outputs(name, args):
    code, out = run(args)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_parser_rejects_unknown_subcommand(capsys):
    with pytest.raises(SystemExit):
        build_parser().parse_args(["frobnicate", "x.json"])


def test_main_entry_point():
    assert main(["stdmon", E1]) == 0
