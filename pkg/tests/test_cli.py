import json
import subprocess
import sys

import pytest

from radmoments.cli import main
from radmoments.exact import ExactValue
from radmoments.hydrogen import HydrogenState
from radmoments.oracle import hydrogen_expval_oracle
from radmoments.oscillator import OscillatorState, expval_closed
from radmoments.records import CSV_HEADER, OutputRecord, parse_csv, parse_json, render_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def json_records(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return parse_json(out)


class TestHo:
    def test_virial(self, capsys):
        (rec,) = json_records(capsys, "ho", "--dim", "3", "--N", "2", "--K", "0", "--p", "2", "--method", "closed")
        assert rec.exact == ExactValue.parse("7/2")
        assert rec.float == "3.5"

    def test_inverse_square(self, capsys):
        (rec,) = json_records(capsys, "ho", "--dim", "3", "--N", "2", "--K", "0", "--p", "-2")
        assert rec.exact == ExactValue(2)

    def test_parity_violation(self, capsys):
        code, _, err = run(capsys, "ho", "--dim", "3", "--N", "1", "--K", "0", "--p", "0")
        assert code == 2
        assert "N-K must be even" in err

    def test_divergent(self, capsys):
        code, _, err = run(capsys, "ho", "--dim", "3", "--N", "2", "--K", "0", "--p", "-3")
        assert code == 3

    @pytest.mark.parametrize("method", ["closed", "dual-hahn", "recurrence", "inversion", "oracle-exact"])
    def test_methods_agree(self, capsys, method):
        ps = [-1, 0, 1, 3]
        recs = json_records(capsys, "ho", "--dim", "4", "--N", "5", "--K", "1", "--p", *map(str, ps), "--method", method)
        state = OscillatorState(4, 5, 1)
        assert [r.exact for r in recs] == [expval_closed(state, p) for p in ps]
        assert all(r.method == method for r in recs)

    def test_paper_literal_flagged(self, capsys):
        recs = json_records(
            capsys, "ho", "--dim", "3", "--N", "2", "--K", "0", "--p", "4", "--method", "recurrence", "--mode", "paper-literal"
        )
        assert recs[0].exact == ExactValue.parse("73/4")
        assert "paper-literal-mode" in recs[0].flags

    def test_nonphysical_flag(self, capsys):
        (rec,) = json_records(capsys, "ho", "--dim", "1", "--N", "2", "--K", "2", "--p", "2")
        assert rec.flags == ("nonphysical-hyperangular",)

    def test_real_power(self, capsys):
        code, out, _ = run(capsys, "ho", "--dim", "3", "--N", "0", "--K", "0", "--p-real", "-1.5", "--format", "json")
        (d,) = json.loads(out)
        assert "exact" not in d
        assert abs(float(d["float"]) - 1.3827346780725864) < 1e-14

    def test_float_only(self, capsys):
        (rec,) = json_records(capsys, "ho", "--dim", "3", "--N", "0", "--K", "0", "--p", "1", "--float-only")
        assert rec.exact is None and rec.float == "1.1283791670955126"

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "ho", "--dim", "3", "--N", "2", "--K", "0", "--p", "4")
        assert out == "ho n=3 N=2 K=0 p=4 closed exact=75/4 float=18.75\n"


class TestHydrogen:
    def test_inverse_r(self, capsys):
        (rec,) = json_records(capsys, "hydrogen", "--n", "1", "--l", "0", "--power", "-1")
        assert rec.exact == ExactValue(1)

    def test_inverse_square(self, capsys):
        (rec,) = json_records(capsys, "hydrogen", "--n", "2", "--l", "1", "--power", "-2")
        assert rec.exact == ExactValue.parse("1/12")
        assert rec.flags == ()

    def test_paper_literal(self, capsys):
        (rec,) = json_records(capsys, "hydrogen", "--n", "2", "--l", "1", "--power", "-2", "--mode", "paper-literal")
        assert rec.exact == ExactValue.parse("1/4")
        assert rec.flags == ("paper-literal-mode",)

    def test_boundary(self, capsys):
        code, _, _ = run(capsys, "hydrogen", "--n", "2", "--l", "1", "--power", "-5")
        assert code == 3
        code, _, _ = run(capsys, "hydrogen", "--n", "2", "--l", "2", "--power", "1")
        assert code == 2

    def test_rational_units(self, capsys):
        (rec,) = json_records(capsys, "hydrogen", "--n", "2", "--l", "1", "--Z", "2", "--a0", "1/3", "--power", "1")
        assert rec.exact == ExactValue.parse("5/6")
        assert rec.state == {"n": "2", "l": "1", "Z": "2", "a0": "1/3"}

    @pytest.mark.parametrize("method", ["closed", "recurrence", "oracle-exact"])
    def test_methods(self, capsys, method):
        powers = [-4, -3, -1, 0, 1, 2]
        recs = json_records(capsys, "hydrogen", "--n", "3", "--l", "1", "--power", *map(str, powers), "--method", method)
        state = HydrogenState(3, 1)
        assert [r.exact for r in recs] == [ExactValue(hydrogen_expval_oracle(state, q)) for q in powers]


class TestTable:
    def test_ho_csv(self, tmp_path, capsys):
        out = tmp_path / "ho.csv"
        assert main(["table", "ho", "--dim", "3", "--N", "0", "--K", "0", "--p-min", "0", "--p-max", "4", "--out", str(out)]) == 0
        raw = out.read_bytes()
        assert b"\r\n" not in raw
        rows = parse_csv(raw.decode("utf-8"))
        assert raw.decode().splitlines()[0] == ",".join(CSV_HEADER)
        assert [(r["num"], r["den"], r["sqrtpi_exp"]) for r in rows] == [
            ("1", "1", "0"), ("2", "1", "-1"), ("3", "2", "0"), ("4", "1", "-1"), ("15", "4", "0"),
        ]

    def test_hydrogen_json(self, tmp_path):
        out = tmp_path / "h.json"
        args = ["table", "hydrogen", "--n", "2", "--l", "1", "--p-min", "1", "--p-max", "2", "--out", str(out), "--format", "json"]
        assert main(args) == 0
        assert [str(r.exact) for r in parse_json(out.read_text())] == ["5", "30"]

    def test_empty_range(self, tmp_path):
        out = tmp_path / "empty.csv"
        assert main(["table", "ho", "--dim", "3", "--N", "0", "--K", "0", "--p-min", "2", "--p-max", "1", "--out", str(out)]) == 0
        assert out.read_text() == ",".join(CSV_HEADER) + "\n"

    def test_unwritable(self, tmp_path, capsys):
        out = tmp_path / "missing" / "x.csv"
        assert main(["table", "ho", "--dim", "3", "--N", "0", "--K", "0", "--p-min", "0", "--p-max", "1", "--out", str(out)]) == 4

    def test_csv_and_json_agree(self, tmp_path):
        base = ["table", "ho", "--dim", "5", "--N", "6", "--K", "2", "--p-min", "-5", "--p-max", "8"]
        main(base + ["--out", str(tmp_path / "a.csv")])
        main(base + ["--out", str(tmp_path / "a.json"), "--format", "json"])
        rows = parse_csv((tmp_path / "a.csv").read_text())
        recs = parse_json((tmp_path / "a.json").read_text())
        assert [(r["num"], r["den"], r["sqrtpi_exp"]) for r in rows] == [
            tuple(rec.exact.to_fields()[k] for k in ("num", "den", "sqrtpi_exp")) for rec in recs
        ]


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "ho", "--dim", "4", "--N", "6", "--K", "2", "--p", "-3", "0", "5", "--format", "json")
    assert render_json(parse_json(out)) == out
    for line in out.strip("[]\n").split(",\n"):
        assert OutputRecord.from_json(line).to_json() == line


class TestVerify:
    def test_trivial_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--p-range", "0..0", "--dim-max", "3", "--N-max", "4", "--hydrogen-n-max", "2")
        assert code == 0
        assert "RESULT: PASS" in out

    def test_report_is_deterministic(self, capsys):
        args = ("verify", "--dim-max", "2", "--N-max", "3", "--p-range=-2..3", "--hydrogen-n-max", "2")
        _, a, _ = run(capsys, *args)
        _, b, _ = run(capsys, *args, "--jobs", "2")
        strip = lambda s: [line for line in s.splitlines() if not line.startswith("elapsed")]  # noqa: E731
        assert strip(a) == strip(b)

    def test_witness_listed(self, capsys):
        _, out, _ = run(capsys, "verify", "--dim-max", "1", "--N-max", "0", "--hydrogen-n-max", "1")
        expected = out.split("expected discrepancies:")[1].split("unexpected failures")[0]
        assert "printed=73/4 closed=75/4 oracle=75/4" in expected
        assert "printed=1/4 consistent=1/12 oracle=1/12" in expected


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "radmoments", "hydrogen", "--n", "2", "--l", "1", "--power", "2"],
        capture_output=True, text=True, check=True,
    )
    assert "exact=30" in proc.stdout
