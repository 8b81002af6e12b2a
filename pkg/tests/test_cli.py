"""End-to-end tests for the command line interface."""

import json

import pytest

from axiq.circuit import Gate
from axiq.cli import main
from axiq.textio import parse


def _build(tmp_path, name, *extra):
    path = tmp_path / name
    rc = main(["build", "--qubits", "4", "--marked", "1111", "-o", str(path), *extra])
    assert rc == 0
    return path


def _native_pair(tmp_path):
    bx = _build(tmp_path, "x.circ")
    by = _build(tmp_path, "y.circ", "--axis", "y")
    nx = tmp_path / "x_native.circ"
    ny = tmp_path / "y_native.circ"
    assert main(["transpile", str(bx), "--passes", "decompose-h-safe", "-o", str(nx)]) == 0
    assert main(["transpile", str(by), "--passes", "expand-x,cancel", "-o", str(ny)]) == 0
    return nx, ny


class TestBuild:
    def test_writes_parseable_circuit(self, tmp_path):
        path = _build(tmp_path, "c.circ", "--measure")
        c = parse(path.read_text())
        assert c.n == 4
        assert c.measure_all
        assert len(c.ops) == 22

    def test_stdout_when_no_output(self, capsys):
        assert main(["build", "--qubits", "2", "--marked", "11"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("qubits 2\n")
        assert "mcz q0 q1 @oraclecore" in out

    def test_domain_error_exits_1(self, capsys):
        rc = main(["build", "--qubits", "3", "--marked", "11"])
        assert rc == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_bad_axis_is_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main(["build", "--qubits", "2", "--marked", "11", "--axis", "z"])
        assert err.value.code == 2

    def test_missing_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2


class TestTranspile:
    def test_removes_h_gates(self, tmp_path):
        src = _build(tmp_path, "c.circ")
        dst = tmp_path / "out.circ"
        assert main(["transpile", str(src), "--passes", "decompose-h-safe", "-o", str(dst)]) == 0
        c = parse(dst.read_text())
        assert c.count(Gate.H) == 0
        assert c.count(Gate.SX) == 12

    def test_unknown_pass_is_usage_error(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        rc = main(["transpile", str(src), "--passes", "decompose-h-safe,nope"])
        assert rc == 2
        err = capsys.readouterr().err
        assert "usage error" in err and "nope" in err

    def test_verbose_logs_sizes_to_stderr(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ", "--axis", "y")
        assert main(["transpile", str(src), "--passes", "expand-x,cancel", "-v"]) == 0
        captured = capsys.readouterr()
        lines = captured.err.strip().splitlines()
        assert lines[0] == "expand-x: 22 -> 30 instructions"
        assert lines[1] == "cancel: 30 -> 22 instructions"
        assert captured.out.startswith("qubits 4\n")

    def test_missing_file_exits_1(self, tmp_path, capsys):
        rc = main(["transpile", str(tmp_path / "absent.circ"), "--passes", "cancel"])
        assert rc == 1
        assert "error:" in capsys.readouterr().err


class TestSimulate:
    def test_tsv_probabilities(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        assert main(["simulate", str(src)]) == 0
        rows = [line.split("\t") for line in capsys.readouterr().out.strip().splitlines()]
        assert [r[0] for r in rows] == sorted(format(i, "04b") for i in range(16))
        assert all(len(r) == 2 for r in rows)
        probs = {r[0]: float(r[1]) for r in rows}
        assert probs["1111"] == pytest.approx(121 / 256, abs=1e-9)
        assert sum(probs.values()) == pytest.approx(1.0, abs=1e-9)

    def test_shots_adds_count_column(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        assert main(["simulate", str(src), "--shots", "100", "--seed", "3"]) == 0
        rows = [line.split("\t") for line in capsys.readouterr().out.strip().splitlines()]
        assert all(len(r) == 3 for r in rows)
        assert sum(int(r[2]) for r in rows) == 100

    def test_bare_shots_flag_means_1024(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        assert main(["simulate", str(src), "--shots"]) == 0
        rows = [line.split("\t") for line in capsys.readouterr().out.strip().splitlines()]
        assert sum(int(r[2]) for r in rows) == 1024

    def test_same_seed_is_deterministic(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        main(["simulate", str(src), "--shots", "500", "--seed", "9"])
        first = capsys.readouterr().out
        main(["simulate", str(src), "--shots", "500", "--seed", "9"])
        assert capsys.readouterr().out == first

    def test_json_schema(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        assert main(["simulate", str(src), "--json", "--shots", "64", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert out.endswith("\n") and out.count("\n") == 1
        obj = json.loads(out)
        assert obj["n"] == 4
        assert obj["shots"] == 64 and obj["seed"] == 1
        assert len(obj["probabilities"]) == 16
        assert sum(obj["counts"].values()) == 64

    def test_json_without_shots_omits_counts(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        assert main(["simulate", str(src), "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert set(obj) == {"n", "probabilities"}

    def test_plot_writes_file(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        png = tmp_path / "dist.png"
        assert main(["simulate", str(src), "--shots", "--plot", str(png)]) == 0
        capsys.readouterr()
        assert png.stat().st_size > 0


class TestCost:
    def test_tsv_report(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        assert main(["cost", str(src)]) == 0
        rows = dict(
            line.split("\t") for line in capsys.readouterr().out.strip().splitlines()
        )
        assert rows["h"] == "12" and rows["mcz"] == "2" and rows["x"] == "8"
        assert rows["total"] == "22"
        assert int(rows["native_total"]) + int(rows["non_native_total"]) == 22

    def test_json_schema(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        assert main(["cost", str(src), "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert set(obj) == {
            "n",
            "total",
            "depth",
            "native_total",
            "non_native_total",
            "wrapper_native_total",
            "per_kind",
        }
        assert obj["per_kind"]["mcz"] == 2
        assert sum(obj["per_kind"].values()) == obj["total"]
        assert obj["native_total"] + obj["non_native_total"] == obj["total"]

    def test_realize_mcz(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        assert main(["cost", str(src), "--json", "--realize-mcz"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert "mcz" not in obj["per_kind"]
        assert obj["per_kind"]["mcx"] == 2

    def test_plot_writes_file(self, tmp_path, capsys):
        src = _build(tmp_path, "c.circ")
        png = tmp_path / "cost.png"
        assert main(["cost", str(src), "--plot", str(png)]) == 0
        capsys.readouterr()
        assert png.stat().st_size > 0


class TestCompare:
    def test_native_variants_match(self, tmp_path, capsys):
        nx, ny = _native_pair(tmp_path)
        assert main(["compare", str(nx), str(ny)]) == 0
        rows = dict(
            line.split("\t") for line in capsys.readouterr().out.strip().splitlines()
        )
        assert float(rows["tvd"]) <= 1e-9
        assert rows["wrapper_native_baseline"] == "44"
        assert rows["wrapper_native_candidate"] == "20"
        assert rows["wrapper_reduction_percent"] == "54.5455"

    def test_tolerance_exceeded_exits_1(self, tmp_path, capsys):
        a = tmp_path / "a.circ"
        b = tmp_path / "b.circ"
        main(["build", "--qubits", "2", "--marked", "11", "-o", str(a)])
        main(["build", "--qubits", "2", "--marked", "00", "-o", str(b)])
        assert main(["compare", str(a), str(b)]) == 1
        rows = dict(
            line.split("\t") for line in capsys.readouterr().out.strip().splitlines()
        )
        assert float(rows["tvd"]) > 0.9

    def test_loose_tolerance_passes(self, tmp_path, capsys):
        a = tmp_path / "a.circ"
        b = tmp_path / "b.circ"
        main(["build", "--qubits", "2", "--marked", "11", "-o", str(a)])
        main(["build", "--qubits", "2", "--marked", "00", "-o", str(b)])
        assert main(["compare", str(a), str(b), "--tolerance", "2.0"]) == 0
        capsys.readouterr()

    def test_tvd_output_is_symmetric(self, tmp_path, capsys):
        nx, ny = _native_pair(tmp_path)

        def tvd_line(first, second):
            main(["compare", str(first), str(second), "--tolerance", "2.0"])
            out = capsys.readouterr().out
            return next(line for line in out.splitlines() if line.startswith("tvd\t"))

        assert tvd_line(nx, ny) == tvd_line(ny, nx)

    def test_zero_baseline_prints_na(self, tmp_path, capsys):
        empty = tmp_path / "empty.circ"
        empty.write_text("qubits 2\n")
        assert main(["compare", str(empty), str(empty)]) == 0
        rows = dict(
            line.split("\t") for line in capsys.readouterr().out.strip().splitlines()
        )
        assert rows["wrapper_reduction_percent"] == "n/a"

    def test_plot_writes_file(self, tmp_path, capsys):
        nx, ny = _native_pair(tmp_path)
        png = tmp_path / "cmp.png"
        assert main(["compare", str(nx), str(ny), "--plot", str(png)]) == 0
        capsys.readouterr()
        assert png.stat().st_size > 0
