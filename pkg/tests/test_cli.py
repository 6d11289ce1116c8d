import csv
import json
import math

import pytest

from thermoarrow import __version__
from thermoarrow.cli import build_parser, main


def read_csv(path):
    with open(path, newline="") as f:
        return list(csv.reader(f))


class TestHeatmap:
    def test_writes_three_grids_and_manifest(self, tmp_path):
        out = tmp_path / "hm"
        assert main(["heatmap", "--resolution", "5", "--out", str(out)]) == 0
        for name in ("heat_A.csv", "heat_B.csv", "heat_C.csv"):
            rows = read_csv(out / name)
            assert rows[0] == ["t", "s", "q"]
            assert len(rows) == 26
        manifest = json.loads((out / "heatmap_manifest.json").read_text())
        assert manifest["command"] == "heatmap"
        assert manifest["version"] == __version__
        assert manifest["outputs"] == ["heat_A.csv", "heat_B.csv", "heat_C.csv"]
        assert manifest["parameters"]["resolution"] == 5
        assert manifest["parameters"]["state"] == "entangled"

    def test_lf_line_endings_and_numeric_format(self, tmp_path):
        out = tmp_path / "hm"
        main(["heatmap", "--resolution", "3", "--out", str(out)])
        raw = (out / "heat_A.csv").read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")
        rows = read_csv(out / "heat_A.csv")
        # values round-trip through repr-precision decimal text
        assert float(rows[-1][0]) == 2 * math.pi

    def test_product_state_nonnegative_q_a(self, tmp_path):
        out = tmp_path / "hm"
        main(["heatmap", "--state", "product", "--resolution", "9", "--out", str(out)])
        rows = read_csv(out / "heat_A.csv")[1:]
        assert all(float(r[2]) >= -1e-9 for r in rows)

    def test_workers_do_not_change_bytes(self, tmp_path):
        a, b = tmp_path / "w1", tmp_path / "w8"
        main(["heatmap", "--resolution", "7", "--workers", "1", "--out", str(a)])
        main(["heatmap", "--resolution", "7", "--workers", "8", "--out", str(b)])
        for name in ("heat_A.csv", "heat_B.csv", "heat_C.csv"):
            assert (a / name).read_bytes() == (b / name).read_bytes()

    def test_rerun_reproduces_bytes(self, tmp_path):
        a, b = tmp_path / "r1", tmp_path / "r2"
        main(["heatmap", "--resolution", "6", "--out", str(a)])
        main(["heatmap", "--resolution", "6", "--out", str(b)])
        assert (a / "heat_A.csv").read_bytes() == (b / "heat_A.csv").read_bytes()

    def test_invalid_parameters_exit_2(self, tmp_path, capsys):
        code = main(["heatmap", "--gamma", "0.9", "--out", str(tmp_path / "x")])
        assert code == 2
        assert "error:" in capsys.readouterr().err


class TestDeltaq:
    def test_columns_and_violation_flags(self, tmp_path):
        out = tmp_path / "dq"
        assert main(["deltaq", "--resolution", "21", "--out", str(out)]) == 0
        rows = read_csv(out / "deltaq.csv")
        assert rows[0] == ["t", "s", "delta_q_a", "violation"]
        assert len(rows) == 1 + 21 * 21
        assert {r[3] for r in rows[1:]} <= {"0", "1"}

    def test_s_zero_column_never_violates(self, tmp_path):
        out = tmp_path / "dq"
        main(["deltaq", "--s-max", "0", "--resolution", "15", "--out", str(out)])
        rows = read_csv(out / "deltaq.csv")[1:]
        assert all(r[3] == "0" for r in rows)

    def test_full_grid_has_violations(self, tmp_path):
        out = tmp_path / "dq"
        main(["deltaq", "--resolution", "101", "--workers", "4", "--out", str(out)])
        rows = read_csv(out / "deltaq.csv")[1:]
        assert sum(r[3] == "1" for r in rows) > 0


class TestWitnessRegion:
    def test_scan_contents(self, tmp_path):
        out = tmp_path / "wr"
        assert main(["witness-region", "--resolution", "0.1", "--out", str(out)]) == 0
        rows = read_csv(out / "witness_region.csv")
        assert rows[0] == ["lambda_a", "lambda_c", "gamma", "mutual_info", "capable"]
        bell = [r for r in rows[1:] if r[0] == "0.5" and r[1] == "0.5" and r[2] == "1"]
        assert len(bell) == 1
        assert abs(float(bell[0][3]) - 2 * math.log(2)) < 1e-12
        assert bell[0][4] == "1"

    def test_invalid_resolution_exit_2(self, tmp_path):
        assert main(["witness-region", "--resolution", "0", "--out", str(tmp_path / "x")]) == 2


class TestWalk:
    def test_columns_and_length(self, tmp_path):
        out = tmp_path / "walk"
        code = main(
            ["walk", "--steps", "500", "--seed", "4", "--constrained", "true", "--out", str(out)]
        )
        assert code == 0
        rows = read_csv(out / "walk.csv")
        assert rows[0] == ["step", "lambda_a", "lambda_b", "lambda_c", "region", "accepted"]
        assert len(rows) == 502
        assert rows[1][0] == "0" and rows[1][5] == "1"
        assert rows[1][4] == "I"

    def test_energy_conserved_in_output(self, tmp_path):
        out = tmp_path / "walk"
        main(["walk", "--steps", "300", "--out", str(out)])
        rows = read_csv(out / "walk.csv")[1:]
        initial_total = sum(float(x) for x in rows[0][1:4])
        assert abs(initial_total - 0.65) < 1e-12  # default lambdas 0.15, 0.2, 0.3
        for r in rows:
            total = sum(float(x) for x in r[1:4])
            assert abs(total - initial_total) < 1e-10

    def test_seed_reproducibility(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        main(["walk", "--steps", "200", "--seed", "9", "--out", str(a)])
        main(["walk", "--steps", "200", "--seed", "9", "--out", str(b)])
        assert (a / "walk.csv").read_bytes() == (b / "walk.csv").read_bytes()

    def test_invalid_initial_exit_2(self, tmp_path):
        code = main(["walk", "--lambda-a", "0.55", "--steps", "10", "--out", str(tmp_path / "x")])
        assert code == 2


class TestPolytope:
    def test_vertices_and_mesh(self, tmp_path):
        out = tmp_path / "poly"
        assert main(["polytope", "--energy", "1.0", "--resolution", "4", "--out", str(out)]) == 0
        rows = read_csv(out / "polytope.csv")
        assert rows[0] == ["kind", "lambda_1", "lambda_2", "lambda_3"]
        kinds = [r[0] for r in rows[1:]]
        assert kinds.count("polytope_vertex") == 5
        assert kinds.count("slice_vertex") == 3
        assert kinds.count("slice_edge") == 12
        for r in rows[1:]:
            if r[0] != "polytope_vertex":
                assert abs(sum(float(x) for x in r[1:]) - 1.0) < 1e-12

    def test_resolution_one_skips_mesh(self, tmp_path):
        out = tmp_path / "poly"
        main(["polytope", "--resolution", "1", "--out", str(out)])
        kinds = [r[0] for r in read_csv(out / "polytope.csv")[1:]]
        assert "slice_edge" not in kinds

    def test_out_of_range_energy_exit_2(self, tmp_path):
        assert main(["polytope", "--energy", "3.0", "--out", str(tmp_path / "x")]) == 2


class TestCheck:
    def test_report_written_and_passes(self, tmp_path, capsys):
        out = tmp_path / "check"
        code = main(["check", "--trials", "30", "--out", str(out)])
        assert code == 0
        report = json.loads((out / "check_report.json").read_text())
        assert report["all_pass"]
        printed = capsys.readouterr().out
        for name in report["checks"]:
            assert f"{name}: pass" in printed

    def test_manifest_records_seed(self, tmp_path):
        out = tmp_path / "check"
        main(["check", "--trials", "14", "--seed", "5", "--out", str(out)])
        manifest = json.loads((out / "check_manifest.json").read_text())
        assert manifest["seed"] == 5
        assert manifest["parameters"]["trials"] == 14


class TestParser:
    def test_all_subcommands_registered(self):
        parser = build_parser()
        text = parser.format_help()
        for name in ("heatmap", "deltaq", "witness-region", "walk", "polytope", "check"):
            assert name in text

    def test_out_required(self, capsys):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["heatmap"])
