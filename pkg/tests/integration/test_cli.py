import json
from pathlib import Path

import pytest

from src.classify import app as classify_app
from src.cli.app import build_event, build_parser, main

EVENTS = Path(__file__).resolve().parents[2] / "events"


class TestCommandLine:

    def test_classify_positional_m(self, capsys):
        assert main(["classify", "6"]) == 0
        assert capsys.readouterr().out == "IntegerMultiplier ℓ=2, λ=3\n"

    def test_eigen_range_as_text(self, capsys):
        assert main(["eigen", "--range", "1:3", "--format", "text"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split()[0] == "m"
        assert [line.split()[0] for line in lines[1:]] == ["1", "2", "3"]

    def test_missing_m_is_invalid(self, capsys):
        assert main(["classify"]) == 2
        assert capsys.readouterr().err.startswith("classify: ")

    def test_unknown_command_and_bad_format(self, capsys):
        assert main(["spectrum", "3"]) == 2
        assert main(["classify", "3", "--format", "xml"]) == 2
        capsys.readouterr()

    def test_build_event(self):
        args = build_parser().parse_args(["report", "3", "--u1", "-1", "--n", "500"])
        assert build_event(args) == {"m": 3, "u1": -1 + 0j, "n": 500}

    def test_fixed_point(self, capsys):
        assert main(["fixed-point", "--m", "1", "--letters", "10"]) == 0
        left, right = capsys.readouterr().out.strip().split("|")
        assert right.startswith("01001")

    def test_figure1_svg_to_file(self, capsys, tmp_path):
        path = tmp_path / "figure1.svg"
        assert main(["figure1", "--range", "1:20", "--format", "svg", "--out", str(path)]) == 0
        assert capsys.readouterr().out == ""
        svg = path.read_text(encoding="utf-8")
        assert svg.count("<circle") == 20

    def test_table1_single_row(self, capsys):
        assert main(["table1", "--range", "18:18", "--resolution", "512", "--tol", "5e-3"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "m,log_lambda,N,mean,error_estimate,status"
        cells = out[1].split(",")
        assert cells[0] == "18"
        assert cells[2] == "1"
        assert cells[-1] == "ok"

    def test_mahler_rows(self, capsys):
        assert main(["mahler", "--range", "1:2"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[1].startswith("1,1.09861,1.09861,1.09861,")
        assert out[2].startswith("2,1.31696,1.31696,1.31696,")
        assert out[2].endswith(",true")

    def test_paircorr_small(self, capsys):
        args = ["paircorr", "2", "--radius", "500", "--max-distance", "10", "--interior", "5"]
        assert main(args) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "i,j,z,z_value,nu"
        assert out[-1].startswith("residual,,,5,")

    def test_lyapunov_small(self, capsys):
        assert main(["lyapunov", "3", "--n", "500", "--samples", "4", "--seed", "3"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "k,chi_b,chi_min,chi_max,chi_min_inverse,det_average"
        assert len(out) == 1 + 4 + 2
        assert out[-2].startswith("mean,")
        assert out[-1].startswith("min,")

    @pytest.mark.parametrize("m, verdict", [(6, "pure point (integer multiplier, ℓ=2)"), (1, "pure point (Fibonacci)")])
    def test_report_pure_point(self, capsys, m, verdict):
        assert main(["report", str(m), "--format", "text"]) == 0
        assert capsys.readouterr().out.splitlines()[-1] == f"verdict: {verdict}"


class TestHandlers:

    @pytest.fixture()
    def classify_event(self):
        return json.loads((EVENTS / "classify.json").read_text(encoding="utf-8"))

    def test_lambda_handler_with_sample_event(self, classify_event):
        response = classify_app.lambda_handler(classify_event, None)
        assert response["exit_code"] == 0
        assert "IntegerMultiplier" in response["body"]

    def test_lambda_handler_rejects_empty_event(self):
        response = classify_app.lambda_handler({}, None)
        assert response["exit_code"] == 2
        assert response["body"] == ""
