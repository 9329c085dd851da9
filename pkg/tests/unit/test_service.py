import pytest

from inflation.config.settings import RunConfig
from inflation.output.tables import CsvTable
from inflation.services.responses import build_response
from inflation.services.spectral_service import SpectralService


@pytest.fixture()
def service():
    return SpectralService()


def test_classify(service):
    result = service.classify(RunConfig(m_range=(1, 3)))
    assert result["success"]
    assert result["data"]["content"] == "Fibonacci, λ≈1.618034\nIntegerMultiplier ℓ=1, λ=2\nNonPV, λ≈2.302776\n"
    assert result["data"]["content_type"] == "text/plain"


def test_classify_needs_m(service):
    result = service.classify(RunConfig())
    assert not result["success"]
    assert result["error_code"] == "INVALID_DATA"


def test_eigen_csv(service):
    result = service.eigen(RunConfig(m_range=(2, 3)))
    table = result["data"]["content"]
    assert isinstance(table, CsvTable)
    assert table.column("m") == ("2", "3")
    assert table.column("lambda_plus")[0] == "2"
    assert table.column("nu0")[0] == "0.5"


def test_eigen_text(service):
    result = service.eigen(RunConfig(m=6, fmt="text"))
    lines = result["data"]["content"].splitlines()
    assert lines[0].split() == ["m", "lambda_plus", "lambda_minus", "nu0", "nu1", "log_lambda", "density"]
    assert lines[1].split()[:3] == ["6", "3", "-2"]


def test_fixed_point(service):
    result = service.fixed_point(RunConfig(m=1, letters=10))
    left, right = result["data"]["content"].strip().split("|")
    assert right.startswith("01001")
    assert left.endswith("0")


def test_fixed_point_needs_m(service):
    assert service.fixed_point(RunConfig(m_range=(1, 2)))["error_code"] == "INVALID_DATA"


def test_report_rejects_zero_weight(service):
    result = service.report(RunConfig(m=3, u1=0))
    assert result["error_code"] == "INVALID_DATA"


def test_report_pure_point(service):
    result = service.report(RunConfig(m=2, fmt="csv"))
    assert result["success"]
    table = result["data"]["content"]
    assert dict(table.rows)["verdict"] == "pure point (integer multiplier, ℓ=1)"


def test_table1_unconverged_keeps_rows(service):
    result = service.table1(RunConfig(m_range=(18, 18), resolution=32, tol=1e-12, threads=1))
    assert not result["success"]
    assert result["error_code"] == "NON_CONVERGENCE"
    assert result["data"]["content"].column("m") == ("18",)


def test_invalid_numeric_parameter_maps_to_invalid_data(service):
    result = service.mahler(RunConfig(m_range=(0, 2)))
    assert result["error_code"] == "INVALID_DATA"


def test_paircorr_residual_row(service):
    result = service.paircorr(RunConfig(m=2, radius=500, max_distance=10, interior=5))
    table = result["data"]["content"]
    assert table.rows[-1][0] == "residual"
    assert float(table.rows[-1][-1]) < 5e-2


def test_build_response_success():
    response = build_response({"success": True, "message": "ok", "data": {"content": "x\n", "content_type": "text/plain"}})
    assert response == {"exit_code": 0, "body": "x\n", "content_type": "text/plain", "message": "ok"}


@pytest.mark.parametrize(
    "error_code, exit_code",
    [("INVALID_DATA", 2), ("NON_CONVERGENCE", 3), ("INTERNAL_ERROR", 1), ("SOMETHING_ELSE", 1)],
)
def test_build_response_exit_codes(error_code, exit_code):
    response = build_response({"success": False, "message": "fallo", "error_code": error_code})
    assert response["exit_code"] == exit_code
    assert response["body"] == ""


def test_build_response_keeps_data_on_failure():
    table = CsvTable(("m",), (("18",),))
    result = {
        "success": False,
        "message": "Sin resultado",
        "error_code": "NON_CONVERGENCE",
        "data": {"content": table, "content_type": "text/csv"},
    }
    response = build_response(result)
    assert response["exit_code"] == 3
    assert response["body"] == "m\n18\n"


def test_build_response_writes_file(tmp_path):
    path = tmp_path / "out.txt"
    result = {"success": True, "message": "ok", "data": {"content": "hola\n", "content_type": "text/plain"}}
    response = build_response(result, str(path))
    assert response["body"] == ""
    assert path.read_text(encoding="utf-8") == "hola\n"
