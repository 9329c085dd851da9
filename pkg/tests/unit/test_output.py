import numpy as np
import pytest

from inflation.exceptions import InvalidParameterError
from inflation.output.svg import scatter_svg
from inflation.output.tables import CsvTable, TableWriter, format_cell


@pytest.fixture()
def table():
    return CsvTable.from_records(
        ["m", "log_lambda", "N", "mean"],
        [
            {"m": 1, "log_lambda": 0.48121182505960347, "N": 6, "mean": 0.4390},
            {"m": 2, "log_lambda": 0.6931471805599453, "N": None, "mean": None},
        ],
    )


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, "3"),
        (np.int64(18), "18"),
        (1.0, "1"),
        (0.48121182505960347, "0.481212"),
        (np.float64(1.5e-7), "1.5e-07"),
        (True, "true"),
        (None, ""),
        (complex(1, -1), "1-1j"),
        ("ok", "ok"),
    ],
)
def test_format_cell(value, expected):
    assert format_cell(value) == expected


def test_to_csv(table):
    assert table.to_csv() == "m,log_lambda,N,mean\n1,0.481212,6,0.439\n2,0.693147,,\n"


def test_parse_keeps_cells(table):
    parsed = CsvTable.parse(table.to_csv())
    assert parsed == table
    assert parsed.column("N") == ("6", "")


def test_rows_must_be_rectangular():
    with pytest.raises(InvalidParameterError):
        CsvTable(("a", "b"), (("1",),))


def test_writer_returns_text_without_path(table):
    result = TableWriter().write(table)
    assert result["success"]
    assert result["data"].startswith("m,log_lambda")


def test_writer_creates_file(table, tmp_path):
    path = tmp_path / "nested" / "table1.csv"
    result = TableWriter(str(path)).write(table)
    assert result["success"]
    assert result["data"] == ""
    assert path.read_text(encoding="utf-8") == table.to_csv()


def test_writer_reports_os_errors(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    result = TableWriter(str(blocker / "out.csv")).write("texto\n")
    assert not result["success"]
    assert result["message"] == "Error escribiendo archivo"


def test_scatter_svg():
    svg = scatter_svg([1, 2, 3], [0.4, 0.6, 0.8], [1.1, 1.2, 1.3], title="m(q_m)")
    assert svg.startswith("<svg")
    assert svg.count("<circle") == 3
    assert svg.count("<path") == 3
    assert "<title>m(q_m)</title>" in svg


def test_scatter_svg_needs_matching_series():
    with pytest.raises(ValueError):
        scatter_svg([1, 2], [0.1], [0.2, 0.3])
    with pytest.raises(ValueError):
        scatter_svg([], [], [])
