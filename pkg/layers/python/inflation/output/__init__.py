from inflation.output.svg import scatter_svg
from inflation.output.tables import CsvTable, TableWriter, format_cell

__all__ = ["CsvTable", "TableWriter", "format_cell", "scatter_svg"]
