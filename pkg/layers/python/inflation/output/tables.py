from __future__ import annotations

import io
import numbers
import os
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple, Union

import pandas as pd

from inflation.exceptions import InvalidParameterError
from inflation.logger import get_logger


def format_cell(value: Any) -> str:
    """Enteros tal cual, reales con 6 cifras significativas, el resto como texto."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return "%.6g" % float(value)
    if isinstance(value, numbers.Complex):
        return "%.6g%+.6gj" % (value.real, value.imag)
    return str(value)


@dataclass(frozen=True)
class CsvTable:
    """Tabla rectangular de celdas ya formateadas."""

    header: Tuple[str, ...]
    rows: Tuple[Tuple[str, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "header", tuple(str(h) for h in self.header))
        object.__setattr__(self, "rows", tuple(tuple(str(c) for c in row) for row in self.rows))
        width = len(self.header)
        for row in self.rows:
            if len(row) != width:
                raise InvalidParameterError(f"Fila de ancho {len(row)}, se esperaban {width} columnas")

    @classmethod
    def from_records(cls, header: Sequence[str], records: Iterable[Union[Dict[str, Any], Sequence[Any]]]) -> CsvTable:
        rows = []
        for record in records:
            cells = [record.get(h) for h in header] if isinstance(record, dict) else list(record)
            rows.append(tuple(format_cell(c) for c in cells))
        return cls(tuple(header), tuple(rows))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(list(self.rows), columns=list(self.header), dtype=str)

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator="\n")

    @classmethod
    def parse(cls, text: str) -> CsvTable:
        frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
        return cls(tuple(frame.columns), tuple(tuple(row) for row in frame.itertuples(index=False, name=None)))

    def column(self, name: str) -> Tuple[str, ...]:
        index = self.header.index(name)
        return tuple(row[index] for row in self.rows)


class TableWriter:
    """Escribe tablas o texto en un archivo UTF-8, o los devuelve para stdout."""

    def __init__(self, path: Optional[str] = None):
        """
        Inicializa el escritor.

        Args:
            path (str, optional): Ruta de salida; None significa stdout
        """
        self.path = path
        self.logger = get_logger("table_writer")

    def render(self, content: Union[CsvTable, str]) -> str:
        return content.to_csv() if isinstance(content, CsvTable) else content

    def write(self, content: Union[CsvTable, str]) -> Dict[str, Any]:
        """
        Escribe el contenido.

        Args:
            content: CsvTable o texto ya generado

        Returns:
            Dict: {'success', 'message', 'data'} con el texto cuando no hay ruta
        """
        text = self.render(content)
        if self.path is None:
            return {"success": True, "message": "Salida a stdout", "data": text}
        try:
            directory = os.path.dirname(self.path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(self.path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
            self.logger.info("Archivo escrito", extra={"path": self.path, "bytes": len(text.encode("utf-8"))})
            return {"success": True, "message": f"Escrito en {self.path}", "data": ""}
        except OSError as e:
            self.logger.error("Error escribiendo archivo", extra={"path": self.path, "error": str(e)})
            return {"success": False, "message": "Error escribiendo archivo", "error": str(e)}
