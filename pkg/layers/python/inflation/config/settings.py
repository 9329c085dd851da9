from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional, Tuple

from inflation.config.parameter import get_parameter, thread_count
from inflation.exceptions import InvalidParameterError

OUTPUT_FORMATS = ("csv", "svg", "text")


@dataclass(frozen=True)
class RunConfig:
    """
    Parámetros de una ejecución.

    Los valores por defecto son los de las corridas completas; las pruebas
    usan tamaños reducidos.
    """

    m: Optional[int] = None
    m_range: Optional[Tuple[int, int]] = None
    n: int = 100_000
    samples: int = 100
    resolution: int = 2048
    radius: float = 10_000.0
    seed: int = 1
    tol: float = 1e-3
    fmt: str = "csv"
    out: Optional[str] = None
    u0: complex = 1.0
    u1: complex = 1.0
    max_distance: float = 100.0
    interior: float = 100.0
    letters: int = 64
    limits: bool = False
    threads: int = 1

    @classmethod
    def from_event(cls, event: Dict[str, Any]) -> RunConfig:
        """
        Construye la configuración a partir de un evento (dict).

        Args:
            event: Campos de RunConfig; las claves desconocidas se ignoran

        Returns:
            RunConfig: Configuración validada
        """
        names = {f.name for f in fields(cls)}
        values = {key: value for key, value in event.items() if key in names and value is not None}
        if "m_range" in values:
            values["m_range"] = parse_range(values["m_range"])
        if "seed" not in values:
            values["seed"] = get_parameter("SEED", 1, int)
        if "threads" not in values:
            values["threads"] = thread_count()
        config = cls(**values)
        config.validate()
        return config

    def validate(self) -> None:
        if self.m is not None and int(self.m) < 1:
            raise InvalidParameterError(f"m debe ser >= 1, recibido {self.m}")
        if self.m_range is not None:
            lo, hi = self.m_range
            if lo < 1 or hi < lo:
                raise InvalidParameterError(f"Rango inválido: {lo}:{hi}")
        for name in ("n", "samples", "resolution", "radius", "tol", "max_distance", "interior", "letters", "threads"):
            if getattr(self, name) <= 0:
                raise InvalidParameterError(f"{name} debe ser positivo")
        if self.seed < 0 or self.seed >= 2**64:
            raise InvalidParameterError("seed debe ser un entero de 64 bits sin signo")
        if self.fmt not in OUTPUT_FORMATS:
            raise InvalidParameterError(f"Formato inválido. Permitidos: {', '.join(OUTPUT_FORMATS)}")

    def with_overrides(self, **changes: Any) -> RunConfig:
        config = replace(self, **changes)
        config.validate()
        return config

    def m_values(self) -> range:
        """Valores de m a recorrer: el rango si existe, si no el m único."""
        if self.m_range is not None:
            return range(self.m_range[0], self.m_range[1] + 1)
        if self.m is not None:
            return range(self.m, self.m + 1)
        raise InvalidParameterError("Se requiere --m o --range")


def parse_range(value: Any) -> Tuple[int, int]:
    """Acepta "a:b", "a", (a, b) o [a, b]."""
    try:
        if isinstance(value, str):
            parts = value.split(":")
            if len(parts) == 1:
                lo = hi = int(parts[0])
            elif len(parts) == 2:
                lo, hi = int(parts[0]), int(parts[1])
            else:
                raise ValueError(value)
        else:
            lo, hi = (int(v) for v in value)
    except (TypeError, ValueError) as e:
        raise InvalidParameterError(f"Rango inválido: {value!r}") from e
    return lo, hi
