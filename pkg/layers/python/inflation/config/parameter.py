import os
from typing import Any, Callable, Optional

from inflation.exceptions import ConfigurationError

PREFIX = "INFLATION_SPECTRA_"


def get_parameter(
    parameter_name: str,
    default: Optional[Any] = None,
    cast: Callable[[str], Any] = str,
) -> Any:
    """
    Obtiene un parámetro de configuración desde el entorno.

    Los nombres cortos se buscan con el prefijo INFLATION_SPECTRA_
    (por ejemplo "THREADS" lee INFLATION_SPECTRA_THREADS).
    """
    key = parameter_name if parameter_name.startswith(PREFIX) else PREFIX + parameter_name
    raw = os.environ.get(key)
    if raw is None or raw == "":
        return default
    try:
        return cast(raw)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"Error al obtener el parámetro {key}: {str(e)}") from e


def thread_count() -> int:
    """Número de hilos permitido para los pools de trabajo (mínimo 1)."""
    default = min(8, os.cpu_count() or 1)
    value = get_parameter("THREADS", default, int)
    if value < 1:
        raise ConfigurationError(f"Error al obtener el parámetro {PREFIX}THREADS: debe ser >= 1")
    return value
