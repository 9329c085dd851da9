from typing import Any, Callable, Dict, List, Optional

import numpy as np

from inflation.cocycle.means import table1
from inflation.cocycle.products import sample_lyapunov
from inflation.config.settings import RunConfig
from inflation.exceptions import (
    InvalidParameterError,
    NonConvergenceError,
    PathologicalSampleError,
)
from inflation.logger import get_logger
from inflation.mahler.family import (
    bounds_check,
    criterion_thresholds,
    figure1_data,
    perron_root_info,
    two_var_limits,
)
from inflation.mahler.measure import mahler_quadrature, mahler_roots, sin_form_eval
from inflation.mahler.polynomials import q_poly
from inflation.output.svg import scatter_svg
from inflation.output.tables import CsvTable
from inflation.paircorr.correlations import empirical_pair_correlations, renormalization_residual
from inflation.paircorr.diffraction import WeightVector
from inflation.paircorr.report import spectral_report
from inflation.substitution.rules import classify, eigen_data
from inflation.substitution.words import fixed_point

CSV = "text/csv"
SVG = "image/svg+xml"
TEXT = "text/plain"

FIGURE1_DEFAULT_RANGE = (1, 30)
PERRON_M = (3, 4, 5)


class SpectralService:
    """
    Capa de servicio para los cálculos espectrales.
    Implementa la lógica de cada subcomando y actúa como intermediario entre el handler y los módulos numéricos.
    """

    def __init__(self):
        """Inicializa el servicio con su logger."""
        self.logger = get_logger("spectral_service")

    def _validate_range(self, config: RunConfig) -> tuple[bool, Optional[str]]:
        """
        Valida que la configuración indique m o un rango.

        Returns:
            tuple: (es_válido, mensaje_error)
        """
        if config.m is None and config.m_range is None:
            return False, "Se requiere --m o --range"
        return True, None

    def _validate_weights(self, config: RunConfig) -> tuple[bool, Optional[str]]:
        if config.u0 * config.u1 == 0:
            return False, f"Los pesos deben cumplir u0*u1 != 0 (u0={config.u0}, u1={config.u1})"
        return True, None

    def _content(self, content: Any, content_type: str) -> Dict[str, Any]:
        return {"content": content, "content_type": content_type}

    def _execute(self, operation: str, build: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
        """
        Ejecuta una operación y traduce las excepciones a un resultado.

        Args:
            operation: Nombre del subcomando (para los logs)
            build: Función que devuelve el resultado exitoso

        Returns:
            Dict: {'success', 'message', 'data'} o {'success', 'message', 'error_code', 'details'}
        """
        try:
            result = build()
            self.logger.info("Operación completada", extra={"operation": operation})
            return result
        except InvalidParameterError as e:
            self.logger.warning("Parámetros inválidos", extra={"operation": operation, "error": str(e)})
            return {"success": False, "message": str(e), "error_code": "INVALID_DATA"}
        except (NonConvergenceError, PathologicalSampleError) as e:
            self.logger.error("Sin convergencia numérica", extra={"operation": operation, "error": str(e)})
            return {"success": False, "message": str(e), "error_code": "NON_CONVERGENCE"}
        except Exception as e:
            self.logger.exception("Error inesperado", extra={"operation": operation, "error": str(e)})
            return {
                "success": False,
                "message": "Error interno",
                "error_code": "INTERNAL_ERROR",
                "details": str(e),
            }

    def _invalid(self, message: str) -> Dict[str, Any]:
        self.logger.warning("Datos inválidos", extra={"error": message})
        return {"success": False, "message": message, "error_code": "INVALID_DATA"}

    def classify(self, config: RunConfig) -> Dict[str, Any]:
        """
        Clase espectral y λ de cada m.

        Returns:
            Dict: Texto "IntegerMultiplier ℓ=2, λ=3" por línea
        """
        is_valid, error_message = self._validate_range(config)
        if not is_valid:
            return self._invalid(error_message)

        def build() -> Dict[str, Any]:
            lines = []
            for m in config.m_values():
                lam = eigen_data(m).lambda_plus
                lam_text = f"λ={int(lam)}" if lam.is_integer() else f"λ≈{lam:.6f}"
                lines.append(f"{classify(m)}, {lam_text}")
            return {
                "success": True,
                "message": "Clasificación calculada",
                "data": self._content("\n".join(lines) + "\n", TEXT),
            }

        return self._execute("classify", build)

    def eigen(self, config: RunConfig) -> Dict[str, Any]:
        is_valid, error_message = self._validate_range(config)
        if not is_valid:
            return self._invalid(error_message)

        def build() -> Dict[str, Any]:
            header = ("m", "lambda_plus", "lambda_minus", "nu0", "nu1", "log_lambda", "density")
            records = []
            for m in config.m_values():
                data = eigen_data(m)
                records.append(
                    (m, data.lambda_plus, data.lambda_minus, data.freq[0], data.freq[1], data.log_lambda, data.density)
                )
            table = CsvTable.from_records(header, records)
            return {"success": True, "message": "Datos propios calculados", "data": self._tabular(table, config)}

        return self._execute("eigen", build)

    def fixed_point(self, config: RunConfig) -> Dict[str, Any]:
        """Ventana central del punto fijo de ρ_m² con semilla 0|0, como "izquierda|derecha"."""
        if config.m is None:
            return self._invalid("Se requiere --m")

        def build() -> Dict[str, Any]:
            word = fixed_point(config.m, config.letters)
            return {"success": True, "message": "Punto fijo generado", "data": self._content(f"{word}\n", TEXT)}

        return self._execute("fixed_point", build)

    def table1(self, config: RunConfig) -> Dict[str, Any]:
        """
        Búsqueda del N mínimo con log λ > media, por m.

        Returns:
            Dict: Tabla m, log_lambda, N, mean, error_estimate, status; NON_CONVERGENCE
            si algún m no se resolvió (la tabla se devuelve igualmente en 'data')
        """
        is_valid, error_message = self._validate_range(config)
        if not is_valid:
            return self._invalid(error_message)

        def build() -> Dict[str, Any]:
            m_values = config.m_values()
            rows = table1(m_values[0], m_values[-1], config.resolution, config.tol, config.threads)
            header = ("m", "log_lambda", "N", "mean", "error_estimate", "status")
            data = self._tabular(CsvTable.from_records(header, rows), config)
            failed = [row["m"] for row in rows if row["status"] != "ok"]
            if failed:
                self.logger.warning("Filas sin resolver", extra={"m": failed})
                return {
                    "success": False,
                    "message": f"Sin resultado fiable para m={failed}",
                    "error_code": "NON_CONVERGENCE",
                    "data": data,
                }
            return {"success": True, "message": "Tabla calculada", "data": data}

        return self._execute("table1", build)

    def figure1(self, config: RunConfig) -> Dict[str, Any]:
        def build() -> Dict[str, Any]:
            if config.m_range is not None or config.m is not None:
                m_values = config.m_values()
                lo, hi = m_values[0], m_values[-1]
            else:
                lo, hi = FIGURE1_DEFAULT_RANGE
            rows = figure1_data(lo, hi, config.threads)
            if config.fmt == "svg":
                svg = scatter_svg(
                    [r["m"] for r in rows],
                    [r["log_lambda"] for r in rows],
                    [r["m_q"] for r in rows],
                    title=f"log λ y m(q), {lo} ≤ m ≤ {hi}",
                )
                return {"success": True, "message": "Figura generada", "data": self._content(svg, SVG)}
            table = CsvTable.from_records(("m", "log_lambda", "m_q"), rows)
            return {"success": True, "message": "Datos de la figura", "data": self._tabular(table, config)}

        return self._execute("figure1", build)

    def mahler(self, config: RunConfig) -> Dict[str, Any]:
        """
        Medidas de Mahler de q_m por tres métodos y márgenes de las cotas.

        Con limits=True devuelve una tabla cantidad/valor con los límites, los umbrales
        del criterio y los números de Perron para m = 3, 4, 5.
        """
        if not config.limits:
            is_valid, error_message = self._validate_range(config)
            if not is_valid:
                return self._invalid(error_message)

        def build() -> Dict[str, Any]:
            if config.limits:
                table = CsvTable.from_records(("quantity", "value"), self._limit_records(config))
                return {"success": True, "message": "Límites calculados", "data": self._tabular(table, config)}
            header = (
                "m",
                "m_q_roots",
                "m_q_quadrature",
                "m_q_sin_form",
                "log_lambda",
                "margin_sqrt46",
                "margin_3_plus_sqrt5",
                "holds",
            )
            records = []
            for m in config.m_values():
                bounds = bounds_check(m)
                records.append(
                    (
                        m,
                        mahler_roots(q_poly(m)).value,
                        mahler_quadrature(q_poly(m)).value,
                        sin_form_eval(m),
                        eigen_data(m).log_lambda,
                        bounds["margin_sqrt46"],
                        bounds["margin_3_plus_sqrt5"],
                        bounds["holds"],
                    )
                )
            table = CsvTable.from_records(header, records)
            return {"success": True, "message": "Medidas de Mahler calculadas", "data": self._tabular(table, config)}

        return self._execute("mahler", build)

    def _limit_records(self, config: RunConfig) -> List[tuple]:
        limits = two_var_limits()
        records: List[tuple] = [
            ("limit_q", limits["limit_q"]),
            ("limit_s", limits["limit_s"]),
            ("limit_s_grid", limits["limit_s_grid"]),
        ]
        records += [(f"m_r[{m}]", value) for m, value in limits["r_sequence"]]
        records += [(f"threshold_{name}", value) for name, value in criterion_thresholds().items()]
        for m in PERRON_M:
            info = perron_root_info(m)
            records += [
                (f"perron[{m}].poly", str(info.poly)),
                (f"perron[{m}].xi", info.xi),
                (f"perron[{m}].class", info.kind),
                (f"perron[{m}].second_modulus", info.second_modulus),
                (f"perron[{m}].exp_m_q", info.mahler_exp),
            ]
        if config.m is not None:
            records.append((f"m_q[{config.m}]", mahler_roots(q_poly(config.m)).value))
        return records

    def lyapunov(self, config: RunConfig) -> Dict[str, Any]:
        """
        Estimaciones por k muestreado, ordenadas por k, más las filas resumen "mean" y "min".
        """
        if config.m is None:
            return self._invalid("Se requiere --m")

        def build() -> Dict[str, Any]:
            estimates = sorted(
                sample_lyapunov(config.m, config.n, config.samples, config.seed, config.threads),
                key=lambda e: e.k,
            )
            columns = ("chi_b", "chi_min", "chi_max", "chi_min_inverse", "det_average")
            values = np.array([[getattr(e, c) for c in columns] for e in estimates], dtype=np.float64)
            records: List[tuple] = [(e.k, *row) for e, row in zip(estimates, values.tolist())]
            records.append(("mean", *np.mean(values, axis=0).tolist()))
            records.append(("min", *np.min(values, axis=0).tolist()))
            table = CsvTable.from_records(("k",) + columns, records)
            self.logger.info(
                "Resumen de Lyapunov",
                extra={"m": config.m, "chi_min_min": float(np.min(values[:, 1])), "samples": len(estimates)},
            )
            return {"success": True, "message": "Exponentes estimados", "data": self._tabular(table, config)}

        return self._execute("lyapunov", build)

    def paircorr(self, config: RunConfig) -> Dict[str, Any]:
        """Coeficientes ν_ij(z) y, como última fila, el residuo de renormalización."""
        if config.m is None:
            return self._invalid("Se requiere --m")

        def build() -> Dict[str, Any]:
            table = empirical_pair_correlations(config.m, config.radius, config.max_distance)
            residual = renormalization_residual(table, config.m, config.interior)
            records: List[tuple] = [(i, j, str(z), z.to_float(), value) for i, j, z, value in table.rows()]
            records.append(("residual", "", "", config.interior, residual))
            csv = CsvTable.from_records(("i", "j", "z", "z_value", "nu"), records)
            return {"success": True, "message": "Correlaciones calculadas", "data": self._tabular(csv, config)}

        return self._execute("paircorr", build)

    def report(self, config: RunConfig) -> Dict[str, Any]:
        if config.m is None:
            return self._invalid("Se requiere --m")
        is_valid, error_message = self._validate_weights(config)
        if not is_valid:
            return self._invalid(error_message)

        def build() -> Dict[str, Any]:
            result = spectral_report(config.m, WeightVector(config.u0, config.u1), config)
            if config.fmt == "csv":
                table = CsvTable.from_records(("quantity", "value"), result.as_dict().items())
                data = self._content(table, CSV)
            else:
                data = self._content(result.text(), TEXT)
            return {"success": True, "message": result.verdict, "data": data}

        return self._execute("report", build)

    def _tabular(self, table: CsvTable, config: RunConfig) -> Dict[str, Any]:
        if config.fmt == "text":
            widths = [max([len(h)] + [len(row[i]) for row in table.rows]) for i, h in enumerate(table.header)]
            lines = ["  ".join(h.ljust(w) for h, w in zip(table.header, widths))]
            lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in table.rows]
            return self._content("\n".join(line.rstrip() for line in lines) + "\n", TEXT)
        return self._content(table, CSV)
