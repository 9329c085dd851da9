"""Spectral verdict for a weighted comb: class, Bragg intensity at 0 and the Lyapunov criterion."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from inflation.cocycle.means import table1
from inflation.cocycle.products import chi_min_lower_bound, sample_lyapunov
from inflation.config.settings import RunConfig
from inflation.logger import get_logger
from inflation.mahler.family import m_q
from inflation.paircorr.diffraction import WeightVector, bragg_intensity_zero
from inflation.substitution.rules import SpectralClass, SpectralTag, check_m, classify, eigen_data

logger = get_logger("paircorr")


@dataclass(frozen=True)
class SpectralReport:
    m: int
    spectral_class: SpectralClass
    lambda_value: float
    bragg_zero: float
    verdict: str
    lyapunov: Dict[str, Any] = field(default_factory=dict)
    criterion: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "class": str(self.spectral_class),
            "lambda": self.lambda_value,
            "I0": self.bragg_zero,
            "verdict": self.verdict,
            **{f"lyapunov_{k}": v for k, v in self.lyapunov.items()},
            **{f"criterion_{k}": v for k, v in self.criterion.items()},
        }

    def text(self) -> str:
        lines = [
            f"m = {self.m}",
            f"class: {self.spectral_class}, λ={self.lambda_value:.6g}",
            f"I0 = {self.bragg_zero:.6g}",
        ]
        for key, value in self.lyapunov.items():
            lines.append(f"lyapunov.{key} = {value:.6g}")
        for key, value in self.criterion.items():
            lines.append(f"criterion.{key} = {value:.6g}" if isinstance(value, float) else f"criterion.{key} = {value}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _pure_point_verdict(spectral_class: SpectralClass) -> str:
    if spectral_class.tag is SpectralTag.FIBONACCI:
        return "pure point (Fibonacci)"
    return f"pure point (integer multiplier, ℓ={spectral_class.ell})"


def spectral_report(m: int, u: WeightVector, config: Optional[RunConfig] = None) -> SpectralReport:
    """
    Pure point for m = 1 and m = l(l+1). Otherwise the comb is singular apart from
    the Bragg peak at 0 once the Lyapunov lower bound log sqrt(lambda) - mean/2,
    mean taken at the minimal N of the table search, is positive.
    """
    m = check_m(m)
    u.require_nonzero()
    config = config or RunConfig()
    spectral_class = classify(m)
    data = eigen_data(m)
    i0 = bragg_intensity_zero(m, u)
    logger.append_keys(m=m)

    if spectral_class.pure_point:
        return SpectralReport(m, spectral_class, data.lambda_plus, i0, _pure_point_verdict(spectral_class))

    estimates = sample_lyapunov(m, config.n, config.samples, config.seed, config.threads)
    chi_min = np.array([e.chi_min for e in estimates])
    chi_b = np.array([e.chi_b for e in estimates])
    lyapunov = {
        "chi_b_mean": float(np.mean(chi_b)),
        "chi_min_mean": float(np.mean(chi_min)),
        "chi_min_min": float(np.min(chi_min)),
    }

    row = table1(m, m, config.resolution, config.tol, config.threads)[0]
    criterion: Dict[str, Any] = {"N": row["N"], "status": row["status"], "m_q": m_q(m)}
    if row["mean"] is not None:
        criterion["mean"] = row["mean"]
        criterion["chi_min_bound"] = chi_min_lower_bound(m, row["mean"])
    bound = criterion.get("chi_min_bound")
    if bound is not None and bound > 0 and row["status"] == "ok":
        verdict = (
            f"singular continuous apart from the trivial Bragg peak at 0 (I0={i0:.6g}); "
            f"χ_min > 0 with margin {bound:.6g}"
        )
    else:
        verdict = "undetermined: the Lyapunov criterion did not give a positive margin"
        logger.warning("Criterio sin margen positivo", extra={"criterion": criterion})
    return SpectralReport(m, spectral_class, data.lambda_plus, i0, verdict, lyapunov, criterion)
