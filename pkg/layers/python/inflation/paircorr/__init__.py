from inflation.paircorr.correlations import (
    PairCorrelationTable,
    empirical_pair_correlations,
    renormalization_residual,
    renormalization_rhs,
)
from inflation.paircorr.diffraction import (
    PeriodogramSample,
    WeightVector,
    bragg_intensity_zero,
    intensity_vector_residual,
    intensity_vector_zero,
    periodogram,
    scaling_exponent,
)
from inflation.paircorr.report import SpectralReport, spectral_report

__all__ = [
    "PairCorrelationTable",
    "PeriodogramSample",
    "SpectralReport",
    "WeightVector",
    "bragg_intensity_zero",
    "empirical_pair_correlations",
    "intensity_vector_residual",
    "intensity_vector_zero",
    "periodogram",
    "renormalization_residual",
    "renormalization_rhs",
    "scaling_exponent",
    "spectral_report",
]
