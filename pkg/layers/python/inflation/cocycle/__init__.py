from inflation.cocycle.constant_length import (
    ConstantLengthFourier,
    constant_length_exponents,
    constant_length_fourier,
    constant_length_mean_log_norm,
    psi_log_average,
)
from inflation.cocycle.means import MeanEstimate, mean_log_norm, table1
from inflation.cocycle.orbit import DigitOrbit, TorusOrbit, make_orbit, orbit_deviation
from inflation.cocycle.products import (
    CocycleAccumulator,
    LyapunovEstimate,
    chi_b_estimate,
    chi_min_lower_bound,
    cocycle_product,
    det_average,
    det_mean,
    lyapunov_pair,
    sample_det_averages,
    sample_lyapunov,
)

__all__ = [
    "CocycleAccumulator",
    "ConstantLengthFourier",
    "DigitOrbit",
    "LyapunovEstimate",
    "MeanEstimate",
    "TorusOrbit",
    "chi_b_estimate",
    "chi_min_lower_bound",
    "cocycle_product",
    "constant_length_exponents",
    "constant_length_fourier",
    "constant_length_mean_log_norm",
    "det_average",
    "det_mean",
    "lyapunov_pair",
    "make_orbit",
    "mean_log_norm",
    "orbit_deviation",
    "psi_log_average",
    "sample_det_averages",
    "sample_lyapunov",
    "table1",
]
