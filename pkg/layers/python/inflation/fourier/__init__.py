from inflation.fourier.algebras import ida_dimension, kronecker_algebra_dimension
from inflation.fourier.matrices import (
    D0,
    D_LAMBDA,
    U,
    U_INV,
    DisplacementMatrix,
    FourierEval,
    RealifiedEval,
    ZeroSet,
    a_eval,
    a_u_eval,
    b_eval,
    b_tilde_eval,
    dirichlet,
    displacement_matrix,
    lambda_times,
    p_eval,
    p_tilde,
    phase_sum,
)
from inflation.fourier.positivity import (
    PFTensor,
    PositivityRun,
    epsilon_estimate,
    pf_tensor,
    positivity_iteration,
)

__all__ = [
    "D0",
    "D_LAMBDA",
    "U",
    "U_INV",
    "DisplacementMatrix",
    "FourierEval",
    "PFTensor",
    "PositivityRun",
    "RealifiedEval",
    "ZeroSet",
    "a_eval",
    "a_u_eval",
    "b_eval",
    "b_tilde_eval",
    "dirichlet",
    "displacement_matrix",
    "epsilon_estimate",
    "ida_dimension",
    "kronecker_algebra_dimension",
    "lambda_times",
    "p_eval",
    "p_tilde",
    "pf_tensor",
    "phase_sum",
    "positivity_iteration",
]
