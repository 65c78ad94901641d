from ._core import (
    MathError,
    __version__,
    b_coeffs,
    duduchava_roch_check,
    f2n,
    heat_kernel,
    khat,
    precision,
    schur_avg,
    set_precision,
    suites,
    toeplitz_inverse,
    verify,
)

__all__ = [
    "MathError",
    "__version__",
    "b_coeffs",
    "duduchava_roch_check",
    "f2n",
    "heat_kernel",
    "khat",
    "precision",
    "schur_avg",
    "set_precision",
    "suites",
    "toeplitz_inverse",
    "verify",
]
