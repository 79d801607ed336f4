"""Two orthonormal eigenbases of the Zernike equation on the unit disk.

Basis functions, exact interbasis matrices, spectrum conversion, grid
sampling, least-squares wavefront fitting, and self-verification suites.
"""

from ._core import (
    FitReport,
    Spectrum,
    __version__,
    convert,
    enumerate_rung,
    eval_grid,
    fit,
    psi_I,
    psi_II,
    run_suite,
    suite_names,
    upsilon_I,
    upsilon_II,
    w_matrix,
    w_matrix_exact,
    zernike_eigenvalue,
)

__all__ = [
    "FitReport",
    "Spectrum",
    "__version__",
    "convert",
    "enumerate_rung",
    "eval_grid",
    "fit",
    "psi_I",
    "psi_II",
    "run_suite",
    "suite_names",
    "upsilon_I",
    "upsilon_II",
    "w_matrix",
    "w_matrix_exact",
    "zernike_eigenvalue",
]
