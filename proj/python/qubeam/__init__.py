"""Two-photon entanglement through a magnetized electron medium."""

from ._qubeam import (
    QubeamError,
    ModelParams,
    __version__,
    amplitudes,
    asymptotic_info,
    block,
    closed_form_ab,
    derive_couplings,
    exact_roots,
    info_measure,
    make_params,
    measures,
    perturbative_roots,
    phi_closed,
    residual,
    residual_split,
    root_shifts,
    sweep,
    sweep_csv,
)

__all__ = [
    "QubeamError",
    "ModelParams",
    "__version__",
    "amplitudes",
    "asymptotic_info",
    "block",
    "closed_form_ab",
    "derive_couplings",
    "exact_roots",
    "info_measure",
    "make_params",
    "measures",
    "perturbative_roots",
    "phi_closed",
    "residual",
    "residual_split",
    "root_shifts",
    "sweep",
    "sweep_csv",
]
