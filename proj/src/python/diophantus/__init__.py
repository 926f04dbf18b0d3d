"""Exact-arithmetic constructions for rational points on the six Diophantus
surfaces: parametrization engines, the double-equation secant solver,
good-reduction checks, and conic local solubility."""

from ._core import (
    CurvePoint,
    DoubleEquation,
    Rat,
    conic_soluble,
    fermat_coefficient,
    fibration_value,
    hilbert_symbol,
    ii20_inverse,
    ii20_param,
    ii31_param,
    ii31_ps,
    iii17_sigma,
    iv18_section,
    iv32_solve_fibre,
    membership,
    model_json,
    padic_insoluble_system,
    run_engine,
    v29_curve,
    witness_solve,
)

__all__ = [
    "CurvePoint",
    "DoubleEquation",
    "Rat",
    "conic_soluble",
    "fermat_coefficient",
    "fibration_value",
    "hilbert_symbol",
    "ii20_inverse",
    "ii20_param",
    "ii31_param",
    "ii31_ps",
    "iii17_sigma",
    "iv18_section",
    "iv32_solve_fibre",
    "membership",
    "model_json",
    "padic_insoluble_system",
    "run_engine",
    "v29_curve",
    "witness_solve",
]

__version__ = "0.1.0"
