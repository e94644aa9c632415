"""Ideals of regular nilpotent Hessenberg Schubert cells."""

from ._hesscell import (
    BudgetExceeded,
    DomainMismatch,
    HessenbergFunction,
    InvalidInput,
    Permutation,
    Polynomial,
    buchberger_check,
    cell_generators,
    enumerate_hessenberg,
    fixed_points,
    frobenius_check,
    hilbert_series,
    ideal,
    is_fixed_point,
    patch_generators,
    paving,
    reduced_groebner_basis,
    run_command,
    sweep,
    triangular_analysis,
    v_of_w,
)

__all__ = [
    "BudgetExceeded",
    "DomainMismatch",
    "HessenbergFunction",
    "InvalidInput",
    "Permutation",
    "Polynomial",
    "buchberger_check",
    "cell_generators",
    "enumerate_hessenberg",
    "fixed_points",
    "frobenius_check",
    "hilbert_series",
    "ideal",
    "is_fixed_point",
    "patch_generators",
    "paving",
    "reduced_groebner_basis",
    "run_command",
    "sweep",
    "triangular_analysis",
    "v_of_w",
]
