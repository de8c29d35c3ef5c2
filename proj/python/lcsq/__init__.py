"""Lower central series quotients of free associative algebras."""

from ._lcsq import (
    Engine,
    InconsistentSeries,
    PrimeDisagreement,
    component_dim,
    decompose,
    hilbert_F,
    lambda_bound,
    property_suite,
    reference_tables,
    schur,
    verify_tables,
)

__all__ = [
    "Engine",
    "InconsistentSeries",
    "PrimeDisagreement",
    "component_dim",
    "decompose",
    "hilbert_F",
    "lambda_bound",
    "property_suite",
    "reference_tables",
    "schur",
    "verify_tables",
]
