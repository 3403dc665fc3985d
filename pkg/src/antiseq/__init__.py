"""Exact asymptotic expansions for the number of components of labeled structures."""

from .algebra import POLY_RHO, RATIONAL, Poly, RingError
from .engine import (
    Decomp,
    DecompositionError,
    ExpansionTable,
    component_series,
    connected_series,
    d_coefficients,
    derived_one_anti_seq,
    derived_series,
    equipotence_check,
    leading_coefficient,
)
from .expansion import (
    EvaluationError,
    convergence_report,
    exact_distribution,
    exact_probability,
    expansion_terms,
    leading_term,
)
from .models import ModelError, ModelSpec, gargantuan_probe, get_model, list_models
from .oracle import (
    ComponentHistogram,
    OracleError,
    enumerate_graph_components,
    enumerate_tournament_components,
    it_weights,
    p_polynomial,
    parity_difference,
    q_polynomial,
)
from .series import Egf, SeriesError, std_series

__version__ = "0.1.0"

__all__ = [
    "ComponentHistogram",
    "Decomp",
    "DecompositionError",
    "Egf",
    "EvaluationError",
    "ExpansionTable",
    "ModelError",
    "ModelSpec",
    "OracleError",
    "POLY_RHO",
    "Poly",
    "RATIONAL",
    "RingError",
    "SeriesError",
    "component_series",
    "connected_series",
    "convergence_report",
    "d_coefficients",
    "derived_one_anti_seq",
    "derived_series",
    "enumerate_graph_components",
    "enumerate_tournament_components",
    "equipotence_check",
    "exact_distribution",
    "exact_probability",
    "expansion_terms",
    "gargantuan_probe",
    "get_model",
    "it_weights",
    "leading_coefficient",
    "leading_term",
    "list_models",
    "p_polynomial",
    "parity_difference",
    "q_polynomial",
    "std_series",
]
