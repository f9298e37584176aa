"""Integrable one-dimensional many-body models with contact interactions.

Two-body Y-operators, Yang-Baxter checks, Bethe-ansatz wavefunctions, bound
states of the separated family and multi-particle S-matrices.
"""

from .contact_params import (
    INF,
    AntiDelta,
    Delta,
    NonSeparatedParams,
    Separated,
    SeparatedParams,
    as_nonseparated,
    two_body_relation_oracle,
    validate_nonseparated,
    validate_separated,
)
from .errors import DomainError, InconsistentBoundaryError, PoleError, ValidationError
from .spinspace import SpinSystem, SpinVector, Statistics, basis_index, permutation_operator, statistics_operator
from .yops import YOperator, y_family, y_nonseparated, y_operator, y_separated

__version__ = "0.1.0"
