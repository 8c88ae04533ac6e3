"""Exact-arithmetic Morse index iteration for closed geodesics on spheres.

The library has five layers: exact quadratic-field arithmetic (`exact`),
symplectic normal-form blocks (`symplectic`), case classification and
index iteration (`iteration`), Betti/Morse bookkeeping (`morse`), and the
mechanical single-geodesic case-analysis replayer (`prover`).
"""

from .exact import ExactReal, FieldMismatchError, compare, floor_scaled, is_irrational, make
from .symplectic import (
    Hyp,
    NBlock,
    NormalFormDecomposition,
    OmegaSignature,
    Rot,
    diamond_sum,
    omega_signature,
    same_omega_component_data,
)
from .iteration import (
    Case,
    GeodesicModel,
    analytic_period,
    classify,
    critical_module_dim,
    critical_type,
    index_of_iterate,
    mean_index,
)
from .morse import (
    BettiTable,
    MorseTable,
    SeriesPolynomial,
    averaged_alternating_sum,
    betti,
    check_morse_inequalities,
    euler_limit,
    mean_index_identity_lhs,
    morse_numbers,
    poincare_series_truncated,
)
from .prover import ProofTrace, SymbolicFact, Verdict, replay, theta_set, verify_trace

__version__ = "0.1.0"

__all__ = [
    "ExactReal",
    "FieldMismatchError",
    "make",
    "compare",
    "floor_scaled",
    "is_irrational",
    "Rot",
    "NBlock",
    "Hyp",
    "NormalFormDecomposition",
    "OmegaSignature",
    "diamond_sum",
    "omega_signature",
    "same_omega_component_data",
    "Case",
    "GeodesicModel",
    "classify",
    "index_of_iterate",
    "mean_index",
    "analytic_period",
    "critical_type",
    "critical_module_dim",
    "BettiTable",
    "MorseTable",
    "SeriesPolynomial",
    "betti",
    "poincare_series_truncated",
    "morse_numbers",
    "check_morse_inequalities",
    "euler_limit",
    "averaged_alternating_sum",
    "mean_index_identity_lhs",
    "ProofTrace",
    "SymbolicFact",
    "Verdict",
    "replay",
    "theta_set",
    "verify_trace",
]
