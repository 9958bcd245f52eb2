"""Exact quantum Schubert calculus on partial flag varieties Fl(a; C^n)."""

from .classical import EExpansion, evaluate_expansion, fgp_expand, pieri_expand, schubert_poly
from .errors import (
    IndexingError, InternalError, ParameterError, QFlagError, SizeError,
    UnassignedVariable, VarSetMismatch,
)
from .oracle import apply_dw, classical_product_oracle, reduced_word, schubert_coefficients
from .perm import (
    DimSeq, Permutation, all_dimseqs, alpha_perm, as_cycle, beta_perm, compose, cycle_perm, descents,
    dual, in_Sn_a, length, longest_parabolic, parabolic_elements, special_perm,
)
from .poly import Poly, Q, VarSet, X, Y, complete, divided_difference, elementary, substitute
from .presentation import (
    QuantumGiambelli, RelationsReport, evaluate_presentation, phi_chern, quantum_E,
    quantum_giambelli, relations_check,
)
from .quantum import (
    QuantumElement, SpecialClass, bar_map, gamma_d, gamma_from_intervals, gw_explain,
    gw_invariant, gw_special, is_pieri_sequence, length_condition, pieri_inequality,
    pieri_sequences, q_degree, quantum_pieri, quantum_product,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memo table (e-expansions, Pieri chains, products, E polynomials)."""
    from . import classical, presentation, quantum

    classical.clear_caches()
    quantum.clear_caches()
    presentation.clear_caches()
    quantum.pieri_sequences.cache_clear()
