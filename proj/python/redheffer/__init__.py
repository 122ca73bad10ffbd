"""Generalized Redheffer inequality numerics and a QPE simulator."""

from ._core import (
    MAX_QUBITS,
    GapScan,
    MarginReport,
    OutcomeDistribution,
    SolverConfig,
    StateVector,
    SuccessReport,
    ThresholdRow,
    alpha_sharp,
    alpha_threshold,
    alpha_two,
    basis_state,
    beta_threshold,
    certify_inequality,
    closed_form_prob,
    concavity_check,
    corollary_lhs,
    find_violation,
    gamma_threshold,
    induction_gap,
    induction_step_residual,
    induction_step_residual_bound,
    infinite_product,
    inverse_qft,
    inverse_qft_direct,
    margin,
    min_induction_gap,
    outcome_distribution,
    partial_product,
    partial_product_log_deriv,
    phase_error,
    phase_state,
    product_limit,
    qft,
    qft_direct,
    success_bound,
    success_probability,
    threshold_table,
)

__all__ = [
    "MAX_QUBITS",
    "GapScan",
    "MarginReport",
    "OutcomeDistribution",
    "SolverConfig",
    "StateVector",
    "SuccessReport",
    "ThresholdRow",
    "alpha_sharp",
    "alpha_threshold",
    "alpha_two",
    "basis_state",
    "beta_threshold",
    "certify_inequality",
    "closed_form_prob",
    "concavity_check",
    "corollary_lhs",
    "find_violation",
    "gamma_threshold",
    "induction_gap",
    "induction_step_residual",
    "induction_step_residual_bound",
    "infinite_product",
    "inverse_qft",
    "inverse_qft_direct",
    "margin",
    "min_induction_gap",
    "outcome_distribution",
    "partial_product",
    "partial_product_log_deriv",
    "phase_error",
    "phase_state",
    "product_limit",
    "qft",
    "qft_direct",
    "success_bound",
    "success_probability",
    "threshold_table",
]
