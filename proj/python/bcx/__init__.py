"""Bicomplex linear algebra, module duality and Hardy-space composition operators."""

from __future__ import annotations

import json as _json

from ._core import (
    BcxError,
    BCMatrix,
    BCVector,
    Bicomplex,
    DualityReport,
    Functional,
    Hyperbolic,
    OperatorNormReport,
    PowerSeries,
    SelfMap,
    Submodule,
    Tolerance,
    WeightSequence,
    adjoint,
    annihilator,
    apply,
    cartesian_normal_check,
    cayley,
    cayley_inverse,
    certify_self_map,
    check_dual_isometries,
    compose,
    composition_matrix,
    conj1,
    conj2,
    conj3,
    dnorm_vec,
    e1,
    e2,
    euclid_norm,
    euclid_vec,
    evaluate,
    extend_functional,
    from_cartesian,
    from_cartesian_matrix,
    hardy_inner,
    hardy_norm,
    hyp_leq,
    hyp_sqrt,
    inner_product,
    inverse,
    is_normal,
    is_null_cone,
    is_positive,
    is_self_adjoint,
    is_unitary,
    is_zero_operator,
    littlewood_bound,
    matmul,
    mobius_series,
    modulus_i,
    modulus_j,
    modulus_k,
    op_dnorm,
    project,
    quotient_norm,
    run_verify_json,
    scale_matrix,
    scale_vector,
    self_map_excess,
    seq_embed,
    seq_norm,
    spectral_norm,
    submodule_from_generators,
    suite_names,
    to_cartesian,
    to_cartesian_matrix,
    unit_j,
)

__version__ = "0.1.0"


def run_verify(**kwargs) -> dict:
    """Run the randomized property suites and return the report as a dict."""
    return _json.loads(run_verify_json(**kwargs))
