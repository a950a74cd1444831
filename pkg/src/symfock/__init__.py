"""Exact Q(t) computer algebra for symmetric functions and fermionic vertex operators."""

from .partitions import Partition, conjugate, multiplicities, partitions_of, partitions_up_to, z_factor
from .ratfun import RatFun, TPoly, rat_from_json, rat_to_json
from .symfunc import SymFunc, perp_apply, scalar_product, symfunc_from_json, symfunc_to_json
from .bases import (
    complete_h,
    dual_schur,
    elementary_e,
    expand_in_variables,
    hall_littlewood_oracle,
    hall_littlewood_row,
    q_coefficient,
    schur,
    schur_oracle,
)
from .fock import (
    FERMION_MINUS,
    FERMION_PLUS,
    TWISTED_MINUS,
    TWISTED_PLUS,
    DEFORMED_MINUS,
    DEFORMED_PLUS,
    FockVector,
    ModeExpression,
    VertexKernel,
    check_mode_identity,
    heisenberg_mode,
    mode_apply,
    twisted_heisenberg_mode,
    virasoro_mode,
)
from .vertex import basis_via_vertex, crosscheck_corollaries, generating_coefficient_direct
from .kp import TensorState, is_tau, omega_apply, search_negative_control

__all__ = [
    "Partition",
    "RatFun",
    "TPoly",
    "SymFunc",
    "FockVector",
    "VertexKernel",
    "ModeExpression",
    "TensorState",
    "partitions_of",
    "partitions_up_to",
    "conjugate",
    "multiplicities",
    "z_factor",
    "scalar_product",
    "perp_apply",
    "complete_h",
    "elementary_e",
    "q_coefficient",
    "hall_littlewood_row",
    "schur",
    "dual_schur",
    "schur_oracle",
    "hall_littlewood_oracle",
    "expand_in_variables",
    "mode_apply",
    "heisenberg_mode",
    "twisted_heisenberg_mode",
    "virasoro_mode",
    "check_mode_identity",
    "basis_via_vertex",
    "generating_coefficient_direct",
    "crosscheck_corollaries",
    "omega_apply",
    "is_tau",
    "search_negative_control",
    "rat_to_json",
    "rat_from_json",
    "symfunc_to_json",
    "symfunc_from_json",
    "FERMION_PLUS",
    "FERMION_MINUS",
    "TWISTED_PLUS",
    "TWISTED_MINUS",
    "DEFORMED_PLUS",
    "DEFORMED_MINUS",
]
