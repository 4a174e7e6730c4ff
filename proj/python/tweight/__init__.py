"""Binary few-weight codes, exact weight distributions, and 2-design verification."""

from ._core import (
    Field,
    LinearCode,
    __version__,
    assmus_mattson_gate,
    code_from_json,
    code_to_json,
    d_rho_code,
    d_rho_set,
    dual_code,
    dual_design_verify,
    etw_gate,
    extend_code,
    is_projective,
    jacobi_sign,
    macwilliams_dual,
    pless_check,
    predicted_dual_lambda,
    predicted_lambda,
    quadric_two_weight,
    support_blocks,
    three_weight_profile,
    verify_t_design,
    weil_sum_closed,
    weil_sum_direct,
)

__all__ = [
    "Field",
    "LinearCode",
    "__version__",
    "assmus_mattson_gate",
    "code_from_json",
    "code_to_json",
    "d_rho_code",
    "d_rho_set",
    "dual_code",
    "dual_design_verify",
    "etw_gate",
    "extend_code",
    "is_projective",
    "jacobi_sign",
    "macwilliams_dual",
    "pless_check",
    "predicted_dual_lambda",
    "predicted_lambda",
    "quadric_two_weight",
    "support_blocks",
    "three_weight_profile",
    "verify_t_design",
    "weil_sum_direct",
    "weil_sum_closed",
]
