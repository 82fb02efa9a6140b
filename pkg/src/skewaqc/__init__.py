"""Codes over GF(4), skew-cyclic codes, the doubling map S and asymmetric
quantum code parameters derived from nested classical codes."""

from __future__ import annotations

from skewaqc.aqc import (
    AqcParams,
    PreconditionError,
    derive_from_nested,
    derive_via_s,
    mds_construction,
    derive_from_s_dual,
    prop2_derive,
    singleton_check,
)
from skewaqc.codefile import load_code, parse_code
from skewaqc.codes import (
    AdditiveCodeF4,
    BudgetExceeded,
    LinearCodeF4,
    WeightEnumerator,
    enumerate_codewords,
    hermitian_dual,
    is_invariant_under,
    is_subcode,
    min_distance,
    repetition_code,
    shift_invariance_kind,
    trace_dual,
    weight_enumerator,
)
from skewaqc.gf4 import ExtField, conjugate, f4_mul, hermitian_inner, trace_hermitian_inner
from skewaqc.perm import IndexPermutation, permutation_order
from skewaqc.rs_concat import (
    concat_pair,
    concatenated_rs_params,
    extended_rs,
    phi_star,
    reproduce_table,
    theorem_7_3_params,
)
from skewaqc.skew import (
    SkewPoly,
    enumerate_skew_cyclic_generators,
    is_skew_cyclic,
    module_theta_cyclic_code,
    right_divmod,
    skew_mul,
)
from skewaqc.smap import (
    equivalent_shift_image,
    induced_apply,
    s_apply,
    s_apply_code,
    sigma,
    sigma_double_prime,
    sigma_prime,
)
from skewaqc.wenum import (
    DualWeightData,
    dual_s_image_wenum,
    macwilliams_transform,
    pless_moment_check,
    s_image_wenum,
)

__version__ = "0.1.0"

__all__ = [
    "AdditiveCodeF4",
    "AqcParams",
    "BudgetExceeded",
    "DualWeightData",
    "ExtField",
    "IndexPermutation",
    "LinearCodeF4",
    "PreconditionError",
    "SkewPoly",
    "WeightEnumerator",
    "concat_pair",
    "concatenated_rs_params",
    "conjugate",
    "derive_from_nested",
    "derive_from_s_dual",
    "derive_via_s",
    "dual_s_image_wenum",
    "enumerate_codewords",
    "enumerate_skew_cyclic_generators",
    "equivalent_shift_image",
    "extended_rs",
    "f4_mul",
    "hermitian_dual",
    "hermitian_inner",
    "induced_apply",
    "is_invariant_under",
    "is_skew_cyclic",
    "is_subcode",
    "load_code",
    "macwilliams_transform",
    "mds_construction",
    "min_distance",
    "module_theta_cyclic_code",
    "parse_code",
    "permutation_order",
    "phi_star",
    "pless_moment_check",
    "prop2_derive",
    "repetition_code",
    "reproduce_table",
    "right_divmod",
    "s_apply",
    "s_apply_code",
    "s_image_wenum",
    "shift_invariance_kind",
    "sigma",
    "sigma_double_prime",
    "sigma_prime",
    "singleton_check",
    "skew_mul",
    "theorem_7_3_params",
    "trace_dual",
    "trace_hermitian_inner",
    "weight_enumerator",
]
