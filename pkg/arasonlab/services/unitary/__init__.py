from .involution import (
    RelArasonValue,
    UnitaryInv,
    disc_algebra,
    hyperbolic_inv,
    totally_decomposable,
)
from .invariants import (
    absolute_difference,
    e3_hyp,
    e3_td,
    f3,
    find_admissible_lambda,
    is_admissible_lambda,
    merkurjev_base,
    orth_extension,
    rank2_factor,
    rel_arason,
    theta_lambda,
)
from .descent import orth_descent_rel, quad_ext_check, symp_descent_e3, unit_orth_check
from .classify import (
    classify,
    classify_deg2,
    classify_deg3,
    classify_deg4,
    classify_deg6,
    dec_deg8,
    is_hyperbolic_deg6,
)

__all__ = [
    "RelArasonValue", "UnitaryInv", "disc_algebra", "hyperbolic_inv", "totally_decomposable",
    "absolute_difference", "e3_hyp", "e3_td", "f3", "find_admissible_lambda", "is_admissible_lambda",
    "merkurjev_base", "orth_extension", "rank2_factor", "rel_arason", "theta_lambda",
    "orth_descent_rel", "quad_ext_check", "symp_descent_e3", "unit_orth_check",
    "classify", "classify_deg2", "classify_deg3", "classify_deg4", "classify_deg6",
    "dec_deg8", "is_hyperbolic_deg6",
]
