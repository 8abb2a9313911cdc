from .form import (
    HermContext,
    HermForm,
    NormClass,
    disc_algebra_h,
    disc_h,
    disc_value,
    dsum_h,
    hermitian_pfister,
    hyperbolic_h,
    orth_sum_theta,
    scale_h,
    tensor_h,
    trace_form,
)
from .equivalence import is_hyperbolic_h, is_isometric_h, is_similar_h, witt_index_h

__all__ = [
    "HermContext", "HermForm", "NormClass",
    "disc_algebra_h", "disc_h", "disc_value", "dsum_h", "hermitian_pfister", "hyperbolic_h",
    "orth_sum_theta", "scale_h", "tensor_h", "trace_form",
    "is_hyperbolic_h", "is_isometric_h", "is_similar_h", "witt_index_h",
]
