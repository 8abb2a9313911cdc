from .places import REAL, Place, finite, sort_places
from .hilbert import hilbert_symbol, hilbert_symbol_sc
from .quaternion import (
    QuatClass,
    candidate_places,
    is_norm,
    quat_class,
    quat_class_sc,
    quat_mul,
    splits_over_quadratic,
)
from .cohomology import (
    H3,
    NONZERO,
    ZERO,
    Coset,
    CosetSpace,
    H3Class,
    H3Subgroup,
    coset_space,
    h3_cup,
    h3_symbol,
    reduce,
    subgroup_alpha,
)

__all__ = [
    "REAL", "Place", "finite", "sort_places",
    "hilbert_symbol", "hilbert_symbol_sc",
    "QuatClass", "candidate_places", "is_norm", "quat_class", "quat_class_sc", "quat_mul",
    "splits_over_quadratic",
    "H3", "NONZERO", "ZERO", "Coset", "CosetSpace", "H3Class", "H3Subgroup",
    "coset_space", "h3_cup", "h3_symbol", "reduce", "subgroup_alpha",
]
