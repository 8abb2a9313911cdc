from .form import QuadForm, diagonal, dsum, hyperbolic, neg, pfister, scale, tensor
from .invariants import (
    InvariantProfile,
    clifford_class,
    e1,
    e2,
    e3,
    hasse_at,
    hasse_set,
    in_In,
    profile,
    signature,
    signed_disc,
)
from .witt import (
    anisotropic_profile,
    arason_pfister_holds,
    is_hyperbolic,
    is_isometric,
    is_isotropic,
    isotropy_places,
    local_isotropic,
    witt_index,
)
from .similarity import is_similar, similarity_decision
from .pfister_recognition import pfister_decision, pfister_similar
from .orthogonal import orth_rel_odd

__all__ = [
    "QuadForm", "diagonal", "dsum", "hyperbolic", "neg", "pfister", "scale", "tensor",
    "InvariantProfile", "clifford_class", "e1", "e2", "e3", "hasse_at", "hasse_set", "in_In",
    "profile", "signature", "signed_disc",
    "anisotropic_profile", "arason_pfister_holds", "is_hyperbolic", "is_isometric", "is_isotropic", "isotropy_places",
    "local_isotropic", "witt_index",
    "is_similar", "similarity_decision",
    "pfister_decision", "pfister_similar",
    "orth_rel_odd",
]
