"""Isometry, similarity and hyperbolicity of hermitian forms via trace forms."""
from typing import Optional

from arasonlab.exceptions import WitnessNotFoundError
from arasonlab.services.arith import SquareClass
from arasonlab.services.qform import is_hyperbolic, is_isometric, is_similar, witt_index
from arasonlab.utils.logger import setup_logger
from .form import HermForm, _require_same_ctx, scale_h, trace_form

logger = setup_logger(__name__)


def is_isometric_h(h: HermForm, h2: HermForm) -> bool:
    _require_same_ctx(h, h2)
    if h.rank != h2.rank:
        return False
    return is_isometric(trace_form(h), trace_form(h2))


def is_similar_h(h: HermForm, h2: HermForm) -> Optional[SquareClass]:
    """lam in Q^x with <lam> h isometric to h2, or None.

    The trace form of <lam> h is lam * q_h, so every trace-form similarity
    factor is already a rational scalar for the hermitian forms.
    """
    _require_same_ctx(h, h2)
    if h.rank != h2.rank:
        return None
    lam = is_similar(trace_form(h), trace_form(h2))
    if lam is None:
        return None
    if not is_isometric_h(scale_h(h, lam), h2):
        logger.warning("trace forms of %r and %r are similar but %s is not a hermitian witness", h, h2, lam)
        raise WitnessNotFoundError("similar as quadratic spaces, hermitian witness not found")
    return lam


def witt_index_h(h: HermForm) -> int:
    return witt_index(trace_form(h)) // 2


def is_hyperbolic_h(h: HermForm) -> bool:
    return h.rank % 2 == 0 and is_hyperbolic(trace_form(h))


