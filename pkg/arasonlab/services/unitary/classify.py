"""Classification of split unitary involutions in degrees 2, 3, 4, 6 and 8.

Each decision is computed from invariants and then compared with the
ground truth given by hermitian similarity (or hyperbolicity).
"""
from typing import Optional, Tuple

from arasonlab.exceptions import PreconditionError, TheoremViolation, WitnessNotFoundError
from arasonlab.services.arith import SquareClass
from arasonlab.services.hermitian import hermitian_pfister, is_hyperbolic_h, is_similar_h, trace_form
from arasonlab.services.qform import pfister_decision, pfister_similar
from arasonlab.utils.logger import setup_logger
from .involution import UnitaryInv, disc_algebra, require_degree, require_same_degree, require_same_field
from .invariants import e3_hyp, e3_td, rel_arason

logger = setup_logger(__name__)


def _isomorphic(tau0: UnitaryInv, tau: UnitaryInv) -> bool:
    return is_similar_h(tau0.rep, tau.rep) is not None


def _confirm(decision: bool, truth: bool, what: str, *invs: UnitaryInv) -> bool:
    if decision != truth:
        raise TheoremViolation(
            f"{what}: invariant decision {decision} but ground truth {truth}",
            {"involutions": [inv.to_json() for inv in invs], "decision": decision, "truth": truth},
        )
    return decision


def _pair(tau0: UnitaryInv, tau: UnitaryInv, degree: int) -> None:
    require_same_field(tau0, tau)
    require_same_degree(tau0, tau)
    require_degree(tau0, degree)


def classify_deg2(tau0: UnitaryInv, tau: UnitaryInv) -> bool:
    """On quaternion algebras the discriminant algebra is a complete invariant."""
    _pair(tau0, tau, 2)
    decision = disc_algebra(tau0) == disc_algebra(tau)
    return _confirm(decision, _isomorphic(tau0, tau), "degree 2", tau0, tau)


def classify_deg3(tau0: UnitaryInv, tau: UnitaryInv) -> bool:
    _pair(tau0, tau, 3)
    decision = rel_arason(tau0, tau).is_zero
    return _confirm(decision, _isomorphic(tau0, tau), "degree 3", tau0, tau)


def classify_deg4(tau0: UnitaryInv, tau: UnitaryInv) -> bool:
    """Isomorphic iff the relative invariant vanishes in its coset space."""
    _pair(tau0, tau, 4)
    decision = rel_arason(tau0, tau).is_zero
    return _confirm(decision, _isomorphic(tau0, tau), "degree 4", tau0, tau)


def classify_deg6(tau0: UnitaryInv, tau: UnitaryInv) -> bool:
    _pair(tau0, tau, 6)
    for inv in (tau0, tau):
        if not disc_algebra(inv).is_split:
            raise PreconditionError(
                "degree-6 classification needs split discriminant algebras", invariant="split discriminant algebra"
            )
    decision = rel_arason(tau0, tau).is_zero
    return _confirm(decision, _isomorphic(tau0, tau), "degree 6", tau0, tau)


def is_hyperbolic_deg6(tau: UnitaryInv) -> bool:
    """Hyperbolic iff D(tau) is split and e3_hyp(tau) = 0."""
    require_degree(tau, 6)
    decision = disc_algebra(tau).is_split and e3_hyp(tau).is_zero
    return _confirm(decision, is_hyperbolic_h(tau.rep), "degree 6 hyperbolicity", tau)


def classify(tau0: UnitaryInv, tau: UnitaryInv) -> bool:
    """Dispatch on the common degree."""
    n = require_same_degree(tau0, tau)
    procedures = {2: classify_deg2, 3: classify_deg3, 4: classify_deg4, 6: classify_deg6}
    if n not in procedures:
        raise PreconditionError(f"no classification procedure in degree {n}", invariant="degree 2, 3, 4 or 6")
    return procedures[n](tau0, tau)


def dec_deg8(tau: UnitaryInv) -> Optional[Tuple[SquareClass, SquareClass, SquareClass]]:
    """Slots (a, b, c) with tau ~ ad<<a, b, c>>, or None when tau is not totally decomposable."""
    require_degree(tau, 8)
    q = trace_form(tau.rep)
    decision = disc_algebra(tau).is_split and e3_td(tau).is_zero
    _confirm(decision, pfister_decision(q, 4, tau.ctx.delta), "degree 8 decomposability", tau)
    if not decision:
        return None
    slots = pfister_similar(q, 4, first_slot=tau.ctx.delta)
    if slots is None:
        raise TheoremViolation("decomposable involution without a Pfister trace form", {"tau": tau.to_json()})
    abc = tuple(slots[1:])
    if is_similar_h(tau.rep, hermitian_pfister(tau.ctx, abc)) is None:
        raise WitnessNotFoundError(
            f"<<{', '.join(str(s) for s in slots)}>> is similar to q_h but not a hermitian witness"
        )
    logger.debug("decomposition of %r: %s", tau, abc)
    return abc
