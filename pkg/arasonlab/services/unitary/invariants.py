"""Relative, hyperbolic and totally decomposable Arason invariants (split case).

For split algebras every invariant reduces to the Arason invariant of a
difference of Jacobson trace forms, read modulo Q^x . [D(tau0)] in even
degree and in H^3(Q) itself in odd degree.
"""
from typing import Iterable, Optional, Tuple

from arasonlab.exceptions import PreconditionError, TheoremViolation
from arasonlab.services.arith import SquareClass, sc_prod, square_class
from arasonlab.services.arith.square_class import ClassLike
from arasonlab.services.brauer import H3, H3Class, coset_space, h3_cup, is_norm
from arasonlab.services.hermitian import HermForm, disc_value, orth_sum_theta, tensor_h, trace_form
from arasonlab.services.qform import QuadForm, dsum, e3, in_In, neg
from arasonlab.utils.logger import setup_logger
from .involution import (
    RelArasonValue,
    UnitaryInv,
    disc_algebra,
    require_degree,
    require_same_degree,
    require_same_field,
    totally_decomposable,
)

logger = setup_logger(__name__)


def difference_e3(q: QuadForm, q0: QuadForm) -> H3Class:
    psi = dsum(q, neg(q0))
    if not in_In(psi, 3):
        raise TheoremViolation(
            "difference of trace forms is not in I^3",
            {"q": q.to_json(), "q0": q0.to_json()},
        )
    return e3(psi)


def odd_normalizer(tau0: UnitaryInv, tau: UnitaryInv) -> SquareClass:
    """mu with d(<mu> h) = d(h0) exactly, for odd degree."""
    return disc_value(tau0.rep) * disc_value(tau.rep)


def require_matching_disc_algebras(tau0: UnitaryInv, tau: UnitaryInv) -> None:
    if disc_algebra(tau0) != disc_algebra(tau):
        raise PreconditionError(
            "relative invariant undefined: discriminant algebras differ; D(tau0) must be isomorphic to D(tau)",
            invariant="discriminant algebras differ",
        )


def rel_arason(tau0: UnitaryInv, tau: UnitaryInv) -> RelArasonValue:
    """e3^{tau0}(tau) = e3(q_h - q_h0), in H^3 (odd n) or modulo Q^x . [D(tau0)] (even n)."""
    require_same_field(tau0, tau)
    n = require_same_degree(tau0, tau)
    q0 = trace_form(tau0.rep)
    if n % 2:
        h = tau.rescaled(odd_normalizer(tau0, tau)).rep
        value = difference_e3(trace_form(h), q0)
        return RelArasonValue(value, H3)
    require_matching_disc_algebras(tau0, tau)
    value = difference_e3(trace_form(tau.rep), q0)
    logger.debug("relative invariant of %r over %r: %s", tau, tau0, value)
    return RelArasonValue(value, coset_space(disc_algebra(tau0), True))


def e3_hyp(tau: UnitaryInv) -> RelArasonValue:
    """Relative invariant with the hyperbolic involution as base point."""
    if tau.degree % 2:
        raise PreconditionError("hyperbolic invariant needs even degree", invariant="even degree")
    if not disc_algebra(tau).is_split:
        raise PreconditionError(
            "hyperbolic invariant requires a split discriminant algebra", invariant="split discriminant algebra"
        )
    return RelArasonValue(e3(trace_form(tau.rep)), H3)


def e3_td(tau: UnitaryInv) -> RelArasonValue:
    """Invariant relative to a totally decomposable base point, degree 8."""
    require_degree(tau, 8)
    hyp = e3_hyp(tau)
    base = totally_decomposable(tau.ctx, (-1, -1, -1))
    via_base = rel_arason(base, tau)
    if via_base.value != hyp.value:
        raise TheoremViolation(
            "e3_td depends on the decomposable base point",
            {"tau": tau.to_json(), "hyp": hyp.value.to_json(), "via_base": via_base.value.to_json()},
        )
    return hyp


def f3(tau0: UnitaryInv, tau: UnitaryInv) -> H3Class:
    """Twice the relative invariant; identically zero when B is split."""
    rel = rel_arason(tau0, tau)
    return rel.value + rel.value


def theta_lambda(tau0: UnitaryInv, tau: UnitaryInv, lam: ClassLike) -> UnitaryInv:
    """The orthogonal sum ad(h0 + <-lam> h), of degree 2n."""
    require_same_field(tau0, tau)
    require_same_degree(tau0, tau)
    return UnitaryInv.adjoint(orth_sum_theta(tau0.rep, tau.rep, square_class(lam)))


def is_admissible_lambda(tau0: UnitaryInv, tau: UnitaryInv, lam: ClassLike) -> bool:
    """Whether theta_lam(tau0, tau) has split discriminant algebra."""
    return disc_algebra(theta_lambda(tau0, tau, lam)).is_split


def find_admissible_lambda(
    tau0: UnitaryInv, tau: UnitaryInv, candidates: Iterable[ClassLike] = ()
) -> SquareClass:
    """A lam making D(theta_lam) split.

    For even degree every lam works. For odd degree d(theta_lam) is
    lam * prod(a_i) * prod(b_i), so lam must lie in that class times a norm.
    """
    require_same_field(tau0, tau)
    n = require_same_degree(tau0, tau)
    if n % 2 == 0:
        for c in candidates:
            return square_class(c)
        return SquareClass.one()
    target = sc_prod(tau0.rep.diag) * sc_prod(tau.rep.diag)
    for c in candidates:
        lam = square_class(c)
        if is_norm(lam * target, tau0.ctx.delta):
            return lam
    return target


def rank2_factor(tau0: UnitaryInv, lam: ClassLike) -> Tuple[UnitaryInv, H3Class]:
    """ad(<1, -lam> x h0) and its hyperbolic invariant, which equals (lam) . [D(tau0)]."""
    if tau0.degree % 2:
        raise PreconditionError("rank-2 factor formula needs even degree", invariant="even degree")
    c = square_class(lam)
    inv = UnitaryInv.adjoint(tensor_h(tau0.rep, QuadForm((SquareClass.one(), -c))))
    value = e3_hyp(inv).value
    expected = h3_cup(c, disc_algebra(tau0))
    if value != expected:
        raise TheoremViolation(
            "rank-2 factor invariant differs from (lam) . [D(tau0)]",
            {"tau0": tau0.to_json(), "lambda": c.to_int(), "e3_hyp": value.to_json(), "cup": expected.to_json()},
        )
    return inv, value


def merkurjev_base(tau: UnitaryInv) -> UnitaryInv:
    """ad(H + <1, -d(h)>): a degree-4 base point with D equal to D(tau)."""
    require_degree(tau, 4)
    d = disc_value(tau.rep)
    one = SquareClass.one()
    return UnitaryInv.adjoint(HermForm(tau.ctx, (one, -one, one, -d)))


def absolute_difference(tau0: UnitaryInv, tau: UnitaryInv) -> Optional[H3Class]:
    """e3_hyp(tau) + e3_hyp(tau0) when both discriminant algebras are split, else None."""
    if tau0.degree % 2 or tau.degree % 2:
        return None
    if not (disc_algebra(tau0).is_split and disc_algebra(tau).is_split):
        return None
    return e3_hyp(tau).value + e3_hyp(tau0).value



def orth_extension(tau: UnitaryInv) -> QuadForm:
    """Trace form q_h; ad_{q_h} is the orthogonal extension of ad_h."""
    return trace_form(tau.rep)
