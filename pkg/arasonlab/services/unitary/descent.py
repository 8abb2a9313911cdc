"""Two-path computations: descents to symplectic and orthogonal involutions,
the quadratic-extension invariants of q_h and the orthogonal-extension check.
"""
from typing import Tuple

from arasonlab.exceptions import PreconditionError, TheoremViolation
from arasonlab.services.arith import SquareClass, square_class
from arasonlab.services.arith.square_class import ClassLike
from arasonlab.services.brauer import (
    Coset,
    H3Class,
    h3_cup,
    is_norm,
    quat_class_sc,
    reduce,
    splits_over_quadratic,
    subgroup_alpha,
)
from arasonlab.services.hermitian import HermContext, HermForm, disc_algebra_h, disc_value, trace_form
from arasonlab.services.qform import QuadForm, clifford_class, dsum, e2, neg, profile, scale, tensor
from arasonlab.utils.logger import setup_logger
from .involution import UnitaryInv
from .invariants import difference_e3, odd_normalizer, orth_extension, rel_arason

logger = setup_logger(__name__)


def _same_dim(q0: QuadForm, q: QuadForm) -> int:
    if q0.dim != q.dim:
        raise PreconditionError(f"dimensions differ ({q0.dim} vs {q.dim})", invariant="equal degree")
    if q0.dim < 1:
        raise PreconditionError("forms must be nonzero", invariant="degree >= 1")
    return q0.dim


def symp_descent_e3(phi0: QuadForm, phi: QuadForm, a: ClassLike, delta: ClassLike) -> Tuple[H3Class, Coset]:
    """Symplectic value (d(phi) d(phi0)) . [(delta, a)] against the unitary coset.

    The unitary side uses the hermitian forms phi_i x <1, -a>, whose trace
    forms are <1, -delta> x <1, -a> x phi_i. For even m the two agree in
    H^3; for odd m the unitary coset vanishes modulo Q^x . (delta, a).
    """
    m = _same_dim(phi0, phi)
    a_cls = square_class(a)
    ctx = HermContext.of(delta)
    twist = QuadForm((SquareClass.one(), -a_cls))
    tau0 = UnitaryInv.adjoint(HermForm(ctx, tensor(phi0, twist).diag))
    tau = UnitaryInv.adjoint(HermForm(ctx, tensor(phi, twist).diag))
    quat = quat_class_sc(ctx.delta, a_cls)
    symp = h3_cup(phi.det() * phi0.det(), quat)
    rel = rel_arason(tau0, tau)

    if m % 2 == 0:
        agree = rel.value == symp
    else:
        agree = subgroup_alpha(quat).contains(rel.value)
    if not agree:
        raise TheoremViolation(
            "symplectic descent disagrees with the unitary relative invariant",
            {"phi0": phi0.to_json(), "phi": phi.to_json(), "a": a_cls.to_int(), "delta": ctx.to_json(),
             "symplectic": symp.to_json(), "unitary": rel.to_json()},
        )
    return symp, rel.coset


def orth_descent_rel(q0: QuadForm, q: QuadForm, delta: ClassLike) -> Tuple[H3Class, Coset]:
    """(delta) . [C(q - q0)] against rel_arason of ad(q0), ad(q) read as hermitian forms."""
    n = _same_dim(q0, q)
    ctx = HermContext.of(delta)
    ratio = q0.det() * q.det()
    if n % 2 == 0:
        if not is_norm(ratio, ctx.delta):
            raise PreconditionError(
                f"d(q0) d(q) = {ratio} is not a norm from Q(sqrt({ctx.delta})); discriminant algebras differ",
                invariant="discriminant algebras differ",
            )
        # q0 -> <a_1 N, a_2, ...> with N a norm: same hermitian form, det(q0') = det(q).
        q0 = QuadForm((q0.diag[0] * ratio,) + q0.diag[1:])
    else:
        q = scale(q, ratio)
    value = h3_cup(ctx.delta, clifford_class(dsum(q, neg(q0))))

    tau0 = UnitaryInv.adjoint(HermForm(ctx, q0.diag))
    tau = UnitaryInv.adjoint(HermForm(ctx, q.diag))
    rel = rel_arason(tau0, tau)
    expected = reduce(value, rel.space)
    if expected != rel.coset:
        raise TheoremViolation(
            "orthogonal descent disagrees with the unitary relative invariant",
            {"q0": q0.to_json(), "q": q.to_json(), "delta": ctx.to_json(),
             "orthogonal": value.to_json(), "unitary": rel.to_json()},
        )
    return value, rel.coset


def quad_ext_check(h: HermForm) -> dict:
    """Invariants of the trace form q_h predicted from h.

    e1(q_h) = delta^n, C(q_h) = (delta, d(h)); for even n this is e2(q_h)
    and equals the discriminant algebra, for odd n it splits over Q(sqrt(delta)).
    """
    q = trace_form(h)
    prof = profile(q)
    n = h.rank
    expected_e1 = h.delta if n % 2 else SquareClass.one()
    expected_clifford = quat_class_sc(h.delta, disc_value(h))
    clifford = clifford_class(q)
    report = {
        "rank": n,
        "delta": h.ctx.to_json(),
        "profile": prof.to_json(),
        "e1": prof.disc.to_int(),
        "expected_e1": expected_e1.to_int(),
        "clifford": clifford.to_json(),
        "expected_clifford": expected_clifford.to_json(),
    }
    mismatches = []
    if prof.disc != expected_e1:
        mismatches.append("e1")
    if clifford != expected_clifford:
        mismatches.append("clifford")
    if n % 2 == 0:
        second = e2(q)
        report["e2"] = second.to_json()
        if second != disc_algebra_h(h):
            mismatches.append("e2")
    else:
        splits = splits_over_quadratic(expected_clifford, h.delta)
        report["splits_over_extension"] = splits
        if not splits:
            mismatches.append("splits_over_extension")
    if mismatches:
        raise TheoremViolation(
            "trace-form invariants differ from the quadratic-extension predictions",
            {"mismatches": mismatches, **report},
        )
    report["consistent"] = True
    return report


def unit_orth_check(tau0: UnitaryInv, tau: UnitaryInv) -> H3Class:
    """Relative invariant of the orthogonal extensions ad_{q_h0}, ad_{q_h}, checked against rel_arason."""
    rel = rel_arason(tau0, tau)
    if tau.degree % 2:
        tau = tau.rescaled(odd_normalizer(tau0, tau))
    orth = difference_e3(orth_extension(tau), orth_extension(tau0))
    if orth != rel.value:
        raise TheoremViolation(
            "orthogonal extension invariant differs from the unitary relative invariant",
            {"tau0": tau0.to_json(), "tau": tau.to_json(), "orthogonal": orth.to_json(), "unitary": rel.to_json()},
        )
    logger.debug("unit-orth consistency holds for %r, %r", tau0, tau)
    return orth
