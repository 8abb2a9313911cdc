from arasonlab.exceptions import PreconditionError
from arasonlab.services.brauer import H3Class
from .form import QuadForm, dsum, neg, scale
from .invariants import e3, in_In


def orth_rel_odd(phi0: QuadForm, phi: QuadForm) -> H3Class:
    """Relative Arason invariant of two odd-degree orthogonal involutions.

    Computes e3(phi0 - <d(phi0) d(phi)> phi). The difference always lies in
    I^2; it lies in I^3 exactly when the even Clifford algebras agree.
    """
    if phi0.dim != phi.dim:
        raise PreconditionError("forms must have the same dimension", invariant="equal degree")
    if phi0.dim % 2 == 0 or phi0.dim < 5:
        raise PreconditionError(
            f"odd-degree invariant needs odd dimension >= 5, got {phi0.dim}", invariant="odd degree >= 5"
        )
    psi = dsum(phi0, neg(scale(phi, phi0.det() * phi.det())))
    if not in_In(psi, 3):
        raise PreconditionError(
            "Clifford algebras not isomorphic", invariant="isomorphic even Clifford algebras"
        )
    return e3(psi)
