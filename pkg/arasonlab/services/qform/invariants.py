"""Classical invariants of quadratic forms over Q.

The profile (dimension, signed discriminant, Hasse ramification set, real
signature) is a complete isometry invariant by Hasse-Minkowski. The
cohomological invariants e1, e2, e3 are read off it on the relevant power of
the fundamental ideal.
"""
from dataclasses import dataclass, field

from arasonlab.exceptions import PreconditionError
from arasonlab.services.arith import SquareClass
from arasonlab.services.brauer import (
    H3Class,
    QuatClass,
    Place,
    candidate_places,
    hilbert_symbol_sc,
    quat_class_sc,
)
from .form import QuadForm

_MINUS_ONE = SquareClass(-1)


def signed_sign(n: int) -> int:
    """(-1)^(n(n-1)/2)"""
    return -1 if (n * (n - 1) // 2) % 2 else 1


def signature(q: QuadForm) -> int:
    return sum(1 if a.sign > 0 else -1 for a in q.diag)


def signed_disc(q: QuadForm) -> SquareClass:
    """d(q) = (-1)^(n(n-1)/2) * a_1 ... a_n"""
    d = q.det()
    return d if signed_sign(q.dim) == 1 else -d


def hasse_at(q: QuadForm, v: Place) -> int:
    """prod_{i<j} (a_i, a_j)_v"""
    s = 1
    prefix = SquareClass.one()
    for a in q.diag:
        if hilbert_symbol_sc(prefix, a, v) == -1:
            s = -s
        prefix = prefix * a
    return s


def hasse_set(q: QuadForm) -> QuatClass:
    places = candidate_places(*q.diag)
    return QuatClass(frozenset(v for v in places if hasse_at(q, v) == -1))


@dataclass(frozen=True)
class InvariantProfile:
    dim: int
    disc: SquareClass
    hasse: QuatClass = field(default_factory=QuatClass.split)
    signature: int = 0

    @property
    def det(self) -> SquareClass:
        return self.disc if signed_sign(self.dim) == 1 else -self.disc

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "disc": self.disc.to_int(),
            "hasse": self.hasse.to_json(),
            "signature": self.signature,
        }


def profile(q: QuadForm) -> InvariantProfile:
    return InvariantProfile(dim=q.dim, disc=signed_disc(q), hasse=hasse_set(q), signature=signature(q))


def clifford_correction(dim: int, disc: SquareClass) -> QuatClass:
    """Class c(q) - s(q) for an even-dimensional form with signed discriminant ``disc``."""
    r = dim % 8
    if r == 2:
        return QuatClass.split()
    if r == 4:
        return quat_class_sc(_MINUS_ONE, -disc)
    if r == 6:
        return quat_class_sc(_MINUS_ONE, _MINUS_ONE)
    return quat_class_sc(_MINUS_ONE, disc)


def clifford_class_of_profile(prof: InvariantProfile) -> QuatClass:
    if prof.dim % 2:
        raise PreconditionError(
            "the full Clifford class is computed for even-dimensional forms only",
            invariant="even dimension",
        )
    return prof.hasse * clifford_correction(prof.dim, prof.disc)


def clifford_class(q: QuadForm) -> QuatClass:
    """Brauer class of the full Clifford algebra C(q), q of even dimension."""
    return clifford_class_of_profile(profile(q))


def in_In(q: QuadForm, n: int) -> bool:
    """Membership of the Witt class of q in I^n, for n in 1..4."""
    if n not in (1, 2, 3, 4):
        raise ValueError(f"in_In supports n in 1..4, got {n}")
    return _level(profile(q)) >= n


def _level(prof: InvariantProfile) -> int:
    """Largest n <= 4 with the form in I^n (0 when the dimension is odd)."""
    if prof.dim % 2:
        return 0
    if not prof.disc.is_one:
        return 1
    if not clifford_class_of_profile(prof).is_split:
        return 2
    if prof.signature % 16:
        return 3
    return 4


def _require_level(q: QuadForm, n: int, what: str) -> InvariantProfile:
    prof = profile(q)
    level = _level(prof)
    if level < n:
        raise PreconditionError(
            f"{what} requires the form to lie in I^{n}; {q!r} is only in I^{level}",
            invariant=f"I^{n} membership (level {n})",
        )
    return prof


def e1(q: QuadForm) -> SquareClass:
    """Signed discriminant, defined on I (even dimension)."""
    return _require_level(q, 1, "e1").disc


def e2(q: QuadForm) -> QuatClass:
    """Clifford invariant, defined on I^2."""
    return clifford_class_of_profile(_require_level(q, 2, "e2"))


def e3(q: QuadForm) -> H3Class:
    """Arason invariant on I^3: over Q it is (signature / 8) mod 2."""
    prof = _require_level(q, 3, "e3")
    return H3Class((prof.signature // 8) % 2)
