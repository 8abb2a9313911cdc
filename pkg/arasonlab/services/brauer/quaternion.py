"""Brauer classes of quaternion algebras over Q, stored by ramification."""
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Union

from arasonlab.exceptions import PreconditionError, TheoremViolation
from arasonlab.services.arith import SquareClass, local_square, square_class
from arasonlab.services.arith.square_class import ClassLike
from .hilbert import hilbert_symbol_sc
from .places import REAL, Place, finite, sort_places


@dataclass(frozen=True)
class QuatClass:
    """Class of a quaternion algebra; ``ramified`` always has even size."""

    ramified: FrozenSet[Place] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.ramified, frozenset):
            object.__setattr__(self, "ramified", frozenset(self.ramified))
        if len(self.ramified) % 2:
            raise TheoremViolation(
                "quaternion class with odd ramification violates Hilbert reciprocity",
                {"ramified": [p.to_json() for p in sort_places(self.ramified)]},
            )

    @classmethod
    def split(cls) -> "QuatClass":
        return _SPLIT

    @property
    def is_split(self) -> bool:
        return not self.ramified

    @property
    def ramified_at_real(self) -> bool:
        return REAL in self.ramified

    def __mul__(self, other: "QuatClass") -> "QuatClass":
        """Brauer group law (the sum of two quaternion classes over Q is quaternion)."""
        if not isinstance(other, QuatClass):
            return NotImplemented
        return QuatClass(self.ramified ^ other.ramified)

    def to_json(self) -> List[Union[str, int]]:
        return [p.to_json() for p in sort_places(self.ramified)]

    @classmethod
    def from_json(cls, values: Iterable) -> "QuatClass":
        return cls(frozenset(Place.from_json(v) for v in values))

    def __repr__(self) -> str:
        return f"QuatClass({self.to_json()})"


_SPLIT = QuatClass(frozenset())


def candidate_places(*classes: SquareClass) -> List[Place]:
    """Real, 2 and the primes dividing the given squarefree classes."""
    primes = {2}
    for c in classes:
        primes.update(c.primes)
    return [REAL] + [finite(p) for p in sorted(primes)]


def quat_class_sc(a: SquareClass, b: SquareClass) -> QuatClass:
    ramified = frozenset(v for v in candidate_places(a, b) if hilbert_symbol_sc(a, b, v) == -1)
    return QuatClass(ramified)


def quat_class(a: ClassLike, b: ClassLike) -> QuatClass:
    """Ramification set of the quaternion algebra (a, b)_Q."""
    return quat_class_sc(square_class(a), square_class(b))


def quat_mul(x: QuatClass, y: QuatClass) -> QuatClass:
    return x * y


def is_norm(lam: ClassLike, delta: ClassLike) -> bool:
    """Whether ``lam`` is a norm from Q(sqrt(delta)), i.e. (delta, lam) splits."""
    d = square_class(delta)
    if d.is_one:
        raise PreconditionError(
            "delta is a square: Q(sqrt(delta)) is not a field", invariant="delta non-square"
        )
    return quat_class_sc(d, square_class(lam)).is_split


def splits_over_quadratic(algebra: QuatClass, delta: ClassLike) -> bool:
    """A quaternion class splits over Q(sqrt(delta)) iff no ramified place splits in it."""
    d = square_class(delta)
    return all(not local_square(d, v) for v in algebra.ramified)
