"""The 2-torsion of H^3(Q) and its quotients by cup-product subgroups.

Over Q the group H^3(Q, mu_2) is Z/2, detected at the real place, so a class
is a single bit and a subgroup is either trivial or everything.
"""
from dataclasses import dataclass, field

from arasonlab.exceptions import PreconditionError
from arasonlab.services.arith import square_class
from arasonlab.services.arith.square_class import ClassLike
from .quaternion import QuatClass


@dataclass(frozen=True)
class H3Class:
    real_bit: int = 0

    def __post_init__(self):
        if self.real_bit not in (0, 1):
            raise ValueError(f"real_bit must be 0 or 1, got {self.real_bit}")

    def __add__(self, other: "H3Class") -> "H3Class":
        if not isinstance(other, H3Class):
            return NotImplemented
        return H3Class(self.real_bit ^ other.real_bit)

    __sub__ = __add__

    @property
    def is_zero(self) -> bool:
        return self.real_bit == 0

    def to_json(self) -> int:
        return self.real_bit


ZERO = H3Class(0)
NONZERO = H3Class(1)


@dataclass(frozen=True)
class H3Subgroup:
    full: bool = False

    def contains(self, x: H3Class) -> bool:
        return self.full or x.is_zero

    def to_json(self) -> str:
        return "full" if self.full else "zero"


@dataclass(frozen=True)
class CosetSpace:
    """H^3(Q) modulo ``modulus``; ``alpha`` is the class it was built from."""

    modulus: H3Subgroup
    alpha: QuatClass = field(default_factory=QuatClass.split)
    beta_split: bool = True

    @property
    def label(self) -> str:
        return f"N3[alpha={self.alpha.to_json()}, beta=0]"

    def to_json(self) -> dict:
        return {"alpha": self.alpha.to_json(), "beta": "split", "modulus": self.modulus.to_json(), "label": self.label}


@dataclass(frozen=True)
class Coset:
    rep: H3Class
    space: CosetSpace

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def __add__(self, other: "Coset") -> "Coset":
        if not isinstance(other, Coset):
            return NotImplemented
        if other.space.modulus != self.space.modulus:
            raise PreconditionError("cosets live in different quotients of H^3", invariant="same coset space")
        return reduce(self.rep + other.rep, self.space)

    def to_json(self) -> int:
        return self.rep.real_bit


def h3_symbol(a: ClassLike, b: ClassLike, c: ClassLike) -> H3Class:
    """The cup product (a)(b)(c); nonzero iff all three slots are negative."""
    sa, sb, sc = square_class(a), square_class(b), square_class(c)
    return H3Class(int(sa.is_negative and sb.is_negative and sc.is_negative))


def h3_cup(lam: ClassLike, algebra: QuatClass) -> H3Class:
    """(lam) . [A]"""
    return H3Class(int(square_class(lam).is_negative and algebra.ramified_at_real))


def subgroup_alpha(algebra: QuatClass) -> H3Subgroup:
    """Q^x . [A], which is all of H^3(Q) exactly when A ramifies at the real place."""
    return H3Subgroup(full=algebra.ramified_at_real)


def coset_space(alpha: QuatClass, beta_split: bool = True) -> CosetSpace:
    if not beta_split:
        raise PreconditionError("non-split B out of scope", invariant="B split")
    return CosetSpace(modulus=subgroup_alpha(alpha), alpha=alpha, beta_split=True)


def reduce(x: H3Class, space: CosetSpace) -> Coset:
    """Canonical representative of ``x`` modulo the space's subgroup."""
    if space.modulus.full:
        return Coset(ZERO, space)
    return Coset(x, space)


H3 = coset_space(QuatClass.split())
