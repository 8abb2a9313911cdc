"""Unitary involutions on split algebras, stored as adjoints of hermitian forms."""
from dataclasses import dataclass
from typing import Sequence

from arasonlab.exceptions import PreconditionError
from arasonlab.services.arith.square_class import ClassLike
from arasonlab.services.brauer import Coset, CosetSpace, H3Class, QuatClass, reduce
from arasonlab.services.hermitian import (
    HermContext,
    HermForm,
    disc_algebra_h,
    hermitian_pfister,
    hyperbolic_h,
    scale_h,
)


@dataclass(frozen=True)
class UnitaryInv:
    """ad_rep on End(V); ``rep`` is defined up to a rational scalar."""

    ctx: HermContext
    degree: int
    rep: HermForm

    def __post_init__(self):
        if self.degree < 2:
            raise PreconditionError("unitary involutions need degree >= 2", invariant="degree >= 2")
        if self.rep.rank != self.degree:
            raise PreconditionError(
                f"representative has rank {self.rep.rank}, expected {self.degree}", invariant="rank = degree"
            )
        if self.rep.ctx != self.ctx:
            raise PreconditionError("representative lives over another field", invariant="same quadratic extension")

    @classmethod
    def adjoint(cls, h: HermForm) -> "UnitaryInv":
        return cls(h.ctx, h.rank, h)

    @classmethod
    def of(cls, delta: ClassLike, entries: Sequence[ClassLike]) -> "UnitaryInv":
        return cls.adjoint(HermForm.of(delta, entries))

    def rescaled(self, lam: ClassLike) -> "UnitaryInv":
        """The same involution with representative <lam> rep."""
        return UnitaryInv.adjoint(scale_h(self.rep, lam))

    def to_json(self) -> dict:
        return {"delta": self.ctx.to_json(), "degree": self.degree, "diag": [a.to_int() for a in self.rep.diag]}

    @classmethod
    def from_json(cls, obj: dict) -> "UnitaryInv":
        if not isinstance(obj, dict) or "delta" not in obj or "diag" not in obj:
            raise ValueError("unitary involution JSON needs 'delta', 'degree' and 'diag'")
        inv = cls.of(obj["delta"], obj["diag"])
        if "degree" in obj and int(obj["degree"]) != inv.degree:
            raise PreconditionError(
                f"degree {obj['degree']} does not match {inv.degree} diagonal entries", invariant="rank = degree"
            )
        return inv

    def __repr__(self) -> str:
        return f"ad({self.rep!r})"


@dataclass(frozen=True)
class RelArasonValue:
    """A lift in H^3(Q) together with the quotient it is read in."""

    value: H3Class
    space: CosetSpace

    @property
    def coset(self) -> Coset:
        return reduce(self.value, self.space)

    @property
    def is_zero(self) -> bool:
        return self.coset.is_zero

    def same_coset(self, other: "RelArasonValue") -> bool:
        if self.space.modulus != other.space.modulus:
            raise PreconditionError("values live in different quotients of H^3", invariant="same coset space")
        return self.coset.rep == other.coset.rep

    def to_json(self) -> dict:
        return {"value": self.value.to_json(), "coset": self.coset.to_json(), "space": self.space.to_json()}


def require_same_field(*invs: UnitaryInv) -> HermContext:
    ctx = invs[0].ctx
    for inv in invs[1:]:
        if inv.ctx != ctx:
            raise PreconditionError(
                f"involutions over different fields (delta {ctx.delta} vs {inv.ctx.delta})",
                invariant="same quadratic extension",
            )
    return ctx


def require_same_degree(*invs: UnitaryInv) -> int:
    n = invs[0].degree
    for inv in invs[1:]:
        if inv.degree != n:
            raise PreconditionError(f"degrees differ ({n} vs {inv.degree})", invariant="equal degree")
    return n


def require_degree(inv: UnitaryInv, *allowed: int) -> None:
    if inv.degree not in allowed:
        wanted = " or ".join(str(a) for a in allowed)
        raise PreconditionError(f"degree {wanted} required, got {inv.degree}", invariant=f"degree {wanted}")


def disc_algebra(tau: UnitaryInv) -> QuatClass:
    """Brauer class of the discriminant algebra D(tau), tau of even degree."""
    return disc_algebra_h(tau.rep)


def hyperbolic_inv(ctx: HermContext, n: int) -> UnitaryInv:
    if n % 2:
        raise PreconditionError("hyperbolic involutions need even degree", invariant="even degree")
    return UnitaryInv.adjoint(hyperbolic_h(ctx, n // 2))


def totally_decomposable(ctx: HermContext, slots: Sequence[ClassLike]) -> UnitaryInv:
    """ad of the hermitian Pfister form <<a, b, c>> (degree 8)."""
    if len(slots) != 3:
        raise PreconditionError("a degree-8 decomposable involution needs three slots", invariant="three slots")
    return UnitaryInv.adjoint(hermitian_pfister(ctx, slots))
