"""Hermitian forms over (Q(sqrt(delta)), iota) in diagonal form.

Diagonal entries of a hermitian form are fixed by iota, so they are rationals;
they are stored as square classes and compared modulo norms only when needed.
"""
from dataclasses import dataclass, field
from typing import Sequence, Tuple

from arasonlab.exceptions import PreconditionError
from arasonlab.services.arith import SquareClass, sc_prod, square_class
from arasonlab.services.arith.square_class import ClassLike
from arasonlab.services.brauer import QuatClass, is_norm, quat_class_sc
from arasonlab.services.qform import QuadForm, tensor
from arasonlab.services.qform.invariants import signed_sign


@dataclass(frozen=True)
class HermContext:
    """The quadratic field F' = Q(sqrt(delta)); delta must not be a square."""

    delta: SquareClass

    def __post_init__(self):
        d = square_class(self.delta)
        if d.is_one:
            raise PreconditionError(
                "delta = 1 gives the split algebra F x F, where every unitary involution is hyperbolic",
                invariant="delta non-square",
            )
        object.__setattr__(self, "delta", d)

    @classmethod
    def of(cls, delta: ClassLike) -> "HermContext":
        return cls(square_class(delta))

    def norm_form(self) -> QuadForm:
        """<1, -delta>"""
        return QuadForm((SquareClass.one(), -self.delta))

    def to_json(self) -> int:
        return self.delta.to_int()


@dataclass(frozen=True)
class HermForm:
    ctx: HermContext
    diag: Tuple[SquareClass, ...] = field(default_factory=tuple)

    def __post_init__(self):
        entries = tuple(square_class(a) for a in self.diag)
        if not entries:
            raise PreconditionError("hermitian forms must have rank >= 1", invariant="rank >= 1")
        object.__setattr__(self, "diag", entries)

    @classmethod
    def of(cls, delta: ClassLike, entries: Sequence[ClassLike]) -> "HermForm":
        return cls(HermContext.of(delta), tuple(entries))

    @property
    def rank(self) -> int:
        return len(self.diag)

    @property
    def delta(self) -> SquareClass:
        return self.ctx.delta

    def to_json(self) -> dict:
        return {"delta": self.ctx.to_json(), "diag": [a.to_int() for a in self.diag]}

    @classmethod
    def from_json(cls, obj: dict) -> "HermForm":
        if not isinstance(obj, dict) or "delta" not in obj or "diag" not in obj:
            raise ValueError("hermitian form JSON needs 'delta' and 'diag'")
        if not isinstance(obj["diag"], list):
            raise ValueError("'diag' must be a list of nonzero rationals")
        return cls.of(obj["delta"], obj["diag"])

    def __repr__(self) -> str:
        return f"Herm[delta={self.delta}](" + ", ".join(str(a) for a in self.diag) + ")"


@dataclass(frozen=True, eq=False)
class NormClass:
    """A class in Q^x / N(F'^x), represented by any rational square class."""

    value: SquareClass
    ctx: HermContext

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormClass):
            return NotImplemented
        if other.ctx != self.ctx:
            return False
        return is_norm(self.value * other.value, self.ctx.delta)

    __hash__ = None

    def to_json(self) -> int:
        return self.value.to_int()


def _require_same_ctx(*forms: HermForm) -> HermContext:
    ctx = forms[0].ctx
    for h in forms[1:]:
        if h.ctx != ctx:
            raise PreconditionError(
                f"hermitian forms over different fields (delta {ctx.delta} vs {h.ctx.delta})",
                invariant="same quadratic extension",
            )
    return ctx


def trace_form(h: HermForm) -> QuadForm:
    """Jacobson trace q_h = <1, -delta> x <a_1, ..., a_n>."""
    return tensor(h.ctx.norm_form(), QuadForm(h.diag))


def disc_value(h: HermForm) -> SquareClass:
    """(-1)^(n(n-1)/2) a_1 ... a_n as a square class."""
    d = sc_prod(h.diag)
    return d if signed_sign(h.rank) == 1 else -d


def disc_h(h: HermForm) -> NormClass:
    return NormClass(disc_value(h), h.ctx)


def disc_algebra_h(h: HermForm) -> QuatClass:
    """(delta, d(h)); the discriminant algebra exists for even rank only."""
    if h.rank % 2:
        raise PreconditionError(
            "discriminant algebra defined for even degree", invariant="even degree"
        )
    return quat_class_sc(h.delta, disc_value(h))


def scale_h(h: HermForm, lam: ClassLike) -> HermForm:
    c = square_class(lam)
    return HermForm(h.ctx, tuple(c * a for a in h.diag))


def dsum_h(h: HermForm, h2: HermForm) -> HermForm:
    ctx = _require_same_ctx(h, h2)
    return HermForm(ctx, h.diag + h2.diag)


def tensor_h(h: HermForm, q: QuadForm) -> HermForm:
    """h x q for a quadratic form q over F."""
    return HermForm(h.ctx, tuple(a * b for b in q.diag for a in h.diag))


def hyperbolic_h(ctx: HermContext, m: int) -> HermForm:
    if m < 1:
        raise PreconditionError("hyperbolic hermitian form needs m >= 1", invariant="rank >= 1")
    one = SquareClass.one()
    return HermForm(ctx, tuple(e for _ in range(m) for e in (one, -one)))


def hermitian_pfister(ctx: HermContext, slots: Sequence[ClassLike]) -> HermForm:
    """<<a_1, ..., a_k>> viewed as a hermitian form over F'."""
    out = HermForm(ctx, (SquareClass.one(),))
    for a in slots:
        out = tensor_h(out, QuadForm((SquareClass.one(), -square_class(a))))
    return out


def orth_sum_theta(h0: HermForm, h: HermForm, lam: ClassLike) -> HermForm:
    """h0 + <-lam> h"""
    ctx = _require_same_ctx(h0, h)
    c = -square_class(lam)
    return HermForm(ctx, h0.diag + tuple(c * a for a in h.diag))
