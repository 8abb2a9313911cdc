"""Diagonal quadratic forms over Q and the form algebra on them."""
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple

from arasonlab.config import limits
from arasonlab.exceptions import PreconditionError
from arasonlab.services.arith import SquareClass, sc_prod, square_class
from arasonlab.services.arith.square_class import ClassLike


@dataclass(frozen=True)
class QuadForm:
    """<a_1, ..., a_n> with entries stored as square classes."""

    diag: Tuple[SquareClass, ...] = field(default_factory=tuple)

    def __post_init__(self):
        entries = tuple(square_class(a) for a in self.diag)
        max_dim = limits()["max_form_dim"]
        if len(entries) > max_dim:
            raise PreconditionError(
                f"form of dimension {len(entries)} exceeds the supported maximum {max_dim}",
                invariant="dimension <= %d" % max_dim,
            )
        object.__setattr__(self, "diag", entries)

    @classmethod
    def of(cls, *entries: ClassLike) -> "QuadForm":
        return cls(tuple(entries))

    @property
    def dim(self) -> int:
        return len(self.diag)

    def det(self) -> SquareClass:
        return sc_prod(self.diag)

    def __iter__(self):
        return iter(self.diag)

    def __len__(self) -> int:
        return len(self.diag)

    def __add__(self, other: "QuadForm") -> "QuadForm":
        return dsum(self, other)

    def __neg__(self) -> "QuadForm":
        return neg(self)

    def to_json(self) -> dict:
        return {"diag": [a.to_int() for a in self.diag]}

    @classmethod
    def from_json(cls, obj) -> "QuadForm":
        if isinstance(obj, dict):
            if "diag" not in obj:
                raise ValueError("quadratic form JSON needs a 'diag' list")
            entries = obj["diag"]
        else:
            entries = obj
        if not isinstance(entries, list):
            raise ValueError("'diag' must be a list of nonzero rationals")
        return cls(tuple(entries))

    def __repr__(self) -> str:
        return "<" + ", ".join(str(a) for a in self.diag) + ">"


def dsum(q: QuadForm, q2: QuadForm) -> QuadForm:
    return QuadForm(q.diag + q2.diag)


def scale(q: QuadForm, lam: ClassLike) -> QuadForm:
    c = square_class(lam)
    return QuadForm(tuple(c * a for a in q.diag))


def neg(q: QuadForm) -> QuadForm:
    return QuadForm(tuple(-a for a in q.diag))


def tensor(q: QuadForm, q2: QuadForm) -> QuadForm:
    return QuadForm(tuple(a * b for a in q.diag for b in q2.diag))


def pfister(slots: Sequence[ClassLike]) -> QuadForm:
    """<<a_1, ..., a_n>> = <1, -a_1> x ... x <1, -a_n>."""
    out = QuadForm((SquareClass.one(),))
    for a in slots:
        c = square_class(a)
        out = tensor(out, QuadForm((SquareClass.one(), -c)))
    return out


def hyperbolic(m: int) -> QuadForm:
    """m copies of the hyperbolic plane <1, -1>."""
    if m < 0:
        raise ValueError("number of hyperbolic planes must be non-negative")
    one = SquareClass.one()
    return QuadForm(tuple(e for _ in range(m) for e in (one, -one)))


def diagonal(entries: Iterable[ClassLike]) -> QuadForm:
    return QuadForm(tuple(entries))
