"""Square classes: the group Q^x / Q^x2."""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Iterable, Union

from sympy.functions.combinatorial.numbers import legendre_symbol

from arasonlab.exceptions import PreconditionError
from .rational import _factor_cached, parse_rat


@dataclass(frozen=True, order=False)
class SquareClass:
    """``sign * prod(primes)``, a squarefree integer standing for its class."""

    sign: int = 1
    primes: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"SquareClass sign must be +1 or -1, got {self.sign}")
        if not isinstance(self.primes, frozenset):
            object.__setattr__(self, "primes", frozenset(self.primes))

    # -- construction -----------------------------------------------------
    @classmethod
    def one(cls) -> "SquareClass":
        return _ONE

    @classmethod
    def from_int(cls, n: int) -> "SquareClass":
        """Class of a nonzero integer (need not be squarefree)."""
        if n == 0:
            raise PreconditionError("zero has no square class", invariant="nonzero scalar")
        return _class_of_int(int(n))

    # -- group law --------------------------------------------------------
    def __mul__(self, other: "SquareClass") -> "SquareClass":
        if not isinstance(other, SquareClass):
            return NotImplemented
        return SquareClass(self.sign * other.sign, self.primes ^ other.primes)

    def inverse(self) -> "SquareClass":
        return self

    def __neg__(self) -> "SquareClass":
        return SquareClass(-self.sign, self.primes)

    # -- views ------------------------------------------------------------
    @property
    def is_one(self) -> bool:
        return self.sign == 1 and not self.primes

    @property
    def is_negative(self) -> bool:
        return self.sign < 0

    def to_int(self) -> int:
        out = self.sign
        for p in self.primes:
            out *= p
        return out

    def __int__(self) -> int:
        return self.to_int()

    def to_fraction(self) -> Fraction:
        return Fraction(self.to_int())

    def valuation(self, p: int) -> int:
        """p-adic valuation (0 or 1) of the squarefree representative."""
        return 1 if p in self.primes else 0

    def unit_part(self, p: int) -> int:
        """The representative divided by p when p divides it."""
        n = self.to_int()
        return n // p if p in self.primes else n

    def __repr__(self) -> str:
        return f"SquareClass({self.to_int()})"

    def __str__(self) -> str:
        return str(self.to_int())


_ONE = SquareClass(1, frozenset())


@lru_cache(maxsize=65536)
def _class_of_int(n: int) -> SquareClass:
    sign = -1 if n < 0 else 1
    if abs(n) == 1:
        return SquareClass(sign, frozenset())
    odd = frozenset(p for p, e in _factor_cached(abs(n)).items() if e % 2)
    return SquareClass(sign, odd)


ClassLike = Union[SquareClass, int, str, Fraction]


def square_class(r: ClassLike) -> SquareClass:
    """Square class of a nonzero rational; ``p/q`` has the class of ``p*q``."""
    if isinstance(r, SquareClass):
        return r
    value = parse_rat(r) if not isinstance(r, Fraction) else r
    if value == 0:
        raise PreconditionError("zero has no square class", invariant="nonzero scalar")
    num = _class_of_int(value.numerator)
    if value.denominator == 1:
        return num
    return num * _class_of_int(value.denominator)


def sc_mul(a: SquareClass, b: SquareClass) -> SquareClass:
    return a * b


def sc_prod(classes: Iterable[SquareClass]) -> SquareClass:
    out = _ONE
    for c in classes:
        out = out * c
    return out


def local_square(c: SquareClass, place) -> bool:
    """Whether the squarefree class ``c`` is a square in the completion at ``place``."""
    if place.is_real:
        return c.sign > 0
    p = place.prime
    if p in c.primes:
        return False
    n = c.to_int()
    if p == 2:
        return n % 8 == 1
    return legendre_symbol(n % p, p) == 1
