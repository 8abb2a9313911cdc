"""Exact rationals and integer factorization.

Rationals are ``fractions.Fraction`` values; factorization and primality are
delegated to ``sympy.ntheory`` (trial division followed by Pollard rho and
friends, deterministic primality below 2**64).
"""
from fractions import Fraction
from functools import lru_cache
from typing import List, Union

from sympy.ntheory import factorint, isprime

from arasonlab.config import limits
from arasonlab.exceptions import PreconditionError

Rat = Fraction
RatLike = Union[int, str, Fraction]


def parse_rat(value: RatLike, *, nonzero: bool = True) -> Fraction:
    """Parse ``"p/q"``, an integer or a Fraction into a reduced Fraction.

    Floats are refused: every scalar in this library must be exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Inexact or boolean scalar not accepted: {value!r}")
    if isinstance(value, Fraction):
        r = value
    elif isinstance(value, int):
        r = Fraction(value)
    elif isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"Malformed rational: {value!r} (expected 'p/q' or an integer)")
        try:
            r = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Malformed rational: {value!r}") from exc
    elif hasattr(value, "numerator") and hasattr(value, "denominator"):
        r = Fraction(int(value.numerator), int(value.denominator))
    else:
        raise ValueError(f"Unsupported scalar type: {type(value).__name__}")

    if nonzero and r == 0:
        raise PreconditionError("zero is not allowed as a form entry or scalar", invariant="nonzero scalar")

    return r


def check_height(r: Fraction) -> Fraction:
    """Refuse user-supplied scalars whose numerator or denominator reach ``limits.max_entry_height``."""
    bound = limits()["max_entry_height"]
    if abs(r.numerator) >= bound or r.denominator >= bound:
        raise PreconditionError(
            f"scalar {r} exceeds the supported height bound {bound}", invariant="entry height"
        )
    return r


def format_rat(r: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` for integers."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def factorize(n: int) -> List[int]:
    """Prime factors of ``n >= 1`` with multiplicity, in ascending order."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValueError(f"factorize expects a positive integer, got {n!r}")
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    if n == 1:
        return []
    primes: List[int] = []
    for p, e in sorted(_factor_cached(n).items()):
        primes.extend([p] * e)
    return primes


@lru_cache(maxsize=65536)
def _factor_cached(n: int) -> dict:
    return factorint(n)


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def squarefree_part(n: int) -> int:
    """Signed squarefree kernel of a nonzero integer."""
    if n == 0:
        raise PreconditionError("zero has no square class", invariant="nonzero scalar")
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in _factor_cached(abs(n)).items():
        if e % 2:
            out *= p
    return sign * out
