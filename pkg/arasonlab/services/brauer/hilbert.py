"""Local Hilbert symbols over Q by the closed-form case analysis."""
from sympy.functions.combinatorial.numbers import legendre_symbol

from arasonlab.services.arith import SquareClass, square_class
from arasonlab.services.arith.square_class import ClassLike
from .places import Place


def _eps(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def hilbert_symbol_sc(a: SquareClass, b: SquareClass, v: Place) -> int:
    """(a, b)_v for square classes; returns +1 or -1."""
    if v.is_real:
        return -1 if (a.sign < 0 and b.sign < 0) else 1

    p = v.prime
    alpha, beta = a.valuation(p), b.valuation(p)
    u, w = a.unit_part(p), b.unit_part(p)

    if p == 2:
        exponent = _eps(u) * _eps(w) + alpha * _omega(w) + beta * _omega(u)
        return -1 if exponent % 2 else 1

    if alpha == 0 and beta == 0:
        return 1
    sign = 1
    if alpha and beta and (p % 4 == 3):
        sign = -sign
    if beta:
        sign *= int(legendre_symbol(u % p, p))
    if alpha:
        sign *= int(legendre_symbol(w % p, p))
    return sign


def hilbert_symbol(a: ClassLike, b: ClassLike, v: Place) -> int:
    """(a, b)_v for nonzero rationals (or their square classes)."""
    return hilbert_symbol_sc(square_class(a), square_class(b), v)
