"""Brute-force oracles used by the checks, independent of the local-global machinery."""
from math import gcd
from typing import Optional, Tuple

from sympy import integer_nthroot
from sympy.ntheory import factorint
from sympy.ntheory.primetest import is_square

from arasonlab.services.arith import squarefree_part


def legendre_normal(a: int, b: int, c: int) -> Tuple[int, int, int]:
    """Squarefree, pairwise coprime coefficients of a ternary form with the same isotropy.

    A prime p dividing a and b is moved onto c: p(ax^2 + by^2 + cz^2) is
    (a/p)(px)^2 + (b/p)(py)^2 + pc z^2.
    """
    a, b, c = squarefree_part(a), squarefree_part(b), squarefree_part(c)
    while True:
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            g = gcd(x, y)
            if g > 1:
                p = min(factorint(g))
                a, b, c = squarefree_part(x // p), squarefree_part(y // p), squarefree_part(z * p)
                break
        else:
            return a, b, c


def holzer_solution(a: int, b: int, c: int) -> Optional[Tuple[int, int, int]]:
    """A nonzero solution of ax^2 + by^2 + cz^2 = 0 inside Holzer's box, or None.

    For normalized coefficients a solution exists iff one exists with
    |x| <= sqrt|bc|, |y| <= sqrt|ac|, |z| <= sqrt|ab|.
    """
    a, b, c = legendre_normal(a, b, c)
    if (a > 0) == (b > 0) == (c > 0):
        return None
    bx = integer_nthroot(abs(b * c), 2)[0]
    by = integer_nthroot(abs(a * c), 2)[0]
    for x in range(0, bx + 1):
        for y in range(-by, by + 1):
            if x == 0 and y == 0:
                continue
            num = -(a * x * x + b * y * y)
            if num % c:
                continue
            z2 = num // c
            if z2 < 0 or not is_square(z2):
                continue
            return x, y, integer_nthroot(z2, 2)[0]
    return None


def holzer_isotropic(a: int, b: int, c: int) -> bool:
    return holzer_solution(a, b, c) is not None
