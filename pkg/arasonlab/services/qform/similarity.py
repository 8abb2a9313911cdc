"""Similarity of quadratic forms: decision and witness.

For even dimension n the determinant is a similarity invariant and scaling
by lam changes the Hasse invariant by (lam, c)_v, where c is the signed
discriminant. Deciding similarity therefore amounts to prescribing the
symbols (lam, c)_v at finitely many places plus the sign of lam. The witness
is assembled from -1, the constraint primes and auxiliary primes l with
(c / l) = 1 by linear algebra over GF(2), then checked by isometry.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import nextprime
from sympy.functions.combinatorial.numbers import legendre_symbol

from arasonlab.config import lab_defaults
from arasonlab.exceptions import TheoremViolation, WitnessNotFoundError
from arasonlab.services.arith import SquareClass, local_square
from arasonlab.services.brauer import REAL, Place, finite, hilbert_symbol_sc
from arasonlab.utils.logger import setup_logger
from .form import QuadForm, scale
from .invariants import InvariantProfile, profile
from .witt import is_isometric

logger = setup_logger(__name__)


class _XorBasis:
    """Incremental GF(2) basis remembering which generators produced each vector."""

    def __init__(self):
        self._rows: Dict[int, Tuple[int, int]] = {}

    def add(self, vector: int, combo: int) -> None:
        for pivot in sorted(self._rows, reverse=True):
            if vector >> pivot & 1:
                row, row_combo = self._rows[pivot]
                vector ^= row
                combo ^= row_combo
        if vector:
            self._rows[vector.bit_length() - 1] = (vector, combo)

    def solve(self, target: int) -> Optional[int]:
        combo = 0
        for pivot in sorted(self._rows, reverse=True):
            if target >> pivot & 1:
                row, row_combo = self._rows[pivot]
                target ^= row
                combo ^= row_combo
        return combo if target == 0 else None


def _required_symbols(p1: InvariantProfile, p2: InvariantProfile) -> List[Place]:
    """Places where the Hasse invariants of the two forms differ."""
    return sorted(p1.hasse.ramified ^ p2.hasse.ramified, key=Place.sort_key)


def _sign_constraint(p1: InvariantProfile, p2: InvariantProfile) -> Tuple[bool, Optional[int]]:
    """(possible, sign bit required of lam); the bit is None when the sign is free."""
    s1, s2 = p1.signature, p2.signature
    if abs(s1) != abs(s2):
        return False, None
    if s1 == 0:
        return True, None
    return True, (0 if s1 == s2 else 1)


def similarity_decision(q: QuadForm, q2: QuadForm) -> bool:
    """Exact existence test for lam with lam*q isometric to q2."""
    if q.dim != q2.dim:
        return False
    if q.dim == 0:
        return True
    p1, p2 = profile(q), profile(q2)
    if q.dim % 2:
        return is_isometric(scale(q, p1.det * p2.det), q2)
    return _even_decision(p1, p2)


def _even_decision(p1: InvariantProfile, p2: InvariantProfile) -> bool:
    if p1.det != p2.det:
        return False
    possible, sign_bit = _sign_constraint(p1, p2)
    if not possible:
        return False
    c = p1.disc
    differing = set(_required_symbols(p1, p2))
    for v in differing:
        if local_square(c, v):
            return False
    if c.sign < 0:
        # (lam, c)_real = -1 iff lam < 0
        real_bit = 1 if REAL in differing else 0
        if sign_bit is not None and sign_bit != real_bit:
            return False
    # c > 0: scaling lam by -c flips its sign and leaves every symbol unchanged.
    return True


def _target_vector(places: Sequence[Place], differing, sign_bit: Optional[int]) -> int:
    vec = 0
    for i, v in enumerate(places):
        if v in differing:
            vec |= 1 << i
    if sign_bit is not None:
        vec |= sign_bit << len(places)
    return vec


def _generator_vector(g: SquareClass, c: SquareClass, places: Sequence[Place], with_sign: bool) -> int:
    vec = 0
    for i, v in enumerate(places):
        if hilbert_symbol_sc(g, c, v) == -1:
            vec |= 1 << i
    if with_sign and g.sign < 0:
        vec |= 1 << len(places)
    return vec


def _even_witness(p1: InvariantProfile, p2: InvariantProfile, aux_limit: int) -> Tuple[Optional[SquareClass], int]:
    c = p1.disc
    differing = set(_required_symbols(p1, p2))
    _, sign_bit = _sign_constraint(p1, p2)

    primes = {2} | set(c.primes) | {v.prime for v in differing if not v.is_real}
    places = [REAL] + [finite(p) for p in sorted(primes)]
    target = _target_vector(places, differing, sign_bit)

    generators: List[SquareClass] = [SquareClass(-1)] + [SquareClass(1, frozenset({p})) for p in sorted(primes)]
    basis = _XorBasis()
    for i, g in enumerate(generators):
        basis.add(_generator_vector(g, c, places, sign_bit is not None), 1 << i)

    tried = len(generators)
    ell = 2
    while True:
        combo = basis.solve(target)
        if combo is not None:
            lam = SquareClass.one()
            for i, g in enumerate(generators):
                if combo >> i & 1:
                    lam = lam * g
            return lam, tried
        ell = nextprime(ell)
        if ell > aux_limit:
            return None, tried
        if ell in primes or legendre_symbol(c.to_int() % ell, ell) != 1:
            continue
        g = SquareClass(1, frozenset({ell}))
        basis.add(_generator_vector(g, c, places, sign_bit is not None), 1 << len(generators))
        generators.append(g)
        tried += 1


def is_similar(q: QuadForm, q2: QuadForm, *, aux_limit: Optional[int] = None) -> Optional[SquareClass]:
    """Return lam with lam*q isometric to q2, or None when no such lam exists.

    Raises WitnessNotFoundError if the decision is positive but the bounded
    search does not produce a witness.
    """
    if q.dim != q2.dim:
        return None
    if q.dim == 0:
        return SquareClass.one()
    p1, p2 = profile(q), profile(q2)

    if q.dim % 2:
        lam = p1.det * p2.det
        return lam if is_isometric(scale(q, lam), q2) else None

    if not _even_decision(p1, p2):
        return None

    limit = aux_limit if aux_limit is not None else lab_defaults()["aux_prime_limit"]
    lam, tried = _even_witness(p1, p2, limit)
    if lam is None:
        logger.warning("Similarity witness search exhausted %d generators for %r ~ %r", tried, q, q2)
        raise WitnessNotFoundError(
            f"forms are similar but no witness was found among {tried} generators", searched=tried
        )
    if not is_isometric(scale(q, lam), q2):
        raise TheoremViolation(
            "similarity witness failed isometry verification",
            {"q": q.to_json(), "q2": q2.to_json(), "lambda": lam.to_int()},
        )
    logger.debug("similarity witness %s found after %d generators", lam, tried)
    return lam
