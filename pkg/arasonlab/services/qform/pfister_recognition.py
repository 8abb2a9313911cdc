"""Recognition of forms similar to 3- and 4-fold Pfister forms."""
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from arasonlab.config import lab_defaults
from arasonlab.exceptions import PreconditionError, WitnessNotFoundError
from arasonlab.services.arith import SquareClass, square_class
from arasonlab.services.arith.square_class import ClassLike
from arasonlab.utils.logger import setup_logger
from .form import QuadForm, pfister
from .invariants import e3, in_In
from .similarity import is_similar
from .witt import is_hyperbolic

logger = setup_logger(__name__)

Slots = Tuple[SquareClass, ...]

_ONE = SquareClass.one()
_MINUS_ONE = SquareClass(-1)


def _signed_squarefree(primes: Sequence[int]) -> Iterator[SquareClass]:
    for mask in range(1 << len(primes)):
        chosen = frozenset(p for i, p in enumerate(primes) if mask >> i & 1)
        yield SquareClass(1, chosen)
        yield SquareClass(-1, chosen)


def _candidate_slots(q: QuadForm, count: int, fixed: Optional[SquareClass]) -> Iterator[Slots]:
    primes = sorted({p for a in q.diag for p in a.primes} | (set(fixed.primes) if fixed else set()))
    pool: List[SquareClass] = list(_signed_squarefree(primes))
    for combo in product(pool, repeat=count):
        yield combo


def pfister_decision(q: QuadForm, n: int, first_slot: Optional[ClassLike] = None) -> bool:
    """Whether q is similar to an n-fold Pfister form (with the given first slot)."""
    if n not in (3, 4):
        raise ValueError(f"pfister_similar supports n = 3 or 4, got {n}")
    if q.dim != 2 ** n:
        raise PreconditionError(
            f"a {n}-fold Pfister form has dimension {2 ** n}, got {q.dim}", invariant="dimension 2^n"
        )
    if not in_In(q, n):
        return False
    if first_slot is None:
        return True
    # An anisotropic form in I^n here is definite, so the first slot must be negative.
    return is_hyperbolic(q) or square_class(first_slot).is_negative


def pfister_similar(q: QuadForm, n: int, first_slot: Optional[ClassLike] = None) -> Optional[Slots]:
    """Slots of an n-fold Pfister form similar to q, or None.

    ``first_slot`` fixes the first slot (n = 4 only); the returned tuple then
    starts with it.
    """
    if first_slot is not None and n != 4:
        raise ValueError("a required first slot is supported for 4-fold Pfister forms only")
    if not pfister_decision(q, n, first_slot):
        return None

    fixed = square_class(first_slot) if first_slot is not None else None
    free = n - 1 if fixed is not None else n
    prefix: Slots = (fixed,) if fixed is not None else ()

    if n == 3:
        # e3 classifies 3-fold Pfister forms over Q.
        guess = (_ONE,) * 3 if e3(q).is_zero else (_MINUS_ONE,) * 3
        if is_similar(q, pfister(guess)) is not None:
            return guess
    else:
        for guess in ((_ONE,) * free, (_MINUS_ONE,) * free):
            slots = prefix + guess
            if is_similar(q, pfister(slots)) is not None:
                return slots

    limit = lab_defaults()["pfister_slot_limit"]
    searched = 0
    for combo in _candidate_slots(q, free, fixed):
        searched += 1
        if searched > limit:
            break
        slots = prefix + combo
        if is_similar(q, pfister(slots)) is not None:
            logger.debug("Pfister witness %s found after %d candidates", slots, searched)
            return slots
    raise WitnessNotFoundError(
        f"{q!r} is similar to a {n}-fold Pfister form but no slots were found", searched=searched
    )
