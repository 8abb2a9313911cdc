"""Isotropy, Witt index and isometry, all decided on invariant profiles.

No isotropic vectors are produced. A form is isotropic over Q iff it is
isotropic at every place (Hasse-Minkowski), and the local answer only depends
on dimension, determinant, the local Hasse invariant and the signature.
Splitting off a hyperbolic plane changes the profile in a known way, which
gives the Witt index by iteration.
"""
from typing import Dict, List, Union

from arasonlab.exceptions import PreconditionError

from arasonlab.services.arith import SquareClass, local_square
from arasonlab.services.brauer import REAL, Place, QuatClass, finite, hilbert_symbol_sc
from .form import QuadForm
from .invariants import InvariantProfile, in_In, profile, signed_sign

_MINUS_ONE = SquareClass(-1)


def _places_to_check(prof: InvariantProfile) -> List[Place]:
    primes = {2} | set(prof.det.primes) | {v.prime for v in prof.hasse.ramified if not v.is_real}
    return [REAL] + [finite(p) for p in sorted(primes)]


def _hasse_value(prof: InvariantProfile, v: Place) -> int:
    return -1 if v in prof.hasse.ramified else 1


def locally_isotropic(prof: InvariantProfile, v: Place) -> bool:
    """Local isotropy at ``v`` from the profile (Serre's criteria at finite places)."""
    n = prof.dim
    if n < 2:
        return False
    if v.is_real:
        return abs(prof.signature) < n
    if n >= 5:
        return True
    d = prof.det
    eps = _hasse_value(prof, v)
    if n == 2:
        return local_square(-d, v)
    if n == 3:
        return eps == hilbert_symbol_sc(_MINUS_ONE, -d, v)
    # n == 4
    if not local_square(d, v):
        return True
    return eps == hilbert_symbol_sc(_MINUS_ONE, _MINUS_ONE, v)


def local_isotropic(q: QuadForm, v: Union[Place, str, int]) -> bool:
    return locally_isotropic(profile(q), v if isinstance(v, Place) else Place.from_json(v))


def is_isotropic_profile(prof: InvariantProfile) -> bool:
    if prof.dim < 2:
        return False
    if prof.dim == 2:
        return (-prof.det).is_one
    return all(locally_isotropic(prof, v) for v in _places_to_check(prof))


def isotropy_places(q: QuadForm) -> Dict[str, bool]:
    """Per-place isotropy report (keys are ``"real"`` or the prime as a string)."""
    prof = profile(q)
    return {str(v.to_json()): locally_isotropic(prof, v) for v in _places_to_check(prof)}


def is_isotropic(q: QuadForm) -> bool:
    return is_isotropic_profile(profile(q))


def split_hyperbolic_plane(prof: InvariantProfile) -> InvariantProfile:
    """Profile of q' where q = H + q'."""
    n = prof.dim - 2
    det = -prof.det
    places = set(_places_to_check(prof)) | {finite(p) for p in det.primes}
    ramified = set()
    for v in places:
        # s_v(q) = s_v(q') * (-1, det q')_v
        s = _hasse_value(prof, v) * hilbert_symbol_sc(_MINUS_ONE, det, v)
        if s == -1:
            ramified.add(v)
    disc = det if signed_sign(n) == 1 else -det
    return InvariantProfile(dim=n, disc=disc, hasse=QuatClass(frozenset(ramified)), signature=prof.signature)


def anisotropic_profile(q: QuadForm) -> InvariantProfile:
    prof = profile(q)
    while is_isotropic_profile(prof):
        prof = split_hyperbolic_plane(prof)
    return prof


def witt_index(q: QuadForm) -> int:
    return (q.dim - anisotropic_profile(q).dim) // 2


def is_hyperbolic(q: QuadForm) -> bool:
    return q.dim % 2 == 0 and witt_index(q) == q.dim // 2


def arason_pfister_holds(q: QuadForm) -> bool:
    """An anisotropic form in I^3 has dimension 0 or at least 8."""
    if not in_In(q, 3):
        raise PreconditionError(f"{q!r} is not in I^3", invariant="I^3 membership (level 3)")
    dim = anisotropic_profile(q).dim
    return dim == 0 or dim >= 8


def is_isometric(q: QuadForm, q2: QuadForm) -> bool:
    return profile(q) == profile(q2)
