"""Operation registry shared by the command line and the REST layer.

Every operation takes already-decoded JSON arguments and returns a
JSON-ready dict, so both front ends only deal with transport.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Sequence, Tuple

from arasonlab.exceptions import UsageError
from arasonlab.services.arith import check_height, square_class
from arasonlab.services.brauer import Place, h3_symbol, hilbert_symbol, is_norm, quat_class
from arasonlab.services.hermitian import (
    HermForm,
    disc_algebra_h,
    disc_value,
    is_hyperbolic_h,
    is_isometric_h,
    is_similar_h,
    trace_form,
    witt_index_h,
)
from arasonlab.services.qform import (
    QuadForm,
    anisotropic_profile,
    clifford_class,
    e1,
    e2,
    e3,
    is_isometric,
    is_isotropic,
    is_similar,
    isotropy_places,
    orth_rel_odd,
    pfister_similar,
    profile,
    witt_index,
)
from arasonlab.services.unitary import (
    UnitaryInv,
    classify,
    dec_deg8,
    e3_hyp,
    e3_td,
    f3,
    find_admissible_lambda,
    is_hyperbolic_deg6,
    merkurjev_base,
    orth_descent_rel,
    quad_ext_check,
    rank2_factor,
    rel_arason,
    symp_descent_e3,
    theta_lambda,
    unit_orth_check,
)
from arasonlab.services.unitary import disc_algebra


@dataclass(frozen=True)
class Operation:
    group: str
    name: str
    handler: Callable[..., dict]
    params: Tuple[str, ...]
    optional: int = 0

    @property
    def usage(self) -> str:
        required = self.params[: len(self.params) - self.optional]
        extra = self.params[len(self.params) - self.optional:]
        return " ".join([self.group, self.name, *required, *(f"[{p}]" for p in extra)])


OPERATIONS: Dict[Tuple[str, str], Operation] = {}
GROUPS = ("qform", "herm", "unitary", "brauer")


def operation(group: str, name: str, *params: str, optional: int = 0):
    def decorator(func: Callable[..., dict]) -> Callable[..., dict]:
        OPERATIONS[(group, name)] = Operation(group, name, func, params, optional)
        return func
    return decorator


def operations_in(group: str) -> List[Operation]:
    return [op for (g, _), op in sorted(OPERATIONS.items()) if g == group]


def execute(group: str, name: str, args: Sequence[Any]) -> dict:
    """Run ``group name`` on decoded JSON arguments."""
    op = OPERATIONS.get((group, name))
    if op is None:
        known = ", ".join(o.name for o in operations_in(group)) or "none"
        raise UsageError(f"unknown operation '{group} {name}' (known {group} operations: {known})")
    lo, hi = len(op.params) - op.optional, len(op.params)
    if not lo <= len(args) <= hi:
        raise UsageError(f"'{group} {name}' takes {lo}{'' if lo == hi else f'-{hi}'} argument(s): {op.usage}")
    _bounded(args)
    return op.handler(*args)


def _bounded(obj: Any) -> None:
    """Apply the input height limit to every scalar in the decoded arguments."""
    if obj is None or isinstance(obj, bool):
        return
    if isinstance(obj, int):
        check_height(Fraction(obj))
    elif isinstance(obj, str):
        try:
            value = Fraction(obj.strip())
        except (ValueError, ZeroDivisionError):
            return
        check_height(value)
    elif isinstance(obj, dict):
        for item in obj.values():
            _bounded(item)
    elif isinstance(obj, (list, tuple)):
        for item in obj:
            _bounded(item)


# -- decoding ---------------------------------------------------------------

def _q(obj) -> QuadForm:
    return QuadForm.from_json(obj)


def _h(obj) -> HermForm:
    return HermForm.from_json(obj)


def _t(obj) -> UnitaryInv:
    return UnitaryInv.from_json(obj)


def _int_or_none(value) -> Any:
    return None if value is None else value.to_int()


# -- qform ------------------------------------------------------------------

@operation("qform", "profile", "FORM")
def _qform_profile(q):
    return {"profile": profile(_q(q)).to_json()}


@operation("qform", "isotropic", "FORM")
def _qform_isotropic(q):
    form = _q(q)
    return {"isotropic": is_isotropic(form), "places": isotropy_places(form)}


@operation("qform", "witt", "FORM")
def _qform_witt(q):
    form = _q(q)
    return {"witt_index": witt_index(form), "anisotropic_part": anisotropic_profile(form).to_json()}


@operation("qform", "isometric", "FORM", "FORM")
def _qform_isometric(q, q2):
    return {"isometric": is_isometric(_q(q), _q(q2))}


@operation("qform", "similar", "FORM", "FORM")
def _qform_similar(q, q2):
    lam = is_similar(_q(q), _q(q2))
    return {"similar": lam is not None, "lambda": _int_or_none(lam)}


@operation("qform", "e1", "FORM")
def _qform_e1(q):
    return {"e1": e1(_q(q)).to_int()}


@operation("qform", "e2", "FORM")
def _qform_e2(q):
    return {"e2": e2(_q(q)).to_json()}


@operation("qform", "e3", "FORM")
def _qform_e3(q):
    return {"e3": e3(_q(q)).to_json()}


@operation("qform", "clifford", "FORM")
def _qform_clifford(q):
    return {"clifford": clifford_class(_q(q)).to_json()}


@operation("qform", "pfister-similar", "FORM", "N", "FIRST_SLOT", optional=1)
def _qform_pfister_similar(q, n, first_slot=None):
    slots = pfister_similar(_q(q), int(n), first_slot)
    return {"similar": slots is not None, "slots": None if slots is None else [s.to_int() for s in slots]}


@operation("qform", "orth-odd", "FORM", "FORM")
def _qform_orth_odd(phi0, phi):
    return {"e3": orth_rel_odd(_q(phi0), _q(phi)).to_json()}


# -- herm -------------------------------------------------------------------

@operation("herm", "trace", "HERM")
def _herm_trace(h):
    return {"trace_form": trace_form(_h(h)).to_json()}


@operation("herm", "disc", "HERM")
def _herm_disc(h):
    return {"disc": disc_value(_h(h)).to_int()}


@operation("herm", "discalg", "HERM")
def _herm_discalg(h):
    return {"disc_algebra": disc_algebra_h(_h(h)).to_json()}


@operation("herm", "isometric", "HERM", "HERM")
def _herm_isometric(h, h2):
    return {"isometric": is_isometric_h(_h(h), _h(h2))}


@operation("herm", "similar", "HERM", "HERM")
def _herm_similar(h, h2):
    lam = is_similar_h(_h(h), _h(h2))
    return {"similar": lam is not None, "lambda": _int_or_none(lam)}


@operation("herm", "hyperbolic", "HERM")
def _herm_hyperbolic(h):
    return {"hyperbolic": is_hyperbolic_h(_h(h))}


@operation("herm", "witt", "HERM")
def _herm_witt(h):
    return {"witt_index": witt_index_h(_h(h))}


@operation("herm", "quad-ext", "HERM")
def _herm_quad_ext(h):
    return quad_ext_check(_h(h))


# -- unitary ----------------------------------------------------------------

@operation("unitary", "rel-e3", "INV0", "INV")
def _unitary_rel(t0, t):
    return rel_arason(_t(t0), _t(t)).to_json()


@operation("unitary", "e3-hyp", "INV")
def _unitary_e3_hyp(t):
    return e3_hyp(_t(t)).to_json()


@operation("unitary", "e3-td", "INV")
def _unitary_e3_td(t):
    return e3_td(_t(t)).to_json()


@operation("unitary", "f3", "INV0", "INV")
def _unitary_f3(t0, t):
    return {"f3": f3(_t(t0), _t(t)).to_json()}


@operation("unitary", "discalg", "INV")
def _unitary_discalg(t):
    return {"disc_algebra": disc_algebra(_t(t)).to_json()}


@operation("unitary", "theta", "INV0", "INV", "LAMBDA", optional=1)
def _unitary_theta(t0, t, lam=None):
    inv0, inv = _t(t0), _t(t)
    chosen = find_admissible_lambda(inv0, inv, [] if lam is None else [lam])
    theta = theta_lambda(inv0, inv, chosen)
    out = {"lambda": chosen.to_int(), "theta": theta.to_json()}
    if theta.degree % 2 == 0:
        out["disc_algebra"] = disc_algebra(theta).to_json()
    return out


@operation("unitary", "rank2", "INV0", "LAMBDA")
def _unitary_rank2(t0, lam):
    inv, value = rank2_factor(_t(t0), lam)
    return {"involution": inv.to_json(), "e3_hyp": value.to_json()}


@operation("unitary", "classify", "INV0", "INV")
def _unitary_classify(t0, t):
    inv0, inv = _t(t0), _t(t)
    return {"degree": inv0.degree, "isomorphic": classify(inv0, inv)}


@operation("unitary", "hyp6", "INV")
def _unitary_hyp6(t):
    return {"hyperbolic": is_hyperbolic_deg6(_t(t))}


@operation("unitary", "dec8", "INV")
def _unitary_dec8(t):
    slots = dec_deg8(_t(t))
    return {"decomposable": slots is not None, "slots": None if slots is None else [s.to_int() for s in slots]}


@operation("unitary", "merkurjev", "INV")
def _unitary_merkurjev(t):
    inv = _t(t)
    base = merkurjev_base(inv)
    return {"base": base.to_json(), "rel": rel_arason(base, inv).to_json()}


@operation("unitary", "unit-orth", "INV0", "INV")
def _unitary_unit_orth(t0, t):
    return {"e3": unit_orth_check(_t(t0), _t(t)).to_json()}


@operation("unitary", "descent-orth", "FORM0", "FORM", "DELTA")
def _unitary_descent_orth(q0, q, delta):
    value, coset = orth_descent_rel(_q(q0), _q(q), delta)
    return {"orthogonal": value.to_json(), "coset": coset.to_json(), "space": coset.space.to_json()}


@operation("unitary", "descent-symp", "PHI0", "PHI", "A", "DELTA")
def _unitary_descent_symp(phi0, phi, a, delta):
    value, coset = symp_descent_e3(_q(phi0), _q(phi), a, delta)
    return {"symplectic": value.to_json(), "coset": coset.to_json(), "space": coset.space.to_json()}


# -- brauer -----------------------------------------------------------------

@operation("brauer", "hilbert", "A", "B", "PLACE")
def _brauer_hilbert(a, b, place):
    return {"hilbert": hilbert_symbol(a, b, Place.from_json(place))}


@operation("brauer", "quat", "A", "B")
def _brauer_quat(a, b):
    cls = quat_class(a, b)
    return {"ramified": cls.to_json(), "split": cls.is_split}


@operation("brauer", "norm", "LAMBDA", "DELTA")
def _brauer_norm(lam, delta):
    return {"norm": is_norm(lam, delta), "lambda": square_class(lam).to_int()}


@operation("brauer", "symbol", "A", "B", "C")
def _brauer_symbol(a, b, c):
    return {"h3": h3_symbol(a, b, c).to_json()}
