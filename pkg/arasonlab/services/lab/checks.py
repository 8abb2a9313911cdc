"""Executable laws, one class per check name.

A check draws an instance (plain JSON: ``delta``, ``forms`` and ``scalars``)
from an :class:`InstanceGenerator` and verifies one law on it. ``verify``
raises :class:`TheoremViolation` when the law fails and returns a short
outcome label that the runner tallies.
"""
from itertools import combinations_with_replacement
from typing import Dict, Iterator, List, Optional, Type

from arasonlab.exceptions import TheoremViolation
from arasonlab.services.arith import square_class
from arasonlab.services.brauer import (
    candidate_places,
    h3_cup,
    h3_symbol,
    hilbert_symbol_sc,
    quat_class,
    reduce,
)
from arasonlab.services.hermitian import HermContext, HermForm, hermitian_pfister, witt_index_h
from arasonlab.services.qform import QuadForm, arason_pfister_holds, e3, is_isotropic, orth_rel_odd, pfister, scale
from arasonlab.services.unitary import (
    UnitaryInv,
    classify_deg2,
    classify_deg3,
    classify_deg4,
    classify_deg6,
    dec_deg8,
    disc_algebra,
    e3_hyp,
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
from .generators import InstanceGenerator, class_int, squarefree_pool
from .oracles import holzer_isotropic

LAMBDAS = (1, -1, 2, -2, 3, -3, 5, -5)
RANK2_LAMBDAS = (1, -1, 2, -2, 3, -3, 5, -5, 7, -7)
RECIPROCITY_HEIGHT = 10 ** 6
TERNARY_HEIGHT = 50
NONZERO_TRIES = 40


def make_instance(delta: Optional[int], forms: Dict[str, List[int]], scalars: Optional[Dict[str, int]] = None) -> dict:
    return {"delta": delta, "forms": {k: list(v) for k, v in forms.items()}, "scalars": dict(scalars or {})}


def expect(condition: bool, message: str, **details) -> None:
    if not condition:
        raise TheoremViolation(message, details)


def _inv(instance: dict, name: str) -> UnitaryInv:
    return UnitaryInv.of(instance["delta"], instance["forms"][name])


def _form(instance: dict, name: str) -> QuadForm:
    return QuadForm(tuple(instance["forms"][name]))


def _diag(h: HermForm) -> List[int]:
    return [a.to_int() for a in h.diag]


def _iso_label(flag: bool) -> str:
    return "isomorphic" if flag else "non_isomorphic"


class LawCheck:
    name: str = ""
    summary: str = ""
    degrees: tuple = ()
    # minimum share of each outcome label, enforced by the runner on runs of 100 trials or more
    outcome_quota: Dict[str, float] = {}

    def generate(self, gen: InstanceGenerator) -> dict:
        raise NotImplementedError

    def verify(self, instance: dict) -> Optional[str]:
        raise NotImplementedError

    def all_instances(self, height: int) -> Optional[Iterator[dict]]:
        """Every instance with entries up to ``height``; None when the law has no exhaustive mode."""
        return None

    # shared generators
    def _pair(self, gen: InstanceGenerator, split: bool = False) -> dict:
        ctx = HermContext.of(gen.delta())
        tau0, tau = gen.matched_pair(ctx, gen.choice(self.degrees), split=split)
        return make_instance(ctx.to_json(), {"h0": _diag(tau0.rep), "h": _diag(tau.rep)})


CHECKS: Dict[str, LawCheck] = {}


def register(cls: Type[LawCheck]) -> Type[LawCheck]:
    CHECKS[cls.name] = cls()
    return cls


def get_check(name: str) -> LawCheck:
    try:
        return CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}; known checks: {', '.join(sorted(CHECKS))}") from None


# ---------------------------------------------------------------------------
# relative invariant laws
# ---------------------------------------------------------------------------

@register
class ChaslesCheck(LawCheck):
    name = "chasles"
    summary = "base-point change: e(t0, t2) = e(t0, t1) + e(t1, t2)"
    degrees = (3, 4, 6, 8)

    def generate(self, gen):
        delta = gen.delta()
        n = gen.choice(self.degrees)
        e0 = gen.entries(n)
        e1 = gen.matched_edit(delta, e0)
        e2 = gen.matched_edit(delta, e1)
        return make_instance(delta, {"h0": e0, "h1": e1, "h2": e2})

    def verify(self, instance):
        t0, t1, t2 = (_inv(instance, k) for k in ("h0", "h1", "h2"))
        direct = rel_arason(t0, t2).coset
        composed = rel_arason(t0, t1).coset + rel_arason(t1, t2).coset
        expect(direct == composed, "Chasles relation fails",
               direct=direct.to_json(), composed=composed.to_json())
        return "zero" if direct.is_zero else "nonzero"


@register
class Order2Check(LawCheck):
    name = "order2"
    summary = "symmetry and 2-torsion of the relative invariant"
    degrees = (3, 4, 6, 8)

    def generate(self, gen):
        return self._pair(gen)

    def verify(self, instance):
        t0, t = _inv(instance, "h0"), _inv(instance, "h")
        forward = rel_arason(t0, t)
        backward = rel_arason(t, t0)
        expect(forward.same_coset(backward), "relative invariant is not symmetric",
               forward=forward.to_json(), backward=backward.to_json())
        expect((forward.coset + forward.coset).is_zero, "relative invariant is not 2-torsion")
        return "zero" if forward.is_zero else "nonzero"


@register
class RescaleInvarianceCheck(LawCheck):
    name = "rescale_invariance"
    summary = "independence of the chosen representatives h0, h"
    degrees = (3, 4, 6, 8)

    def generate(self, gen):
        inst = self._pair(gen)
        inst["scalars"] = {"lam0": gen.entry(), "lam": gen.entry()}
        return inst

    def verify(self, instance):
        t0, t = _inv(instance, "h0"), _inv(instance, "h")
        lam0, lam = instance["scalars"]["lam0"], instance["scalars"]["lam"]
        base = rel_arason(t0, t)
        moved = rel_arason(t0.rescaled(lam0), t.rescaled(lam))
        expect(base.same_coset(moved), "relative invariant depends on the representatives",
               base=base.to_json(), rescaled=moved.to_json())
        return None


@register
class F3ZeroCheck(LawCheck):
    name = "f3_zero"
    summary = "f3 vanishes when B is split"
    degrees = (2, 3, 4, 5, 6, 8)

    def generate(self, gen):
        return self._pair(gen)

    def verify(self, instance):
        value = f3(_inv(instance, "h0"), _inv(instance, "h"))
        expect(value.is_zero, "f3 is nonzero for a split algebra", f3=value.to_json())
        return None


@register
class AbsoluteDifferenceCheck(LawCheck):
    name = "absolute_difference"
    summary = "e(t0, t) = e3_hyp(t) + e3_hyp(t0) when both discriminant algebras split"
    degrees = (2, 4, 6, 8)

    def generate(self, gen):
        return self._pair(gen, split=True)

    def verify(self, instance):
        t0, t = _inv(instance, "h0"), _inv(instance, "h")
        rel = rel_arason(t0, t)
        diff = e3_hyp(t).value + e3_hyp(t0).value
        expect(rel.value == diff, "relative invariant differs from the difference of absolute invariants",
               rel=rel.to_json(), difference=diff.to_json())
        return "zero" if diff.is_zero else "nonzero"


# ---------------------------------------------------------------------------
# orthogonal sums and rank-2 factors
# ---------------------------------------------------------------------------

@register
class ThetaSumCheck(LawCheck):
    name = "theta_sum"
    summary = "e(t0, t) = e3_hyp(theta_lam) for admissible lam"
    degrees = (2, 3, 4, 6)

    def generate(self, gen):
        inst = self._pair(gen)
        inst["scalars"] = {"lam": gen.choice(LAMBDAS)}
        return inst

    def verify(self, instance):
        t0, t = _inv(instance, "h0"), _inv(instance, "h")
        lam = find_admissible_lambda(t0, t, [instance["scalars"]["lam"]])
        rel = rel_arason(t0, t)
        hyp = e3_hyp(theta_lambda(t0, t, lam))
        expect(reduce(hyp.value, rel.space) == rel.coset, "orthogonal-sum formula fails",
               lam=lam.to_int(), rel=rel.to_json(), theta=hyp.to_json())
        return "zero" if rel.is_zero else "nonzero"


@register
class ThetaLambdaIndepCheck(LawCheck):
    name = "theta_lambda_indep"
    summary = "e3_hyp(theta_l1) + e3_hyp(theta_l2) = (l1 l2) . [D(t0)]"
    degrees = (2, 4, 6)

    def generate(self, gen):
        inst = self._pair(gen)
        inst["scalars"] = {"lam1": gen.choice(LAMBDAS), "lam2": gen.choice(LAMBDAS)}
        return inst

    def verify(self, instance):
        t0, t = _inv(instance, "h0"), _inv(instance, "h")
        l1, l2 = instance["scalars"]["lam1"], instance["scalars"]["lam2"]
        first = e3_hyp(theta_lambda(t0, t, l1)).value
        second = e3_hyp(theta_lambda(t0, t, l2)).value
        cup = h3_cup(l1 * l2, disc_algebra(t0))
        expect(first + second == cup, "difference law for theta_lambda fails",
               first=first.to_json(), second=second.to_json(), cup=cup.to_json())
        return "nonzero" if cup.real_bit else "zero"


@register
class Rank2Check(LawCheck):
    name = "rank2"
    summary = "e3_hyp(ad<1, -lam> x t0) = (lam) . [D(t0)]"
    degrees = (2, 4)

    def generate(self, gen):
        delta = gen.delta()
        return make_instance(delta, {"h0": gen.entries(gen.choice(self.degrees))},
                             {"lam": gen.choice(RANK2_LAMBDAS)})

    def verify(self, instance):
        _, value = rank2_factor(_inv(instance, "h0"), instance["scalars"]["lam"])
        return "zero" if value.is_zero else "nonzero"


# ---------------------------------------------------------------------------
# classification in low degree
# ---------------------------------------------------------------------------

@register
class Deg2QuatCheck(LawCheck):
    name = "deg2_quat"
    summary = "quaternion case: isomorphic iff equal discriminant algebras; D(ad<<a>>) = (delta, a)"
    degrees = (2,)

    def generate(self, gen):
        delta = gen.delta()
        e0 = gen.entries(2)
        e1 = gen.matched_edit(delta, e0) if gen.rng.random() < 0.5 else gen.entries(2)
        return make_instance(delta, {"h0": e0, "h": e1}, {"a": gen.entry()})

    def verify(self, instance):
        delta, a = instance["delta"], instance["scalars"]["a"]
        pf = disc_algebra(UnitaryInv.of(delta, [1, -a]))
        expect(pf == quat_class(delta, a), "D(ad<<a>>) differs from (delta, a)",
               disc=pf.to_json(), quat=quat_class(delta, a).to_json())
        return _iso_label(classify_deg2(_inv(instance, "h0"), _inv(instance, "h")))


@register
class Deg3ClassifyCheck(LawCheck):
    name = "deg3_classify"
    summary = "degree 3: isomorphic iff the relative invariant vanishes"
    degrees = (3,)

    def generate(self, gen):
        delta = gen.delta()
        e0 = gen.entries(3)
        e1 = gen.matched_edit(delta, e0) if gen.rng.random() < 0.5 else gen.entries(3)
        return make_instance(delta, {"h0": e0, "h": e1})

    def verify(self, instance):
        return _iso_label(classify_deg3(_inv(instance, "h0"), _inv(instance, "h")))


@register
class Deg4ClassifyCheck(LawCheck):
    name = "deg4_classify"
    summary = "degree 4: isomorphic iff the relative invariant vanishes in its coset space"
    degrees = (4,)
    outcome_quota = {"isomorphic": 0.1, "non_isomorphic": 0.1}

    def generate(self, gen):
        """Half of the pairs are similar by construction; the rest are redrawn until the invariant is nonzero."""
        if gen.rng.random() < 0.5:
            delta = gen.delta()
            e0 = gen.entries(4)
            return make_instance(delta, {"h0": e0, "h": gen.isometric_edit(delta, e0)})
        for _ in range(NONZERO_TRIES):
            delta = gen.delta()
            e0 = gen.entries(4)
            e1 = gen.matched_edit(delta, e0)
            if not rel_arason(UnitaryInv.of(delta, e0), UnitaryInv.of(delta, e1)).is_zero:
                break
        return make_instance(delta, {"h0": e0, "h": e1})

    def verify(self, instance):
        return _iso_label(classify_deg4(_inv(instance, "h0"), _inv(instance, "h")))


@register
class MerkurjevDeg4Check(LawCheck):
    name = "merkurjev_deg4"
    summary = "relative to ad(H + <1, -d>) the invariant vanishes iff the involution is isotropic"
    degrees = (4,)

    def generate(self, gen):
        return make_instance(gen.delta(), {"h": gen.entries(4)})

    def verify(self, instance):
        t = _inv(instance, "h")
        base = merkurjev_base(t)
        zero = rel_arason(base, t).is_zero
        isotropic = witt_index_h(t.rep) > 0
        expect(zero == isotropic, "vanishing does not match isotropy", zero=zero, isotropic=isotropic)
        classify_deg4(base, t)
        return "isotropic" if isotropic else "anisotropic"


@register
class Deg6ClassifyCheck(LawCheck):
    name = "deg6_classify"
    summary = "degree 6, split discriminant algebras: isomorphic iff the invariant vanishes"
    degrees = (6,)

    def generate(self, gen):
        return self._pair(gen, split=True)

    def verify(self, instance):
        return _iso_label(classify_deg6(_inv(instance, "h0"), _inv(instance, "h")))


@register
class Deg6HyperbolicCheck(LawCheck):
    name = "deg6_hyperbolic"
    summary = "degree 6: hyperbolic iff D split and e3_hyp = 0"
    degrees = (6,)

    def generate(self, gen):
        delta = gen.delta()
        kind = gen.choice(("hyperbolic", "split", "random"))
        if kind == "hyperbolic":
            entries = gen.hyperbolic_entries(6)
        elif kind == "split":
            entries = gen.split_disc_entries(delta, 6)
        else:
            entries = gen.entries(6)
        return make_instance(delta, {"h": entries})

    def verify(self, instance):
        return "hyperbolic" if is_hyperbolic_deg6(_inv(instance, "h")) else "not_hyperbolic"


@register
class Deg8TdCheck(LawCheck):
    name = "deg8_td"
    summary = "degree 8: totally decomposable iff D split and e3_td = 0, with a verified witness"
    degrees = (8,)

    def generate(self, gen):
        delta = gen.delta()
        kind = gen.choice(("decomposable", "hyperbolic", "split", "random"))
        if kind == "decomposable":
            return make_instance(delta, {"slots": gen.entries(3)}, {"scale": gen.entry()})
        if kind == "hyperbolic":
            entries = gen.hyperbolic_entries(8)
        elif kind == "split":
            entries = gen.split_disc_entries(delta, 8)
        else:
            entries = gen.entries(8)
        return make_instance(delta, {"h": entries})

    def verify(self, instance):
        forms = instance["forms"]
        if "slots" in forms:
            rep = hermitian_pfister(HermContext.of(instance["delta"]), forms["slots"])
            entries = [class_int(a.to_int(), instance["scalars"]["scale"]) for a in rep.diag]
            t = UnitaryInv.of(instance["delta"], entries)
            slots = dec_deg8(t)
            expect(slots is not None, "constructed decomposable involution decided not decomposable",
                   slots=forms["slots"])
        else:
            slots = dec_deg8(_inv(instance, "h"))
        return "decomposable" if slots is not None else "not_decomposable"


# ---------------------------------------------------------------------------
# descents and quadratic extensions
# ---------------------------------------------------------------------------

@register
class SympDescentCheck(LawCheck):
    name = "symp_descent"
    summary = "symplectic descent formula against the relative invariant"
    degrees = (1, 2, 3, 4)

    def generate(self, gen):
        m = gen.choice(self.degrees)
        return make_instance(gen.delta(), {"phi0": gen.entries(m), "phi": gen.entries(m)}, {"a": gen.entry()})

    def verify(self, instance):
        symp, coset = symp_descent_e3(_form(instance, "phi0"), _form(instance, "phi"),
                                      instance["scalars"]["a"], instance["delta"])
        return "zero" if coset.is_zero else "nonzero"


@register
class OrthDescentCheck(LawCheck):
    name = "orth_descent"
    summary = "(delta) . [C(q - q0)] against the relative invariant"
    degrees = (2, 3, 4, 5)

    def generate(self, gen):
        delta = gen.delta()
        n = gen.choice(self.degrees)
        q0 = gen.entries(n)
        q = gen.matched_edit(delta, q0) if n % 2 == 0 else gen.entries(n)
        return make_instance(delta, {"q0": q0, "q": q})

    def verify(self, instance):
        value, coset = orth_descent_rel(_form(instance, "q0"), _form(instance, "q"), instance["delta"])
        return "zero" if coset.is_zero else "nonzero"


@register
class UnitOrthCheck(LawCheck):
    name = "unit_orth"
    summary = "relative invariant of the orthogonal extensions equals the unitary one"
    degrees = (3, 4, 6)

    def generate(self, gen):
        return self._pair(gen)

    def verify(self, instance):
        unit_orth_check(_inv(instance, "h0"), _inv(instance, "h"))
        return None


@register
class QuadExtCheck(LawCheck):
    name = "quad_ext"
    summary = "e1 and Clifford invariant of the trace form predicted from h"
    degrees = (1, 2, 3, 4, 5, 6, 7, 8)

    def generate(self, gen):
        h = gen.herm(HermContext.of(gen.delta()), gen.choice(self.degrees))
        return make_instance(h.ctx.to_json(), {"h": _diag(h)})

    def verify(self, instance):
        quad_ext_check(HermForm.of(instance["delta"], instance["forms"]["h"]))
        return None


@register
class OrthOddCheck(LawCheck):
    name = "orth_odd"
    summary = "odd-degree orthogonal invariant: symbol value, symmetry and rescaling"
    degrees = (5, 7)

    def generate(self, gen):
        n = gen.choice(self.degrees)
        x, u, v = gen.entry(), gen.entry(), gen.entry()
        block = [x, class_int(-x, u), class_int(-x, v), class_int(x, u, v)]
        rest = gen.entries(n - 4)
        return make_instance(None, {"phi0": block + rest, "phi": [-a for a in block] + rest},
                             {"u": u, "v": v, "lam": gen.entry()})

    def verify(self, instance):
        phi0, phi = _form(instance, "phi0"), _form(instance, "phi")
        u, v, lam = (instance["scalars"][k] for k in ("u", "v", "lam"))
        value = orth_rel_odd(phi0, phi)
        expect(value == h3_symbol(-1, u, v), "odd orthogonal invariant differs from (-1)(u)(v)",
               value=value.to_json())
        expect(orth_rel_odd(phi, phi0) == value, "odd orthogonal invariant is not symmetric")
        expect(orth_rel_odd(phi0, scale(phi, lam)) == value, "odd orthogonal invariant depends on scaling")
        return "zero" if value.is_zero else "nonzero"


# ---------------------------------------------------------------------------
# local-global sanity laws
# ---------------------------------------------------------------------------

@register
class ReciprocityCheck(LawCheck):
    name = "reciprocity"
    summary = "Hilbert reciprocity: prod_v (a, b)_v = 1"

    def generate(self, gen):
        return make_instance(None, {}, {"a": gen.nonzero_int(RECIPROCITY_HEIGHT),
                                        "b": gen.nonzero_int(RECIPROCITY_HEIGHT)})

    def verify(self, instance):
        a, b = square_class(instance["scalars"]["a"]), square_class(instance["scalars"]["b"])
        ramified = {v for v in candidate_places(a, b) if hilbert_symbol_sc(a, b, v) == -1}
        expect(len(ramified) % 2 == 0, "odd number of ramified places",
               ramified=sorted(str(v) for v in ramified))
        expect(ramified == set(quat_class(a, b).ramified), "ramification set differs from quat_class")
        return "split" if not ramified else "division"


@register
class E3PfisterCheck(LawCheck):
    name = "e3_pfister"
    summary = "e3(<<a, b, c>>) = (a)(b)(c) and its anisotropic part has dimension 0 or 8"

    def generate(self, gen):
        return make_instance(None, {}, {"a": gen.entry(), "b": gen.entry(), "c": gen.entry()})

    def verify(self, instance):
        a, b, c = (instance["scalars"][k] for k in ("a", "b", "c"))
        q = pfister((a, b, c))
        value = e3(q)
        expect(value == h3_symbol(a, b, c), "e3 of a 3-fold Pfister form differs from the symbol",
               e3=value.to_json())
        expect(arason_pfister_holds(q), "anisotropic part of a Pfister form in I^3 has dimension 2, 4 or 6")
        return "nonzero" if value.real_bit else "zero"


@register
class HmBruteforceCheck(LawCheck):
    name = "hm_bruteforce"
    summary = "ternary isotropy agrees with Holzer-bounded search"

    def generate(self, gen):
        pool = squarefree_pool(TERNARY_HEIGHT)
        return make_instance(None, {"q": [gen.choice(pool) for _ in range(3)]})

    def all_instances(self, height):
        """Sorted squarefree triples up to ``height``, one of each pair q, -q."""
        for q in combinations_with_replacement(sorted(squarefree_pool(height)), 3):
            if sum(a < 0 for a in q) < 2:
                yield make_instance(None, {"q": list(q)})

    def verify(self, instance):
        a, b, c = instance["forms"]["q"]
        local = is_isotropic(QuadForm((a, b, c)))
        brute = holzer_isotropic(a, b, c)
        expect(local == brute, "Hasse-Minkowski isotropy differs from brute force", local=local, brute=brute)
        return "isotropic" if local else "anisotropic"
