import pytest

from arasonlab.exceptions import PreconditionError
from arasonlab.services.arith import SquareClass, square_class
from arasonlab.services.brauer import NONZERO, ZERO, quat_class
from arasonlab.services.qform import QuadForm
from arasonlab.services.unitary import (
    UnitaryInv,
    absolute_difference,
    disc_algebra,
    e3_hyp,
    e3_td,
    f3,
    find_admissible_lambda,
    hyperbolic_inv,
    is_admissible_lambda,
    merkurjev_base,
    orth_extension,
    rank2_factor,
    rel_arason,
    theta_lambda,
    totally_decomposable,
)


def inv(delta, *diag):
    return UnitaryInv.of(delta, diag)


class TestUnitaryInv:

    def test_json_round_trip(self):
        tau = inv(-1, 1, 1, 3)
        assert tau.to_json() == {"delta": -1, "degree": 3, "diag": [1, 1, 3]}
        assert UnitaryInv.from_json(tau.to_json()) == tau

    def test_degree_mismatch(self):
        with pytest.raises(PreconditionError) as info:
            UnitaryInv.from_json({"delta": -1, "degree": 4, "diag": [1, 1, 1]})
        assert info.value.invariant == "rank = degree"

    def test_degree_one(self):
        with pytest.raises(PreconditionError):
            inv(-1, 1)

    def test_missing_fields(self):
        with pytest.raises(ValueError):
            UnitaryInv.from_json({"diag": [1, 1]})

    def test_rescaled(self):
        assert inv(-1, 1, 3).rescaled(3).rep.diag == inv(-1, 3, 1).rep.diag

    def test_constructions(self, gaussian):
        assert hyperbolic_inv(gaussian, 4).rep.diag == inv(-1, 1, -1, 1, -1).rep.diag
        assert totally_decomposable(gaussian, (2, 3, 5)).degree == 8
        with pytest.raises(PreconditionError):
            hyperbolic_inv(gaussian, 3)
        with pytest.raises(PreconditionError):
            totally_decomposable(gaussian, (2, 3))

    def test_discriminant_algebra(self):
        assert disc_algebra(inv(-1, 1, 1)) == quat_class(-1, -1)
        assert disc_algebra(inv(-1, 1, 1, 1, 1)).is_split
        assert disc_algebra(inv(-1, 1, 1, 1, 3)) == quat_class(-1, 3)


class TestRelativeInvariant:

    def test_identical_pair(self):
        tau = inv(-1, 1, 2, 3, 5)
        assert rel_arason(tau, tau).is_zero

    def test_definite_against_hyperbolic(self):
        value = rel_arason(inv(-1, 1, 1, 1, 1), inv(-1, 1, 1, -1, -1))
        assert value.value == NONZERO
        assert not value.is_zero
        assert value.to_json()["space"]["modulus"] == "zero"

    def test_real_ramified_discriminant_kills_everything(self):
        value = rel_arason(inv(-1, 1, 1, 1, -1), inv(-1, 1, -1, -1, -1))
        assert value.space.modulus.full
        assert value.is_zero

    def test_discriminant_algebras_must_agree(self):
        with pytest.raises(PreconditionError) as info:
            rel_arason(inv(-1, 1, 1, 1, 1), inv(-1, 1, 1, 1, 3))
        assert info.value.invariant == "discriminant algebras differ"

    def test_fields_and_degrees_must_agree(self):
        with pytest.raises(PreconditionError):
            rel_arason(inv(-1, 1, 1), inv(2, 1, 1))
        with pytest.raises(PreconditionError):
            rel_arason(inv(-1, 1, 1), inv(-1, 1, 1, 1, 1))

    def test_odd_degree_normalizes_representatives(self):
        assert rel_arason(inv(-1, 1, 1, 1), inv(-1, -1, -1, -1)).is_zero
        value = rel_arason(inv(-1, 1, 1, 1), inv(-1, 1, 1, -1))
        assert value.value == NONZERO
        assert value.space.modulus.full is False

    def test_rescaling_does_not_matter(self):
        tau0, tau = inv(-1, 1, 1, 1, 1), inv(-1, 1, 1, -1, -1)
        base = rel_arason(tau0, tau)
        assert base.same_coset(rel_arason(tau0.rescaled(3), tau.rescaled(-7)))

    def test_f3_vanishes(self):
        assert f3(inv(-1, 1, 1, 1, 1), inv(-1, 1, 1, -1, -1)) == ZERO
        assert f3(inv(-1, 1, 1, 1), inv(-1, 1, 1, -1)) == ZERO


class TestHyperbolicInvariants:

    def test_e3_hyp(self, gaussian):
        assert e3_hyp(inv(-1, 1, 1, 1, 1)).value == NONZERO
        assert e3_hyp(hyperbolic_inv(gaussian, 4)).value == ZERO
        assert e3_hyp(inv(2, 1, 1, 1, 1)).value == ZERO

    def test_e3_hyp_preconditions(self):
        with pytest.raises(PreconditionError) as info:
            e3_hyp(inv(-1, 1, 1, 1, 3))
        assert info.value.invariant == "split discriminant algebra"
        with pytest.raises(PreconditionError):
            e3_hyp(inv(-1, 1, 1, 1))

    def test_e3_td(self, gaussian):
        assert e3_td(totally_decomposable(gaussian, (-1, -1, -1))).is_zero
        assert e3_td(hyperbolic_inv(gaussian, 8)).is_zero
        assert e3_td(inv(-1, 1, 1, 1, 1, 1, 1, -1, -1)).value == NONZERO
        with pytest.raises(PreconditionError):
            e3_td(inv(-1, 1, 1, 1, 1))

    def test_absolute_difference(self):
        tau0, tau = inv(-1, 1, 1, 1, 1), inv(-1, 1, 1, -1, -1)
        assert absolute_difference(tau0, tau) == rel_arason(tau0, tau).value
        assert absolute_difference(inv(-1, 1, 1), inv(-1, 1, 2)) is None
        assert absolute_difference(inv(-1, 1, 1, 1), inv(-1, 1, 1, 1)) is None

    def test_orth_extension(self):
        assert orth_extension(inv(2, 1, 3)) == QuadForm.of(1, 3, -2, -6)


class TestOrthogonalSums:

    def test_theta_lambda(self):
        tau = inv(-1, 1, 1)
        theta = theta_lambda(tau, tau, 1)
        assert theta.degree == 4
        assert theta.rep.diag == inv(-1, 1, 1, -1, -1).rep.diag
        assert e3_hyp(theta).is_zero

    def test_even_degree_any_lambda(self):
        tau0, tau = inv(-1, 1, 1), inv(-1, 1, 2)
        assert find_admissible_lambda(tau0, tau) == SquareClass.one()
        assert find_admissible_lambda(tau0, tau, [5]) == square_class(5)
        assert is_admissible_lambda(tau0, tau, 3)

    def test_odd_degree_lambda_must_fit_the_discriminant(self):
        tau0, tau = inv(-1, 1, 1, 1), inv(-1, 1, 1, -1)
        assert find_admissible_lambda(tau0, tau, [1, -2]) == square_class(-2)
        assert is_admissible_lambda(tau0, tau, -2)
        assert not is_admissible_lambda(tau0, tau, 1)
        assert is_admissible_lambda(tau0, tau, find_admissible_lambda(tau0, tau, [1]))

    def test_orthogonal_sum_formula(self):
        tau0, tau = inv(-1, 1, 1, 1), inv(-1, 1, 1, -1)
        lam = find_admissible_lambda(tau0, tau)
        assert e3_hyp(theta_lambda(tau0, tau, lam)).value == rel_arason(tau0, tau).value

    def test_rank2_factor(self):
        tau0 = inv(-1, 1, 1)
        factor, value = rank2_factor(tau0, -1)
        assert factor.rep.diag == inv(-1, 1, 1, 1, 1).rep.diag
        assert value == NONZERO
        assert rank2_factor(tau0, 2)[1] == ZERO
        with pytest.raises(PreconditionError):
            rank2_factor(inv(-1, 1, 1, 1), 2)

    def test_merkurjev_base(self):
        tau = inv(-1, 1, 2, 3, 5)
        base = merkurjev_base(tau)
        assert base.to_json()["diag"] == [1, -1, 1, -30]
        assert disc_algebra(base) == disc_algebra(tau)
        with pytest.raises(PreconditionError):
            merkurjev_base(inv(-1, 1, 1))

    def test_merkurjev_vanishing_means_isotropic(self):
        isotropic = inv(-1, 1, -1, 2, 3)
        assert rel_arason(merkurjev_base(isotropic), isotropic).is_zero
