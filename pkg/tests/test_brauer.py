import pytest
from hypothesis import given, strategies as st

from arasonlab.exceptions import PreconditionError, TheoremViolation
from arasonlab.services.arith import square_class
from arasonlab.services.brauer import (
    H3,
    NONZERO,
    REAL,
    ZERO,
    Coset,
    Place,
    QuatClass,
    candidate_places,
    coset_space,
    finite,
    h3_cup,
    h3_symbol,
    hilbert_symbol,
    is_norm,
    quat_class,
    quat_mul,
    reduce,
    splits_over_quadratic,
    subgroup_alpha,
)
from arasonlab.services.lab.generators import squarefree_pool
from arasonlab.services.lab.oracles import holzer_isotropic

nonzero = st.integers(min_value=-10 ** 4, max_value=10 ** 4).filter(bool)
squarefree = st.sampled_from(squarefree_pool(30))
deltas = st.sampled_from([-1, 2, -2, 3, -3, 5, -7])


def _primitive_solution_mod(a: int, b: int, p: int) -> bool:
    """ax^2 + by^2 = z^2 has a solution mod p^k with x, y, z not all divisible by p.

    For squarefree a, b every such solution mod p^3 (mod 2^5 when p = 2)
    lifts to Z_p by Hensel's lemma.
    """
    m = p ** (5 if p == 2 else 3)
    squares = {z * z % m for z in range(m)}
    unit_squares = {z * z % m for z in range(m) if z % p}
    for x in range(m):
        for y in range(m):
            value = (a * x * x + b * y * y) % m
            if value in (squares if x % p or y % p else unit_squares):
                return True
    return False


def _places(*values):
    return candidate_places(*(square_class(v) for v in values))


class TestPlaces:

    def test_json(self):
        assert Place.from_json("real") == REAL
        assert Place.from_json("inf") == REAL
        assert Place.from_json(3) == finite(3)
        assert finite(3).to_json() == 3
        assert REAL.to_json() == "real"

    def test_finite_place_needs_prime(self):
        with pytest.raises(ValueError):
            Place(4)


class TestHilbertSymbol:

    @pytest.mark.parametrize("a, b, place, expected", [
        (-1, -1, REAL, -1),
        (-1, -1, finite(2), -1),
        (-1, -1, finite(3), 1),
        (2, 3, finite(3), -1),
        (2, 3, finite(2), -1),
        (2, 3, REAL, 1),
        (5, 7, finite(5), -1),
        ("1/2", 3, finite(3), -1),
    ])
    def test_known_values(self, a, b, place, expected):
        assert hilbert_symbol(a, b, place) == expected

    @given(nonzero, nonzero)
    def test_symmetric(self, a, b):
        for v in _places(a, b):
            assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)

    @given(nonzero)
    def test_a_minus_a(self, a):
        for v in _places(a):
            assert hilbert_symbol(a, -a, v) == 1

    @given(nonzero, nonzero, nonzero)
    def test_bimultiplicative(self, a, b, c):
        for v in _places(a, b, c):
            assert hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)

    @given(nonzero, nonzero)
    def test_reciprocity(self, a, b):
        product = 1
        for v in _places(a, b):
            product *= hilbert_symbol(a, b, v)
        assert product == 1

    @given(squarefree, squarefree, st.sampled_from([2, 3, 5]))
    def test_matches_local_solutions(self, a, b, p):
        expected = 1 if _primitive_solution_mod(a, b, p) else -1
        assert hilbert_symbol(a, b, finite(p)) == expected


class TestQuatClass:

    def test_hamilton_quaternions(self):
        assert quat_class(-1, -1).to_json() == ["real", 2]

    def test_ramification_examples(self):
        assert quat_class(-1, 3).to_json() == [2, 3]
        assert quat_class(2, 3).to_json() == [2, 3]
        assert quat_class(1, 5).is_split

    def test_odd_ramification_is_impossible(self):
        with pytest.raises(TheoremViolation):
            QuatClass(frozenset({REAL}))

    def test_json_round_trip(self):
        cls = quat_class(-1, -1)
        assert QuatClass.from_json(cls.to_json()) == cls

    def test_brauer_group_law(self):
        assert quat_mul(quat_class(-1, -1), quat_class(-1, -1)).is_split
        assert quat_mul(quat_class(-1, 3), quat_class(2, 3)) == quat_class(-2, 3)

    @given(nonzero, nonzero)
    def test_even_ramification(self, a, b):
        assert len(quat_class(a, b).ramified) % 2 == 0


class TestNorms:

    @pytest.mark.parametrize("lam, delta, expected", [
        (2, -1, True),
        (5, -1, True),
        (3, -1, False),
        (-1, -1, False),
        (-1, 2, True),
        (7, 2, True),
        (3, 2, False),
    ])
    def test_is_norm(self, lam, delta, expected):
        assert is_norm(lam, delta) is expected

    def test_square_delta_rejected(self):
        with pytest.raises(PreconditionError):
            is_norm(3, 4)

    def test_splits_over_quadratic(self):
        hamilton = quat_class(-1, -1)
        assert splits_over_quadratic(hamilton, -1)
        assert not splits_over_quadratic(hamilton, 2)
        assert splits_over_quadratic(QuatClass.split(), 5)

    @given(nonzero, st.sampled_from([-1, 2, -2, 3, -3, 5, -7]))
    def test_delta_algebra_splits_over_its_field(self, a, delta):
        assert splits_over_quadratic(quat_class(delta, a), delta)

    @given(squarefree, deltas)
    def test_is_norm_matches_ternary_search(self, lam, delta):
        # lam is a norm from Q(sqrt delta) iff x^2 - delta y^2 - lam z^2 has a nontrivial zero
        assert is_norm(lam, delta) is holzer_isotropic(1, -delta, -lam)


class TestH3:

    def test_symbol(self):
        assert h3_symbol(-1, -1, -1) == NONZERO
        assert h3_symbol(-1, 2, -1) == ZERO
        assert h3_symbol("-1/2", -3, -5) == NONZERO

    def test_cup(self):
        hamilton = quat_class(-1, -1)
        assert h3_cup(-1, hamilton) == NONZERO
        assert h3_cup(2, hamilton) == ZERO
        assert h3_cup(-1, quat_class(2, 3)) == ZERO

    def test_group(self):
        assert NONZERO + NONZERO == ZERO
        assert NONZERO - ZERO == NONZERO
        with pytest.raises(ValueError):
            type(ZERO)(2)

    def test_subgroups(self):
        assert subgroup_alpha(quat_class(-1, -1)).full
        assert not subgroup_alpha(quat_class(2, 3)).full
        assert subgroup_alpha(quat_class(-1, -1)).contains(NONZERO)
        assert not subgroup_alpha(QuatClass.split()).contains(NONZERO)

    def test_reduce(self):
        full = coset_space(quat_class(-1, -1))
        assert reduce(NONZERO, full).is_zero
        assert not reduce(NONZERO, H3).is_zero
        assert reduce(NONZERO, H3) + reduce(NONZERO, H3) == reduce(ZERO, H3)

    def test_coset_space_json(self):
        space = coset_space(quat_class(-1, -1))
        assert space.to_json()["modulus"] == "full"
        assert space.to_json()["alpha"] == ["real", 2]
        assert H3.to_json()["modulus"] == "zero"

    def test_nonsplit_b_out_of_scope(self):
        with pytest.raises(PreconditionError):
            coset_space(QuatClass.split(), beta_split=False)

    def test_cosets_in_different_spaces_do_not_add(self):
        full = coset_space(quat_class(-1, -1))
        with pytest.raises(PreconditionError):
            Coset(ZERO, full) + Coset(ZERO, H3)
