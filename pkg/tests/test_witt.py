import pytest
from hypothesis import assume, given, strategies as st

from arasonlab.exceptions import PreconditionError
from arasonlab.services.arith import SquareClass
from arasonlab.services.lab.generators import squarefree_pool
from arasonlab.services.qform import (
    QuadForm,
    anisotropic_profile,
    arason_pfister_holds,
    hyperbolic,
    is_hyperbolic,
    is_isometric,
    is_isotropic,
    is_similar,
    isotropy_places,
    local_isotropic,
    pfister,
    pfister_decision,
    pfister_similar,
    profile,
    scale,
    similarity_decision,
    witt_index,
)

entries = st.sampled_from(squarefree_pool(20))


def Q(*diag):
    return QuadForm.of(*diag)


class TestIsotropy:

    @pytest.mark.parametrize("diag, expected", [
        ((1, 1, -2), True),
        ((1, 1, 1), False),
        ((1, 1, -3), False),
        ((1, 1, 1, -3), True),
        ((1, 1, 1, -7), False),
        ((1, -1), True),
        ((1, -2), False),
        ((1, 2, 3, 5, -7), True),
        ((1,), False),
    ])
    def test_cases(self, diag, expected):
        assert is_isotropic(Q(*diag)) is expected

    def test_per_place_report(self):
        assert isotropy_places(Q(1, 1, 1)) == {"real": False, "2": False}
        report = isotropy_places(Q(1, 1, -3))
        assert report["real"] is True
        assert not all(report.values())

    def test_single_place(self):
        assert not local_isotropic(Q(1, 1, 1), "real")
        assert not local_isotropic(Q(1, 1, 1), 2)
        assert local_isotropic(Q(1, 1, 1), 3)

    @given(st.lists(entries, min_size=5, max_size=8))
    def test_indefinite_forms_of_dimension_five_are_isotropic(self, diag):
        q = QuadForm(tuple(diag))
        indefinite = any(a.sign > 0 for a in q.diag) and any(a.sign < 0 for a in q.diag)
        assert is_isotropic(q) is indefinite


class TestWittIndex:

    def test_witt_index(self):
        assert witt_index(Q(1, 1, 1, -3)) == 1
        assert witt_index(Q(1, -1, 1, -1)) == 2
        assert witt_index(Q(1, 1, 1, 1)) == 0
        assert anisotropic_profile(Q(1, -1, 3)).dim == 1

    def test_arason_pfister(self):
        assert arason_pfister_holds(pfister([-1, -1, -1]))
        assert arason_pfister_holds(hyperbolic(4))
        assert arason_pfister_holds(QuadForm(tuple([1] * 8)) + QuadForm(tuple([-1] * 8)))
        with pytest.raises(PreconditionError):
            arason_pfister_holds(Q(1, 1))

    def test_hyperbolic(self):
        assert is_hyperbolic(hyperbolic(3))
        assert is_hyperbolic(pfister([1, 5]))
        assert is_hyperbolic(pfister([-1, 2]))
        assert not is_hyperbolic(pfister([-1, 3]))
        assert not is_hyperbolic(Q(1, -1, 1))

    @given(st.lists(entries, min_size=1, max_size=6))
    def test_form_minus_itself_is_hyperbolic(self, diag):
        q = QuadForm(tuple(diag))
        assert is_hyperbolic(q + (-q))

    @given(st.lists(entries, min_size=1, max_size=6), st.randoms())
    def test_permutation_invariance(self, diag, rnd):
        shuffled = list(diag)
        rnd.shuffle(shuffled)
        assert is_isometric(QuadForm(tuple(diag)), QuadForm(tuple(shuffled)))


class TestIsometryAndSimilarity:

    def test_isometry(self):
        assert is_isometric(Q(1, 1), Q(2, 2))
        assert not is_isometric(Q(1, 1), Q(3, 3))
        assert not is_isometric(Q(1, 1), Q(1, 1, 1))

    def test_similarity_witness(self):
        q, q2 = Q(1, 1), Q(3, 3)
        lam = is_similar(q, q2)
        assert lam is not None
        assert is_isometric(scale(q, lam), q2)

    def test_not_similar(self):
        assert is_similar(Q(1, 1), Q(1, -1)) is None
        assert is_similar(Q(1, 1), Q(1, 1, 1)) is None
        assert not similarity_decision(Q(1, 1), Q(1, -1))

    def test_odd_dimension(self):
        lam = is_similar(Q(1, 2, 3), Q(-1, -2, -3))
        assert lam == SquareClass(-1)

    @given(st.lists(entries, min_size=2, max_size=6), st.integers(min_value=1, max_value=6),
           st.integers(min_value=2, max_value=5), st.randoms())
    def test_congruence_moves_preserve_isometry(self, diag, t, s, rnd):
        i, j = rnd.sample(range(len(diag)), 2)
        a, b = diag[i], diag[j]
        c = a + b * t * t
        assume(c != 0)
        moved = list(diag)
        # <a, b> represents c, so <a, b> = <c, abc>
        moved[i], moved[j] = c, a * b * c
        k = rnd.randrange(len(moved))
        moved[k] = moved[k] * s * s
        rnd.shuffle(moved)
        assert is_isometric(QuadForm(tuple(diag)), QuadForm(tuple(moved)))

    @given(st.lists(entries, min_size=1, max_size=5), st.lists(entries, min_size=1, max_size=5))
    def test_isometric_iff_same_profile(self, d1, d2):
        q1, q2 = QuadForm(tuple(d1)), QuadForm(tuple(d2))
        assert is_isometric(q1, q2) == (profile(q1) == profile(q2))

    @given(st.integers(min_value=1, max_value=4), st.data())
    def test_similarity_is_symmetric(self, n, data):
        q1, q2 = (QuadForm(tuple(data.draw(st.lists(entries, min_size=n, max_size=n)))) for _ in range(2))
        assert similarity_decision(q1, q2) == similarity_decision(q2, q1)

    @given(st.integers(min_value=1, max_value=3), st.data())
    def test_similarity_is_transitive(self, n, data):
        q1, q2, q3 = (QuadForm(tuple(data.draw(st.lists(entries, min_size=n, max_size=n)))) for _ in range(3))
        if similarity_decision(q1, q2) and similarity_decision(q2, q3):
            assert similarity_decision(q1, q3)

    @given(st.lists(entries, min_size=2, max_size=5), entries, entries, st.randoms())
    def test_composed_similarities(self, diag, lam, mu, rnd):
        q1 = QuadForm(tuple(diag))
        second = [lam * a for a in diag]
        rnd.shuffle(second)
        q3 = scale(QuadForm(tuple(second)), mu)
        witness = is_similar(q1, q3)
        assert witness is not None
        assert is_isometric(scale(q1, witness), q3)
        back = is_similar(q3, q1)
        assert back is not None
        assert is_isometric(scale(q3, back), q1)

    @given(st.lists(entries, min_size=2, max_size=6), entries)
    def test_scaled_forms_are_similar(self, diag, lam):
        q = QuadForm(tuple(diag))
        found = is_similar(q, scale(q, lam))
        assert found is not None
        assert is_isometric(scale(q, found), scale(q, lam))


class TestPfisterRecognition:

    def test_three_fold(self):
        assert pfister_similar(pfister([-1, -1, -1]), 3) == (SquareClass(-1),) * 3
        assert pfister_similar(hyperbolic(4), 3) == (SquareClass.one(),) * 3

    def test_scaled_pfister(self):
        slots = pfister_similar(scale(pfister([2, 3, 5]), 7), 3)
        assert slots is not None
        assert is_similar(pfister(slots), pfister([2, 3, 5])) is not None

    def test_not_pfister(self):
        assert pfister_similar(Q(1, 1, 1, 1, 1, 1, 1, -1), 3) is None
        assert not pfister_decision(Q(1, 1, 1, 1, 1, 1, 1, -1), 3)

    def test_four_fold_with_first_slot(self):
        q = pfister([-1, -1, -1, -1])
        slots = pfister_similar(q, 4, first_slot=-1)
        assert slots[0] == SquareClass(-1)
        assert is_similar(q, pfister(slots)) is not None
        assert not pfister_decision(QuadForm(tuple([1] * 12 + [-1] * 4)), 4)

    def test_first_slot_positive_on_definite_form(self):
        assert pfister_similar(QuadForm(tuple([1] * 16)), 4, first_slot=2) is None

    def test_argument_checks(self):
        with pytest.raises(ValueError):
            pfister_decision(hyperbolic(4), 5)
        with pytest.raises(PreconditionError):
            pfister_decision(hyperbolic(2), 3)
        with pytest.raises(ValueError):
            pfister_similar(hyperbolic(4), 3, first_slot=-1)
