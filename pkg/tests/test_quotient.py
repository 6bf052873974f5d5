from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chowcalc.algebra import ExactMatrix, GradedPoly, VariableTable
from chowcalc.quotient import (
    RingPresentation,
    SocleError,
    hilbert_function,
    ideal_degree_piece,
    is_poincare_duality,
    kappa1_power_presentation,
    m6_presentation,
    normal_form,
    pairing_matrix,
    total_dimension,
)

M6 = m6_presentation()
T = M6.table
K1 = GradedPoly.variable(T, "k1")
K2 = GradedPoly.variable(T, "k2")


# -- the ideal degree by degree ---------------------------------------------------


def test_ideal_piece_degree_3_is_the_first_relation():
    assert ideal_degree_piece(M6, 3) == ExactMatrix([[127, -2304]])


def test_ideal_piece_degree_4():
    # k1 * r1 and r2; k2 * r1 lands in degree 5
    assert ideal_degree_piece(M6, 4) == ExactMatrix(
        [[127, -2304, 0], [113, 0, -36864]]
    )


def test_ideal_piece_degree_5():
    # multipliers: k1^2 and k2 on r1, k1 on r2
    assert ideal_degree_piece(M6, 5) == ExactMatrix(
        [[127, -2304, 0], [0, 127, -2304], [113, 0, -36864]]
    )


# -- Hilbert functions -------------------------------------------------------------


def test_m6_hilbert_function():
    assert hilbert_function(M6, 6) == (1, 1, 2, 1, 1, 0, 0)


def test_m6_vanishes_in_degrees_5_through_8():
    assert hilbert_function(M6, 8)[5:] == (0, 0, 0, 0)


def test_m6_total_dimension_is_six():
    assert total_dimension(M6, 8) == 6


def test_genus_4_kappa_ring():
    assert hilbert_function(kappa1_power_presentation(4), 3) == (1, 1, 1, 0)


@pytest.mark.parametrize("g", range(2, 7))
def test_kappa1_rings_have_g_minus_1_ones(g):
    h = hilbert_function(kappa1_power_presentation(g), g + 2)
    assert h == (1,) * (g - 1) + (0,) * (g + 3 - (g - 1))


def test_free_algebra_hilbert():
    table = VariableTable(("k1",), (1,))
    free = RingPresentation(table, (), "free")
    assert hilbert_function(free, 2) == (1, 1, 1)


# -- normal forms --------------------------------------------------------------------


def test_normal_form_kappa1_cubed():
    assert normal_form(K1**3, M6) == Fraction(2304, 127) * K1 * K2


def test_normal_form_kappa1_fourth():
    assert normal_form(K1**4, M6) == Fraction(36864, 113) * K2**2


def test_normal_form_kappa1_squared_kappa2():
    # k1^2 k2 = (127/2304) k1^4 via k1*r1, then r2: 127*36864/(2304*113)
    assert Fraction(127 * 36864, 2304 * 113) == Fraction(2032, 113)
    assert normal_form(K1**2 * K2, M6) == Fraction(2032, 113) * K2**2


def test_normal_form_is_idempotent_and_fixes_representatives():
    for p in (K1**3, K1**4, K1**2 * K2, K1 * K2, K2**2):
        nf = normal_form(p, M6)
        assert normal_form(nf, M6) == nf
        assert normal_form(p - nf, M6).is_zero()


def test_normal_form_is_linear():
    a, b = K1**4, K1**2 * K2
    lhs = normal_form(3 * a - 7 * b, M6)
    rhs = 3 * normal_form(a, M6) - 7 * normal_form(b, M6)
    assert lhs == rhs


def _random_homogeneous(degree, coeffs):
    from chowcalc.algebra import monomial_basis

    basis = monomial_basis(T, degree)
    return GradedPoly(T, {e: c for e, c in zip(basis, coeffs)})


@given(
    st.integers(min_value=0, max_value=6),
    st.lists(st.integers(min_value=-9, max_value=9), min_size=4, max_size=4),
    st.lists(st.integers(min_value=-9, max_value=9), min_size=4, max_size=4),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
)
def test_normal_form_linearity_on_random_inputs(degree, acoeffs, bcoeffs, scalar):
    a = _random_homogeneous(degree, acoeffs)
    b = _random_homogeneous(degree, bcoeffs)
    lhs = normal_form(a + scalar * b, M6)
    rhs = normal_form(a, M6) + scalar * normal_form(b, M6)
    assert lhs == rhs


@given(
    st.integers(min_value=0, max_value=3),
    st.sampled_from([0, 1]),
)
def test_relation_multiples_reduce_to_zero(extra_degree, which):
    from chowcalc.algebra import monomial_basis

    rel = M6.relations[which]
    for exps in monomial_basis(T, extra_degree):
        assert normal_form(GradedPoly.monomial(T, exps) * rel, M6).is_zero()


def test_normal_form_difference_lies_in_ideal_row_space():
    p = K1**4
    diff = p - normal_form(p, M6)
    rows = list(ideal_degree_piece(M6, 4).entries)
    from chowcalc.algebra import monomial_basis, poly_to_vector

    vec = poly_to_vector(diff, monomial_basis(T, 4))
    stacked = ExactMatrix(rows + [vec])
    assert stacked.rank() == ExactMatrix(rows).rank()


# -- pairings ---------------------------------------------------------------------


def test_pairing_degree_2():
    mat = pairing_matrix(M6, 2, 4)
    assert mat == ExactMatrix(
        [
            [Fraction(36864, 113), Fraction(2032, 113)],
            [Fraction(2032, 113), Fraction(1)],
        ]
    )
    assert 36864 * 113 - 2032 * 2032 == 36608
    assert mat.determinant() == Fraction(36608, 12769)


def test_pairing_degree_0_is_the_socle_unit():
    mat = pairing_matrix(M6, 0, 4)
    assert mat == ExactMatrix([[1]])


def test_pairing_degree_1_is_nonzero():
    mat = pairing_matrix(M6, 1, 4)
    assert mat == ExactMatrix([[Fraction(2032, 113)]])


def test_pairing_transpose_symmetry():
    for i in range(5):
        a = pairing_matrix(M6, i, 4)
        b = pairing_matrix(M6, 4 - i, 4)
        assert a == b.transpose()


def test_pairing_needs_one_dimensional_socle():
    with pytest.raises(SocleError):
        pairing_matrix(M6, 1, 2)  # degree-2 piece has dimension 2


# -- Gorenstein test -----------------------------------------------------------------


def test_m6_is_a_poincare_duality_ring():
    report = is_poincare_duality(M6, 4)
    assert report
    assert report.hilbert[:5] == (1, 1, 2, 1, 1)


def test_monomial_kappa_ring_genus_6_is_poincare():
    assert is_poincare_duality(kappa1_power_presentation(6), 4)


def test_complete_intersection_is_poincare():
    # Q[k1,k2]/(k1^3, k2^2) with weights (1,2) is a complete intersection,
    # hence Gorenstein with socle k1^2 k2 in degree 4.
    pres = RingPresentation(T, (K1**3, K2**2), "ci")
    assert hilbert_function(pres, 5) == (1, 1, 2, 1, 1, 0)
    assert is_poincare_duality(pres, 4)


def test_truncated_polynomial_ring_fails_duality():
    pres = kappa1_power_presentation(4)  # Q[k1]/(k1^3)
    report = is_poincare_duality(pres, 4)
    assert not report
    assert not report.symmetric


def test_non_gorenstein_ring_fails_duality():
    # Q[k1,k2]/(k1^2, k1 k2): Hilbert (1,1,1,0,1,...) has a gap
    pres = RingPresentation(T, (K1**2, K1 * K2), "gap")
    assert hilbert_function(pres, 4) == (1, 1, 1, 0, 1)
    assert not is_poincare_duality(pres, 4)


def test_presentation_rejects_inhomogeneous_relations():
    with pytest.raises(ValueError):
        RingPresentation(T, (K1 + K2,), "bad")
