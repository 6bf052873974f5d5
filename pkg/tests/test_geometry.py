import pytest

from chowcalc.geometry import (
    Grassmannian,
    canonical_class,
    canonical_quadrics,
    fiber_F,
    forms_dim,
    genus_of_class,
    grass_betti,
    grass_dim,
    h0_hirzebruch,
    hirzebruch_aut_dim,
    hyperelliptic_dim,
    intersect,
    maroni_admissible,
    maroni_divisor_dim,
    maroni_k,
    plane_quintic_dim,
    plucker_degree,
    section_E,
    section_S,
    stratum_dimensions,
    trigonal_class,
    trigonal_stratum_dim,
)
from chowcalc.quotient import hilbert_function
from chowcalc.schur import Partition, lr_product, syt_count


# -- intersection form -----------------------------------------------------------


def test_section_self_intersections():
    assert intersect(section_E(2), section_E(2)) == -2
    assert intersect(section_S(2), section_S(2)) == 2
    for n in range(1, 5):
        assert intersect(section_S(n), section_E(n)) == 0
        assert intersect(fiber_F(n), fiber_F(n)) == 0
        assert intersect(section_E(n), fiber_F(n)) == 1


def test_canonical_class_degree():
    # K.(K) = 8 on every Hirzebruch surface
    for n in range(4):
        K = canonical_class(n)
        assert intersect(K, K) == 8


# -- adjunction --------------------------------------------------------------------


def test_genus_of_trigonal_class_f0():
    c = trigonal_class(6, 0)  # 3S + 4F on F_0
    assert intersect(c, c) == 24
    assert intersect(c, canonical_class(0)) == -14
    assert genus_of_class(c) == 6


def test_genus_of_fiber_is_zero():
    assert genus_of_class(fiber_F(3)) == 0


def test_genus_of_trigonal_class_f2():
    assert maroni_k(6, 2) == 1
    assert genus_of_class(trigonal_class(6, 2)) == 6


@pytest.mark.parametrize("g", range(4, 13))
def test_maroni_parity_and_adjunction(g):
    for n in range((g + 2) // 3 + 1):
        k = maroni_k(g, n)
        if maroni_admissible(g, n):
            assert k.denominator == 1
            assert genus_of_class(trigonal_class(g, n)) == g
        else:
            assert k.denominator == 2
            for kk in range(int(k) - 2, int(k) + 3):
                cls = 3 * section_S(n) + kk * fiber_F(n)
                assert genus_of_class(cls) != g


# -- section counts ---------------------------------------------------------------


def test_h0_of_moving_section():
    for n in range(5):
        assert h0_hirzebruch(section_S(n)) == n + 2


def test_h0_trigonal_f0_is_20():
    assert h0_hirzebruch(trigonal_class(6, 0)) == 4 * 5 == 20


def test_h0_trigonal_f2():
    # pieces of degrees 7, 5, 3, 1: 8 + 6 + 4 + 2
    assert h0_hirzebruch(trigonal_class(6, 2)) == 20


@pytest.mark.parametrize("g", range(4, 13))
def test_h0_of_canonical_scroll_piece_is_g(g):
    for n in range((g + 2) // 3 + 1):
        if not maroni_admissible(g, n):
            continue
        k = int(maroni_k(g, n))
        cls = section_S(n) + (n + k - 2) * fiber_F(n)
        if k >= 2 or n + k >= 2:
            assert h0_hirzebruch(cls) == (2 * n + k - 1) + (n + k - 1) == g


def test_h0_rejects_negative_section_multiples():
    with pytest.raises(ValueError):
        h0_hirzebruch(-1 * section_E(1))


# -- Grassmannians ------------------------------------------------------------------


def test_grass_dims():
    assert grass_dim(4, 10) == 24
    assert grass_dim(4, 10) + 16 == 40
    assert grass_dim(3, 15) == 36


def test_grass_hilbert_matches_box_partition_counts():
    for k, n in ((1, 4), (2, 4), (2, 5), (3, 6)):
        g = Grassmannian(k, n)
        h = hilbert_function(g.presentation(), g.dim + 2)
        expected = tuple(grass_betti(k, n, d) for d in range(g.dim + 3))
        assert h == expected


def test_plucker_degrees_match_tableau_counts():
    # all of k <= 3, n <= 7
    for k in (1, 2, 3):
        for n in range(k + 1, 8):
            rect = Partition(((n - k),) * k)
            assert plucker_degree(k, n) == syt_count(rect), (k, n)


def test_plucker_degree_g25_is_5():
    assert plucker_degree(2, 5) == 5


def test_schubert_duality_pairing():
    g = Grassmannian(2, 5)

    def complement(lam):
        padded = list(lam.parts) + [0] * (2 - lam.length)
        return Partition.of(*(3 - p for p in reversed(padded)))

    partitions = [
        Partition.of(*p)
        for p in [(), (1,), (2,), (1, 1), (3,), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)]
    ]
    for lam in partitions:
        dual = complement(lam)
        prod = g.schubert_class(lam) * g.schubert_class(dual)
        assert g.integrate(prod) == 1, lam


def test_schubert_pairing_against_lr_coefficients():
    g = Grassmannian(2, 5)
    # the pairing of complementary-degree classes equals the multiplicity of
    # the full rectangle in the LR product
    cases = [((2,), (2, 2)), ((1, 1), (2, 2)), ((2, 1), (2, 1)), ((3,), (3,))]
    rect = Partition((3, 3))
    for a, b in cases:
        lam, mu = Partition(a), Partition(b)
        expected = lr_product(lam, mu).multiplicity(rect)
        got = g.integrate(g.schubert_class(lam) * g.schubert_class(mu))
        assert got == expected, (a, b)


def test_schubert_duality_in_g36():
    g = Grassmannian(3, 6)
    rect = Partition((3, 3, 3))
    for parts in [(3, 2, 1), (2, 2, 2), (3, 3), (3, 1, 1)]:
        lam = Partition(parts)
        padded = list(lam.parts) + [0] * (3 - lam.length)
        dual = Partition.of(*(3 - p for p in reversed(padded)))
        prod = g.schubert_class(lam) * g.schubert_class(dual)
        assert g.integrate(prod) == 1 == lr_product(lam, dual).multiplicity(rect), parts


def test_integrate_rejects_wrong_degree():
    g = Grassmannian(2, 5)
    with pytest.raises(ValueError):
        g.integrate(g.sigma1() ** 3)


# -- linear systems and counts ----------------------------------------------------------


def test_forms_dims():
    assert forms_dim(5, 2) == 21
    assert forms_dim(2, 4) == 15
    assert forms_dim(2, 6) == 28


def test_nodal_sextics_give_p15():
    # plane sextics modulo scale: 27 projective dimensions; four assigned
    # nodes impose three conditions each
    assert forms_dim(2, 6) - 1 - 4 * 3 == 15


def test_canonical_quadric_counts():
    assert [canonical_quadrics(g) for g in (6, 5, 4)] == [6, 3, 1]
    for g in range(3, 10):
        assert canonical_quadrics(g) == g * (g + 1) // 2 - (3 * g - 3)


def test_quadrics_vs_forms_consistency():
    assert forms_dim(5, 2) - canonical_quadrics(6) == 15 == 3 * 6 - 3


# -- strata ------------------------------------------------------------------------------


def test_aut_dimensions():
    assert hirzebruch_aut_dim(0) == 6
    for n in range(1, 5):
        assert hirzebruch_aut_dim(n) == n + 5


def test_genus6_strata():
    assert stratum_dimensions(6) == (15, 13, 12, 11, 10)


def test_genus6_stratum_ingredients():
    assert trigonal_stratum_dim(6, 0) == 20 - 1 - 6 == 13
    assert plane_quintic_dim() == 21 - 1 - 8 == 12
    assert hyperelliptic_dim(6) == 15 - 4 == 11


def test_maroni_divisor_dimension():
    assert maroni_divisor_dim(6) == 20 - 1 - 7 == 12


def test_genus5_strata():
    assert stratum_dimensions(5) == (12, 11, 9)
    assert grass_dim(3, 15) - 24 == 12


def test_strata_only_for_known_genera():
    with pytest.raises(ValueError):
        stratum_dimensions(7)
