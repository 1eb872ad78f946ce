"""Characteristic classes: tautological bundles, tensor formula, section invariants."""

import pytest

from pgpairs.chern import (
    ChernData,
    HodgeSummary,
    chi_y_ci,
    euler_characteristic_ci,
    middle_hodge,
    tangent_chern,
    tautological_chern,
    tensor_chern,
)
from pgpairs.errors import AmbientMismatch, InconsistentEuler, InvalidParameter
from pgpairs.pairs import hypersurface_poincare_oracle
from pgpairs.schubert import betti, get_ring, grassmannian_class


def test_tautological_chern_small():
    s_dual, q = tautological_chern(4)
    r = get_ring(4)
    assert s_dual.rank == 2
    assert s_dual.chern(1) == r.sigma(1)
    assert s_dual.chern(2) == r.sigma(1, 1)
    assert q.rank == 2
    assert q.chern(1) == r.sigma(1)
    assert q.chern(2) == r.sigma(2)


def test_quotient_chern_is_special_class():
    for n in (5, 6, 7):
        _, q = tautological_chern(n)
        r = get_ring(n)
        for i in range(1, n - 1):
            assert q.chern(i) == r.sigma(i)


def test_whitney_identity_to_top_degree():
    for n in range(4, 13):
        s_dual, q = tautological_chern(n)
        r = get_ring(n)
        c_s = r.one() - r.sigma(1) + r.sigma(1, 1)
        assert c_s * q.total() == r.one()


def test_tensor_line_bundles():
    r = get_ring(5)
    e = ChernData(r, 1, (r.sigma(1),))
    f = ChernData(r, 1, (r.sigma(1).scale(3),))
    t = tensor_chern(e, f)
    assert t.rank == 1
    assert t.chern(1) == r.sigma(1).scale(4)


def test_tangent_first_chern_class():
    for n in range(4, 13):
        r = get_ring(n)
        assert tangent_chern(n).chern(1) == r.sigma(1).scale(n)


def test_tangent_top_chern_integrates_to_cell_count():
    for n in range(4, 11):
        top = tangent_chern(n).chern(2 * (n - 2))
        assert top.integrate() == n * (n - 1) // 2
        assert top.integrate() == grassmannian_class(n).evaluate(1)


def test_tensor_rank_and_mismatch():
    s_dual, q = tautological_chern(6)
    assert tensor_chern(s_dual, q).rank == 2 * 4
    with pytest.raises(AmbientMismatch):
        tensor_chern(s_dual, tautological_chern(5)[0])


def test_chern_data_homogeneity_enforced():
    r = get_ring(4)
    with pytest.raises(InvalidParameter):
        ChernData(r, 1, (r.sigma(1) + r.sigma(2),))


def test_euler_characteristic_examples():
    assert euler_characteristic_ci(4, 0) == 6
    # quadric threefold; the expected value comes from the projective oracle
    assert euler_characteristic_ci(4, 1) == hypersurface_poincare_oracle(2, 4).evaluate(-1) == 4
    assert euler_characteristic_ci(6, 5) == -6
    assert euler_characteristic_ci(6, 6) == 24
    assert euler_characteristic_ci(8, 4) == 36
    assert euler_characteristic_ci(7, 7) == -98


def test_euler_characteristic_k0_is_cell_count():
    for n in range(4, 11):
        assert euler_characteristic_ci(n, 0) == grassmannian_class(n).evaluate(1)


def test_euler_characteristic_domain():
    with pytest.raises(InvalidParameter):
        euler_characteristic_ci(3, 0)
    with pytest.raises(InvalidParameter):
        euler_characteristic_ci(4, 5)
    with pytest.raises(InvalidParameter):
        euler_characteristic_ci(4, -1)


def test_chi_y_pure_tate_grassmannian():
    assert chi_y_ci(4, 0) == [1, -1, 2, -1, 1]
    for n in (5, 6, 7):
        expected = [(-1) ** p * betti(n, 2 * p) for p in range(2 * (n - 2) + 1)]
        assert chi_y_ci(n, 0) == expected


def test_chi_y_known_sections():
    assert chi_y_ci(6, 6) == [2, -20, 2]
    assert chi_y_ci(7, 7) == [0, 49, -49, 0]
    assert chi_y_ci(7, 7)[0] == 0  # chi(O) of the threefold with trivial canonical class
    assert chi_y_ci(9, 9)[0] == 0


def test_chi_zero_of_general_type_surface_section():
    # X(7,8) is a degree-42 surface with canonical class the hyperplane class,
    # so p_g = h^0(O(1)) = 13 and chi(O) = 14; Noether's formula cross-check:
    # 12 chi(O) = K^2 + chi_top = 42 + 126
    chi = chi_y_ci(7, 8)
    assert chi[0] == 14
    euler = euler_characteristic_ci(7, 8)
    assert euler == 126
    assert 12 * chi[0] == 42 + euler


def test_chi_y_at_minus_one_matches_euler():
    for n in range(4, 9):
        for k in range(0, 2 * (n - 2) + 1):
            chi = chi_y_ci(n, k)
            assert sum(c * (-1) ** p for p, c in enumerate(chi)) == euler_characteristic_ci(n, k)


def test_chi_y_at_zero_is_one_for_fano():
    for n in range(4, 9):
        for k in range(0, min(n, 2 * (n - 2) + 1)):
            assert chi_y_ci(n, k)[0] == 1, (n, k)


def test_middle_hodge_known_values():
    h = middle_hodge(6, 6)
    assert h.middle_hodge == (1, 20, 1)
    assert h.middle_betti == 22
    assert h.middle_hodge[0] >= 1  # h^{2,0} of the K3 section

    h = middle_hodge(6, 5)
    assert h.middle_hodge == (0, 5, 5, 0)
    assert h.middle_betti == 10

    h = middle_hodge(7, 7)
    assert h.middle_hodge == (1, 50, 50, 1)
    assert h.middle_betti == 102
    assert h.euler_char == -98

    h = middle_hodge(7, 8)
    assert h.dim == 2
    assert h.middle_hodge[0] >= 1  # h^{2,0} > 0 for the general-type surface


def test_middle_hodge_pure_tate_at_k0():
    for n in (4, 5, 6):
        h = middle_hodge(n, 0)
        d = 2 * (n - 2)
        assert h.middle_betti == betti(n, d)
        for p, val in enumerate(h.middle_hodge):
            assert val == (betti(n, d) if 2 * p == d else 0)


def test_middle_hodge_zero_dimensional_section():
    h = middle_hodge(4, 4)  # two points
    assert h.dim == 0
    assert h.middle_hodge == (2,)
    assert h.euler_char == 2
    h = middle_hodge(7, 10)  # deg Gr(2,7) = 42 points
    assert h.middle_hodge == (42,)


def test_middle_hodge_curve_section():
    # X(7,9) is a curve of degree 42 with canonical class twice the hyperplane
    h = middle_hodge(7, 9)
    assert h.dim == 1
    g = h.middle_hodge[0]
    assert h.middle_hodge == (g, g)
    assert h.euler_char == 2 - 2 * g
    assert 2 * g - 2 == 2 * 42  # adjunction: deg K = 2 deg X


def test_hodge_summary_invariants_enforced():
    with pytest.raises(InconsistentEuler):
        HodgeSummary(dim=1, euler_char=5, chi_y=(1, 1), middle_betti=2, middle_hodge=(1, 1))
    with pytest.raises(InconsistentEuler):
        HodgeSummary(dim=1, euler_char=0, chi_y=(1, 1), middle_betti=3, middle_hodge=(2, 1))


def test_engines_agree_on_invariants():
    cases = [(4, 1), (5, 4), (6, 5), (6, 6), (7, 6), (7, 7), (8, 4)]
    for n, k in cases:
        assert euler_characteristic_ci(n, k, "pieri") == euler_characteristic_ci(n, k, "lr")
        assert chi_y_ci(n, k, "pieri") == chi_y_ci(n, k, "lr")
        assert middle_hodge(n, k, "pieri") == middle_hodge(n, k, "lr")
