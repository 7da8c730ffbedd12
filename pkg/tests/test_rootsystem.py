from fractions import Fraction

import pytest

from nilcoh.rootsystem import build, expected_num_positive


def test_cartan_matrices_basic():
    def rows(rs):
        return [list(r) for r in rs.cartan]

    assert rows(build("A2")) == [[2, -1], [-1, 2]]
    assert rows(build("B2")) == [[2, -1], [-2, 2]]
    assert rows(build("G2")) == [[2, -3], [-1, 2]]


def test_positive_root_counts():
    for label, count in [("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4),
                         ("B3", 9), ("C3", 9), ("D4", 12), ("G2", 6),
                         ("F4", 24), ("E6", 36)]:
        rs = build(label)
        assert len(rs.positive_roots) == count
        assert expected_num_positive(rs.letter, rs.rank) == count


def test_coxeter_numbers():
    for label, h in [("A1", 2), ("A2", 3), ("A3", 4), ("B2", 4), ("G2", 6),
                     ("F4", 12), ("E6", 12)]:
        assert build(label).coxeter_number == h


def test_a2_convex_order_pinned():
    rs = build("A2")
    # root coordinates: alpha1, alpha1+alpha2, alpha2
    assert list(rs.positive_roots) == [(1, 0), (1, 1), (0, 1)]


def test_convex_order_property():
    # if gamma_a + gamma_b = gamma_k then a < k < b for a < b
    for label in ("A2", "A3", "B2", "B3", "G2"):
        rs = build(label)
        index = {g: i for i, g in enumerate(rs.positive_roots)}
        for a, ga in enumerate(rs.positive_roots):
            for b in range(a + 1, len(rs.positive_roots)):
                s = tuple(x + y for x, y in zip(ga, rs.positive_roots[b]))
                if s in index:
                    assert a < index[s] < b


def test_pairing_and_inner():
    rs = build("B2")
    alpha2 = (0, 1)  # the short simple root
    alpha1 = (1, 0)
    assert rs.inner_roots(alpha2, alpha2) == 2  # short roots normalized
    assert rs.inner_roots(alpha1, alpha1) == 4
    # pairing of rho with the highest root beta0: h - 1
    assert rs.pairing(rs.rho, rs.positive_roots[0]) in range(1, 10)


def test_minuscule():
    assert build("B2").minuscule_weights() == [(0, 1)]
    assert build("G2").minuscule_weights() == []
    assert sorted(build("A2").minuscule_weights()) == [(0, 1), (1, 0)]


def test_fund_root_roundtrip():
    rs = build("G2")
    for g in rs.positive_roots:
        f = rs.root_to_fund(g)
        back = rs.fund_to_root(f)
        assert tuple(Fraction(c) for c in g) == tuple(back)


def test_nilradical_and_levi_split():
    rs = build("B2")
    assert set(rs.phi_j_plus({0})) | set(rs.nilradical_roots({0})) == \
        set(rs.positive_roots)
    assert list(rs.nilradical_roots({0, 1})) == []


def test_bad_type_rejected():
    with pytest.raises(ValueError):
        build("H3")
    with pytest.raises(ValueError):
        build("B1")
