import pytest

from nilcoh.alcoves import PreconditionError
from nilcoh.ring import (BasisClass, CohomologyRing, CycScalar,
                         check_ring_laws, defining_relations_hold,
                         merge_sign, nil_product, quantum_nil_product,
                         quantum_straighten, square_free_basis,
                         straightening_confluent)
from nilcoh.rootsystem import build
from nilcoh.weyl import enumerate_group


def _setup(label):
    rs = build(label)
    return rs, enumerate_group(rs)


def test_cyc_scalar_arithmetic():
    a = CycScalar(-1, 3, 5)
    b = CycScalar(-1, 4, 5)
    assert a * b == CycScalar(1, 2, 5)
    assert CycScalar.zero(5) * a == CycScalar.zero(5)
    assert (-a) == CycScalar(1, 3, 5)
    assert CycScalar(1, 7, 1).exponent == 0  # classical modulus


def test_merge_sign():
    assert merge_sign((0,), (1, 2)) == 1
    assert merge_sign((1,), (0,)) == -1
    assert merge_sign((0, 2), (1,)) == -1
    assert merge_sign((0,), (0,)) == 0


def test_nil_product_identity_and_vanishing():
    rs, g = _setup("A2")
    s1, s2 = g.simple
    assert nil_product(s1, g.identity, rs, g) == (1, s1)
    assert nil_product(s1, s2, rs, g) is None  # union not an inversion set
    assert nil_product(s1, s1, rs, g) is None


def test_nil_product_top_class():
    rs, g = _setup("A2")
    s1, s2 = g.simple
    s2s1 = g.multiply(s2, s1)
    # Phi(s1) = {alpha1} (index 0), Phi(s2s1) = {alpha1+alpha2, alpha2}
    # (indices 1, 2): merge (0 | 1, 2) is already sorted
    assert nil_product(s1, s2s1, rs, g) == (1, g.longest)
    s1s2 = g.multiply(s1, s2)
    # Phi(s2) = {alpha2} = index 2, Phi(s1s2) = indices {0, 1}:
    # merge (2 | 0, 1) needs two transpositions
    assert nil_product(s2, s1s2, rs, g) == (1, g.longest)
    # and in the other order one transposition each way
    assert nil_product(s1s2, s2, rs, g) == (1, g.longest)


def test_classical_laws():
    for label, p in (("A2", 7), ("B2", 11), ("A3", 11)):
        rs, g = _setup(label)
        ring = CohomologyRing(rs, g, (), "classical", p)
        assert all(check_ring_laws(ring).values())


def test_classical_bound_gate_and_unsafe():
    rs, g = _setup("B2")  # 2(h-1) = 6
    with pytest.raises(PreconditionError):
        CohomologyRing(rs, g, (), "classical", 5)
    ring = CohomologyRing(rs, g, (), "classical", 5, unsafe=True)
    assert ring.formal_only
    assert "FORMAL MODEL" in ring.label()
    with pytest.raises(PreconditionError):
        CohomologyRing(rs, g, (0,), "classical", 7)  # needs p > 3(h-1) = 9


def test_full_product_tensor_structure():
    rs, g = _setup("A2")
    ring = CohomologyRing(rs, g, (), "classical", 7)
    s1 = g.simple[0]
    x = ring.basis_class((1, 0, 0), g.identity)
    y = ring.basis_class((0, 0, 0), s1)
    prod = ring.multiply(x, y)
    (cls, scal), = prod.terms.items()
    assert cls == BasisClass((1, 0, 0), s1) and scal.sign == 1
    # odd class squared is zero
    assert ring.multiply(y, y).is_zero()
    # identity law
    assert ring.multiply(ring.one(), x) == x


def test_quantum_straighten_examples():
    rs = build("A2")
    # sorted square-free monomial is fixed
    assert quantum_straighten((0, 1, 2), rs, 5) == (CycScalar.one(5), (0, 1, 2))
    # repeated index dies
    scal, _ = quantum_straighten((1, 1), rs, 5)
    assert scal.sign == 0
    # x_{alpha1+alpha2} x_{alpha1} -> -zeta^{(alpha1, alpha1+alpha2)} = -zeta^1
    scal, srt = quantum_straighten((1, 0), rs, 5)
    assert srt == (0, 1)
    assert scal == CycScalar(-1, 1, 5)


def test_quantum_relations_confluence_basis():
    for label in ("A2", "B2"):
        rs = build(label)
        for ell in (5, 7):
            assert defining_relations_hold(rs, ell)
            assert straightening_confluent(rs, ell)
            basis = square_free_basis(rs, ell)
            assert len(basis) == 2 ** len(rs.positive_roots)


def test_quantum_nil_product_specializes():
    for label in ("A2", "B2"):
        rs, g = _setup(label)
        for ell in (5, 7):
            for w1 in g.elements:
                for w2 in g.elements:
                    q = quantum_nil_product(w1, w2, rs, g, ell)
                    c = nil_product(w1, w2, rs, g)
                    assert (q is None) == (c is None)
                    if q is not None:
                        scal, w = q
                        assert w == c[1]
                        assert scal.sign == c[0]  # zeta -> formal, sign part


def test_quantum_classes_independent():
    rs, g = _setup("B2")
    seen = set()
    for w in g.elements:
        order = {gam: k for k, gam in enumerate(rs.positive_roots)}
        mono = tuple(sorted(order[gam] for gam in g.inversion_set(w)))
        assert mono not in seen
        seen.add(mono)
    assert len(seen) == len(g.elements)


def test_quantum_ring_gate():
    rs, g = _setup("B2")
    with pytest.raises(PreconditionError):
        CohomologyRing(rs, g, (), "quantum", 5)  # 5 <= 2(h-1) = 6
    ring = CohomologyRing(rs, g, (), "quantum", 7)
    assert not ring.formal_only
    assert all(check_ring_laws(ring).values())


def test_table_rows_format():
    rs, g = _setup("A2")
    ring = CohomologyRing(rs, g, (), "classical", 7)
    rows = ring.table_rows()
    assert len(rows) == len(g.elements) ** 2
    for w1, w2, tgt, sign, expo in rows:
        assert sign in (-1, 0, 1) and expo == 0
    meta = ring.metadata()
    assert meta["w0_word"] and meta["positive_root_order"]
