import warnings
from fractions import Fraction

import pytest

from orbitcalc import rootdata as rd


def test_cartan_type_validation():
    with pytest.raises(rd.RootDataError):
        rd.CartanType("G", 3)
    with pytest.raises(rd.RootDataError):
        rd.CartanType("D", 1)
    with pytest.raises(rd.RootDataError):
        rd.CartanType("A", 0)
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        ct = rd.CartanType("B", 1)
    assert ct.series == "A"
    assert any("normalized" in str(x.message) for x in w)


def test_duals():
    assert rd.CartanType("B", 3).dual.series == "C"
    assert rd.CartanType("B", 3, "adjoint").dual.isogeny == "simply_connected"
    assert rd.CartanType("A", 2).dual.series == "A"


def test_root_counts():
    assert len(rd.build_root_system(rd.CartanType("A", 1)).roots) == 2
    assert len(rd.build_root_system(rd.CartanType("G", 2)).roots) == 12
    assert len(rd.build_root_system(rd.CartanType("D", 4)).roots) == 24
    assert len(rd.build_root_system(rd.CartanType("B", 3)).roots) == 18
    assert len(rd.build_root_system(rd.CartanType("C", 3)).roots) == 18


def test_affine_simple_counts():
    assert len(rd.build_root_system(rd.CartanType("A", 1)).affine_simples) == 2
    assert len(rd.build_root_system(rd.CartanType("G", 2)).affine_simples) == 3
    assert len(rd.build_root_system(rd.CartanType("D", 4)).affine_simples) == 5
    # D2 falls apart into two components, each with its own affine node
    assert len(rd.build_root_system(rd.CartanType("D", 2)).affine_simples) == 4


def test_pairing_is_cartan_matrix():
    for ct in [rd.CartanType(s, r) for s, r in
               [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]]:
        rs = rd.build_root_system(ct)
        for i in range(rs.rank):
            for j in range(rs.rank):
                assert rs.pairing(rs.simple_roots[i], rs.simple_roots[j]) == rs.cartan[i][j]
            assert rs.pairing(rs.simple_roots[i], rs.simple_roots[i]) == 2


def test_weyl_orders():
    assert len(rd.weyl_group(rd.CartanType("A", 1))) == 2
    assert len(rd.weyl_group(rd.CartanType("G", 2))) == 12
    assert len(rd.weyl_group(rd.CartanType("B", 3))) == 48
    assert len(rd.weyl_group(rd.CartanType("D", 4))) == 192
    with pytest.raises(rd.RootDataError):
        rd.weyl_group(rd.CartanType("A", 7))


def test_weyl_permutes_roots_and_composition():
    ct = rd.CartanType("B", 2)
    rs = rd.build_root_system(ct)
    group = rd.weyl_group(ct)
    roots = set(rs.roots)
    for w in group:
        for beta in rs.roots:
            assert w.apply_root(beta) in roots
    s0 = rd.simple_reflection(rs, 0)
    s1 = rd.simple_reflection(rs, 1)
    w = s0 * s1
    v = (Fraction(2), Fraction(-3))
    assert w.apply_point(v) == s0.apply_point(s1.apply_point(v))


def test_dominant_conjugate():
    ct = rd.CartanType("B", 2)
    rs = rd.build_root_system(ct)
    v = (Fraction(1), Fraction(2))
    assert rd.dominant_conjugate(rs, v) == v
    a1 = rd.build_root_system(rd.CartanType("A", 1))
    # -alpha^vee maps to alpha^vee
    assert rd.dominant_conjugate(a1, (-2,)) == (2,)
    # W-invariance: every conjugate of a dominant h re-dominates to h
    h = (Fraction(2), Fraction(1))
    for w in rd.weyl_group(ct):
        assert rd.dominant_conjugate(rs, w.apply_point(h)) == h


def test_alcove_symmetry_orders():
    assert len(rd.alcove_symmetries(rd.CartanType("A", 1, "adjoint"))) == 2
    assert len(rd.alcove_symmetries(rd.CartanType("A", 2, "adjoint"))) == 3
    assert len(rd.alcove_symmetries(rd.CartanType("G", 2, "adjoint"))) == 1
    assert len(rd.alcove_symmetries(rd.CartanType("A", 2, "simply_connected"))) == 1
    assert len(rd.alcove_symmetries(rd.CartanType("D", 4, "adjoint"))) == 4
    assert len(rd.alcove_symmetries(rd.CartanType("B", 3, "adjoint"))) == 2


def test_alcove_symmetry_a1_swaps_nodes():
    ct = rd.CartanType("A", 1, "adjoint")
    rs = rd.build_root_system(ct)
    syms = rd.alcove_symmetries(ct)
    nontriv = [s for s in syms if not (s.finite_part.is_identity() and not any(s.translation))]
    assert len(nontriv) == 1
    assert nontriv[0].node_permutation(rs) == (1, 0)


def test_alcove_symmetry_a2_rotates():
    ct = rd.CartanType("A", 2, "adjoint")
    rs = rd.build_root_system(ct)
    perms = {s.node_permutation(rs) for s in rd.alcove_symmetries(ct)}
    # identity plus two 3-cycles of the affine diagram
    assert (0, 1, 2) in perms
    assert len(perms) == 3
    for p in perms:
        if p != (0, 1, 2):
            assert sorted(p) == [0, 1, 2] and p != (0, 1, 2)


def test_alcove_symmetries_form_group():
    ct = rd.CartanType("A", 2, "adjoint")
    rs = rd.build_root_system(ct)
    syms = rd.alcove_symmetries(ct)
    # composition stays in the set (compare via node permutation + action on a point)
    b = (Fraction(1, 7), Fraction(2, 7))
    images = {s.apply_point(b) for s in syms}
    for s in syms:
        for t in syms:
            comp = s.apply_point(t.apply_point(b))
            assert comp in images


def test_display_indexing():
    rs = rd.build_root_system(rd.CartanType("G", 2))
    # node 0 is the affine node, nodes 1..n the finite simples
    assert rs.internal_index(0) == 2  # internal affine index == rank
    assert rs.internal_index(1) == 0
    assert rs.display_index(2) == 0
