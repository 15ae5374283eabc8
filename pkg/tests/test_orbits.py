import pytest

from orbitcalc import partitions as pt
from orbitcalc.orbits import (NilpotentOrbit, OrbitError, WeightedDynkinDiagram,
                              closure_leq, dual_bv, dual_ls, enumerate_orbits,
                              hasse_edges, is_special, orbit_dimension,
                              orbit_from_json, orbit_from_wdd, regular_orbit,
                              special_orbits, weighted_dynkin, zero_orbit)
from orbitcalc.rootdata import CartanType

ALL_SMALL = [CartanType(s, r) for s, r in
             [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2),
              ("C", 3), ("D", 2), ("D", 3), ("D", 4), ("G", 2)]]


def test_enumerate_g2():
    orbs = enumerate_orbits(CartanType("G", 2))
    assert [o.g2_label for o in orbs] == ["0", "A1", "A1~", "G2(a1)", "G2"]


def test_enumerate_a2():
    orbs = enumerate_orbits(CartanType("A", 2))
    assert {o.partition for o in orbs} == {(3,), (2, 1), (1, 1, 1)}


def test_enumerate_b3_matches_recursive_generation():
    orbs = enumerate_orbits(CartanType("B", 3))
    # independent recursive generation: filter all partitions of 7 by the rule
    expected = set()
    for p in pt.partitions_of(7):
        if all(p.count(x) % 2 == 0 for x in set(p) if x % 2 == 0):
            expected.add(p)
    assert {o.partition for o in orbs} == expected


def test_very_even_orbits_carry_marks():
    orbs = enumerate_orbits(CartanType("D", 4))
    ve = [o for o in orbs if o.very_even]
    assert {(o.partition, o.mark) for o in ve} == {
        ((4, 4), "I"), ((4, 4), "II"),
        ((2, 2, 2, 2), "I"), ((2, 2, 2, 2), "II")}
    with pytest.raises(OrbitError):
        NilpotentOrbit(CartanType("D", 4), partition=(4, 4))
    with pytest.raises(OrbitError):
        NilpotentOrbit(CartanType("D", 4), partition=(5, 3), mark="I")


def test_closure_order():
    g2 = CartanType("G", 2)
    a1 = NilpotentOrbit(g2, g2_label="A1")
    a1t = NilpotentOrbit(g2, g2_label="A1~")
    assert closure_leq(a1, a1t) and not closure_leq(a1t, a1)
    assert orbit_dimension(a1) == 6 < orbit_dimension(a1t) == 8
    d4 = CartanType("D", 4)
    i = NilpotentOrbit(d4, partition=(4, 4), mark="I")
    ii = NilpotentOrbit(d4, partition=(4, 4), mark="II")
    assert closure_leq(i, i) and not closure_leq(i, ii) and not closure_leq(ii, i)
    with pytest.raises(OrbitError):
        closure_leq(a1, i)


@pytest.mark.parametrize("ct", ALL_SMALL, ids=str)
def test_wdd_extremes_and_roundtrip(ct):
    assert weighted_dynkin(zero_orbit(ct)).values == (0,) * ct.rank
    assert weighted_dynkin(regular_orbit(ct)).values == (2,) * ct.rank
    for o in enumerate_orbits(ct):
        assert orbit_from_wdd(weighted_dynkin(o)) == o


def test_wdd_b2_example():
    # h for [2,2,1] is (1,1,0,-1,-1); top coordinates (1,1)
    o = NilpotentOrbit(CartanType("B", 2), partition=(2, 2, 1))
    assert weighted_dynkin(o).values == (0, 1)


def test_wdd_injective():
    for ct in ALL_SMALL:
        orbs = enumerate_orbits(ct)
        assert len({weighted_dynkin(o).values for o in orbs}) == len(orbs)


def test_orbit_from_wdd_rejects_garbage():
    with pytest.raises(OrbitError):
        orbit_from_wdd(WeightedDynkinDiagram(CartanType("B", 2), (2, 1)))


def test_dual_ls_examples():
    for ct in ALL_SMALL:
        assert dual_ls(regular_orbit(ct)) == zero_orbit(ct)
        assert dual_ls(zero_orbit(ct)) == regular_orbit(ct)
    b3 = CartanType("B", 3)
    o = NilpotentOrbit(b3, partition=(3, 2, 2))
    assert dual_ls(o).partition == (3, 3, 1)


def test_dual_ls_output_special_and_triality():
    for ct in ALL_SMALL:
        for o in enumerate_orbits(ct):
            d = dual_ls(o)
            assert is_special(d), (ct, o)
            assert dual_ls(dual_ls(d)) == d


def test_dual_bv_type_a_is_transpose():
    for n in range(1, 9):
        ct = CartanType("A", n)
        for o in enumerate_orbits(ct):
            assert dual_bv(o).partition == pt.transpose(o.partition)


def test_dual_bv_extremes_and_bc_swap():
    for ct in ALL_SMALL:
        d = dual_bv(zero_orbit(ct.dual))
        assert d == regular_orbit(ct.dual.dual) or d.partition == regular_orbit(CartanType(ct.dual.dual.series, ct.rank)).partition
    b2 = CartanType("B", 2)
    o = dual_bv(NilpotentOrbit(CartanType("C", 2, "simply_connected"), partition=(2, 2)))
    assert o.system.series == "B" and o.partition == (3, 1, 1)


def test_dual_bv_always_special():
    for ct in ALL_SMALL:
        for o in enumerate_orbits(ct.dual):
            assert is_special(dual_bv(o))


def test_duality_order_reversing():
    for ct in ALL_SMALL:
        orbs = enumerate_orbits(ct)
        for a in orbs:
            for b in orbs:
                if closure_leq(a, b):
                    assert closure_leq(dual_ls(b), dual_ls(a)), (ct, a, b)
                    assert closure_leq(dual_bv(b), dual_bv(a)), (ct, a, b)


def test_special_g2():
    g2 = CartanType("G", 2)
    specials = {o.g2_label for o in special_orbits(g2)}
    assert specials == {"0", "G2(a1)", "G2"}


def test_hasse_edges_b2():
    ct = CartanType("B", 2)
    edges = {(a.label(), b.label()) for a, b in hasse_edges(ct)}
    assert edges == {("1,1,1,1,1", "2,2,1"), ("2,2,1", "3,1,1"), ("3,1,1", "5")}


def test_json_roundtrip():
    for ct in ALL_SMALL:
        for o in enumerate_orbits(ct):
            assert orbit_from_json(o.to_json(), ct.isogeny) == o
