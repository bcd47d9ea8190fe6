import pytest

from srlab.bitsets import mask_of
from srlab.complexes import (
    alexander_dual,
    clique_complex,
    cover_complex,
    f_vector,
    irrelevant_complex,
    make_complex,
    simplex_complex,
    void_complex,
)
from srlab.errors import GuardExceeded
from srlab.graphs import complete, cycle, cycle_square, path, path_square, star
from srlab.homology import GF2
from srlab.resolution import fat_forest_hilbert, hilbert_from_fvector
from srlab.structure import (
    check_vd_witness,
    froberg_check,
    is_fat_forest,
    is_pure_shellable,
    is_valid_shelling,
    is_vertex_decomposable,
    shelling_order_from_vd,
    verify_fat_forest_order,
)


def C(n, facets):
    return make_complex(n, [mask_of(f) for f in facets])


TWO_EDGES = C(4, [(1, 2), (3, 4)])
OCTA = clique_complex(cycle_square(6))


def test_fat_forest_cases():
    assert is_fat_forest(clique_complex(path(6))).holds  # trees
    assert is_fat_forest(clique_complex(star(7))).holds
    assert is_fat_forest(simplex_complex(5)).holds
    assert is_fat_forest(irrelevant_complex(2)).holds
    assert is_fat_forest(TWO_EDGES).holds  # disjoint pieces allowed
    assert not is_fat_forest(OCTA).holds
    assert not is_fat_forest(clique_complex(cycle(4))).holds
    assert not is_fat_forest(void_complex(3)).holds
    # a disconnected-then-bridged example that needs the right insertion order
    bridged = C(5, [(1,), (3,), (1, 2, 3)])
    # facets are maximalized so this is really [(1,2,3)]; build a genuine case
    chain = C(5, [(1, 2), (4, 5), (2, 3, 4)])
    assert is_fat_forest(chain).holds


def test_fat_forest_witness_replay_and_hilbert():
    for c in (clique_complex(path(6)), clique_complex(path_square(7)), cover_complex(path(6), 3), TWO_EDGES):
        v = is_fat_forest(c)
        assert v.holds
        order, decomp = v.witness
        assert verify_fat_forest_order(c, order) == decomp
        assert fat_forest_hilbert(decomp, c.n) == hilbert_from_fvector(f_vector(c), c.n)
    # an invalid order is rejected
    c4 = clique_complex(cycle(4))
    assert verify_fat_forest_order(c4, list(c4.facets)) is None


def test_fat_forest_guard():
    big = cover_complex(path(9), 2)  # 28 facets
    with pytest.raises(GuardExceeded):
        is_fat_forest(big)
    assert is_fat_forest(big, override=True).holds in (True, False)


def test_froberg_check():
    r = froberg_check(path_square(7))
    assert r.consistent and r.chordal and r.two_linear and r.fat_forest
    r2 = froberg_check(cycle(4))
    assert r2.consistent and not r2.chordal and not r2.two_linear and not r2.fat_forest
    r3 = froberg_check(cycle_square(7))
    assert r3.consistent and not r3.chordal
    r4 = froberg_check(complete(5))  # zero ideal counts as trivially 2-linear
    assert r4.consistent and r4.chordal and r4.two_linear and r4.fat_forest
    r5 = froberg_check(path_square(7), GF2)
    assert r5.consistent


def test_vertex_decomposable_cases():
    assert is_vertex_decomposable(simplex_complex(4)).holds
    assert is_vertex_decomposable(irrelevant_complex(2)).holds
    assert not is_vertex_decomposable(TWO_EDGES).holds
    assert not is_vertex_decomposable(void_complex(2)).holds
    assert is_vertex_decomposable(OCTA).holds
    # duals of clique complexes of chordal graphs
    for g in (path(5), path_square(6), star(6)):
        d = alexander_dual(clique_complex(g))
        v = is_vertex_decomposable(d)
        assert v.holds and check_vd_witness(d, v.witness), g
    with pytest.raises(ValueError):
        is_vertex_decomposable(C(5, [(1, 2), (3,)]))  # not pure
    with pytest.raises(GuardExceeded):
        is_vertex_decomposable(simplex_complex(17))


def test_vd_yields_valid_shelling():
    for c in (OCTA, simplex_complex(3), alexander_dual(clique_complex(path(6))), cover_complex(path(7), 3)):
        v = is_vertex_decomposable(c)
        assert v.holds
        order = shelling_order_from_vd(c, v.witness)
        assert is_valid_shelling(c, order), c


def test_shellable_cases():
    assert is_pure_shellable(OCTA).holds
    assert not is_pure_shellable(TWO_EDGES).holds
    assert is_pure_shellable(simplex_complex(4)).holds
    assert is_pure_shellable(C(3, [(1,), (2,), (3,)])).holds  # points are shellable
    v = is_pure_shellable(clique_complex(cycle(5)))
    assert v.holds
    assert is_valid_shelling(clique_complex(cycle(5)), [clique_complex(cycle(5)).facets[i] for i in v.witness])
    with pytest.raises(ValueError):
        is_pure_shellable(C(5, [(1, 2), (3,)]))
    with pytest.raises(GuardExceeded):
        is_pure_shellable(cover_complex(path(9), 2))


def test_shelling_checker_rejects_bad_orders():
    # the 4-cycle's facets can be shelled, but not starting with opposite edges
    c4 = clique_complex(cycle(4))
    f12, f14, f23, f34 = c4.facets
    assert not is_valid_shelling(c4, [f12, f34, f23, f14])
    assert is_valid_shelling(c4, [f12, f23, f34, f14])
    assert not is_valid_shelling(c4, [f12, f23, f34])  # incomplete
