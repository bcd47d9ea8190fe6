import pytest

from srlab.bitsets import mask_of
from srlab.complexes import (
    alexander_dual,
    clique_complex,
    cover_complex,
    f_vector,
    irrelevant_complex,
    join,
    make_complex,
    simplex_complex,
    skeleton,
    void_complex,
)
from srlab.errors import GuardExceeded, VoidComplexError
from srlab.graphs import complete_bipartite, cycle, cycle_square, path, path_square, points, star
from srlab.homology import GF2, RATIONALS, Field
from srlab.resolution import (
    FatForestDecomposition,
    GradedBettiTable,
    HilbertSeries,
    betti_from_linear_hilbert,
    betti_hochster,
    betti_product,
    eagon_reiner_check,
    fat_forest_hilbert,
    hilbert_from_fvector,
    is_cm_ab,
    is_cm_reisner,
    is_gorenstein,
    kpolynomial,
    linear_resolution_degree,
)


def C(n, facets):
    return make_complex(n, [mask_of(f) for f in facets])


C4 = C(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def test_hilbert_examples():
    h = hilbert_from_fvector((1, 4, 4), 4)
    assert h.numerator == (1, 0, -2, 0, 1) and h.denom_power == 4
    # n isolated points: series 1 + nt/(1-t); numerator matches the (1,3,2) table
    h2 = hilbert_from_fvector((1, 3), 3)
    assert h2.numerator == (1, 0, -3, 2)  # (1-t)^3 + 3t(1-t)^2
    assert hilbert_from_fvector((1,), 5).numerator == tuple([1, -5, 10, -10, 5, -1])
    with pytest.raises(VoidComplexError):
        hilbert_from_fvector((), 3)
    with pytest.raises(ValueError):
        hilbert_from_fvector((2, 3), 3)
    assert HilbertSeries.from_json(h.to_json()) == h


def test_hochster_frozen_tables():
    assert betti_hochster(C4).sorted_items() == [(0, 0, 1), (1, 2, 2), (2, 4, 1)]
    d = alexander_dual(C4)
    assert betti_hochster(d).sorted_items() == [(0, 0, 1), (1, 2, 4), (2, 3, 4), (3, 4, 1)]
    assert betti_hochster(simplex_complex(4)).entries == {(0, 0): 1}
    assert betti_hochster(irrelevant_complex(3)).entries == {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1}
    # three isolated points: (1, 3, 2)
    pts = clique_complex(points(3))
    assert betti_hochster(pts).totals() == (1, 3, 2)


def test_hochster_beta1_equals_minimal_generators():
    from srlab.complexes import minimal_nonfaces

    for c in (C4, cover_complex(cycle_square(6), 2), clique_complex(path_square(7)), cover_complex(path(7), 3)):
        t = betti_hochster(c)
        mnf = minimal_nonfaces(c)
        by_degree = {}
        for m in mnf:
            by_degree[m.bit_count()] = by_degree.get(m.bit_count(), 0) + 1
        assert {j: b for (i, j), b in t.entries.items() if i == 1} == by_degree, c


def test_hochster_strategies_and_workers_agree():
    cases = [
        cover_complex(cycle_square(6), 2),
        cover_complex(path(8), 3),
        clique_complex(cycle(6)),
        cover_complex(complete_bipartite(3, 3), 2),
    ]
    for c in cases:
        td = betti_hochster(c, strategy="direct")
        tu = betti_hochster(c, strategy="dual")
        assert td.entries == tu.entries, c
        for f in (GF2, Field(3)):
            assert betti_hochster(c, f, strategy="direct").entries == betti_hochster(c, f, strategy="dual").entries
    t1 = betti_hochster(cases[0], workers=1)
    t2 = betti_hochster(cases[0], workers=2)
    assert t1.entries == t2.entries
    assert t1.to_json() == t2.to_json()


def test_hochster_guard_and_void():
    with pytest.raises(VoidComplexError):
        betti_hochster(void_complex(3))
    big = simplex_complex(23)
    with pytest.raises(GuardExceeded):
        betti_hochster(big)
    assert betti_hochster(big, override=True).entries == {(0, 0): 1}


def test_kpolynomial_matches_hilbert_numerator():
    for c in (C4, cover_complex(cycle_square(6), 2), clique_complex(path(6)), cover_complex(star(6), 3)):
        t = betti_hochster(c)
        assert kpolynomial(t) == hilbert_from_fvector(f_vector(c), c.n).numerator, c


def test_linear_resolution_degree():
    assert linear_resolution_degree(betti_hochster(C4)) is None
    assert linear_resolution_degree(betti_hochster(cover_complex(cycle_square(6), 2))) == 3
    assert linear_resolution_degree(betti_hochster(simplex_complex(3))) == 0  # zero ideal
    assert linear_resolution_degree(betti_hochster(irrelevant_complex(4))) == 1
    assert linear_resolution_degree(betti_hochster(skeleton(simplex_complex(5), 2))) == 4


def test_betti_from_linear_hilbert():
    # squared-path cover ring values read off the numerator
    t = betti_from_linear_hilbert(HilbertSeries((1, 0, 0, 0, -5, 4), 5), 4)
    assert t.entries == {(0, 0): 1, (1, 4): 5, (2, 5): 4}
    # reproduces the oracle table whenever the oracle is linear
    for c in (cover_complex(points(5), 2), cover_complex(cycle_square(6), 2), clique_complex(path(6))):
        to = betti_hochster(c)
        s = linear_resolution_degree(to)
        assert s
        h = hilbert_from_fvector(f_vector(c), c.n)
        assert betti_from_linear_hilbert(h, s).entries == to.entries, c
    assert betti_from_linear_hilbert(HilbertSeries((1,), 4), 2).entries == {(0, 0): 1}
    with pytest.raises(ValueError):
        betti_from_linear_hilbert(HilbertSeries((1, 0, -2, 0, 1), 4), 2)  # C4: sign breaks at t^4
    with pytest.raises(ValueError):
        betti_from_linear_hilbert(HilbertSeries((1, 2), 4), 1)
    with pytest.raises(ValueError):
        betti_from_linear_hilbert(HilbertSeries((1, -1, 0, -1), 4), 1)  # support gap


def test_cm_verdicts():
    assert is_cm_reisner(C4).cm  # a connected graph complex
    two_edges = C(4, [(1, 2), (3, 4)])
    v = is_cm_reisner(two_edges)
    assert not v.cm and v.witness == ((), 0)  # disconnected at the empty face
    assert not is_cm_ab(two_edges)
    assert is_cm_ab(simplex_complex(4)) and is_cm_reisner(simplex_complex(4)).cm
    c26 = cover_complex(cycle_square(6), 2)
    assert not is_cm_ab(c26)  # pd 4 vs 6 - 4
    assert betti_hochster(c26).projective_dimension() == 4
    assert is_cm_ab(C4, table=betti_hochster(C4))
    assert is_cm_reisner(irrelevant_complex(3)).cm and is_cm_ab(irrelevant_complex(3))


def test_gorenstein():
    assert is_gorenstein(clique_complex(cycle(5)))
    assert is_gorenstein(simplex_complex(4))
    assert not is_gorenstein(clique_complex(points(3)))  # CM of type 2
    assert is_gorenstein(clique_complex(cycle_square(6)))  # the octahedron sphere


def test_fat_forest_hilbert():
    # squared-path clique complexes: (n-2)/(1-t)^3 - (n-3)/(1-t)^2
    for n in (5, 6, 7, 8, 9):
        d = FatForestDecomposition((2,) * (n - 2), (1,) * (n - 3))
        assert fat_forest_hilbert(d, n) == hilbert_from_fvector(f_vector(clique_complex(path_square(n))), n)
    assert fat_forest_hilbert(FatForestDecomposition((3,), ()), 4) == HilbertSeries((1,), 4)
    # two disjoint points: 2/(1-t) - 1
    d2 = FatForestDecomposition((0, 0), (-1,))
    assert fat_forest_hilbert(d2, 2) == hilbert_from_fvector((1, 2), 2)
    with pytest.raises(ValueError):
        FatForestDecomposition((1, 1), (2,))
    with pytest.raises(ValueError):
        FatForestDecomposition((), ())


def test_eagon_reiner():
    r = eagon_reiner_check(clique_complex(path_square(6)))  # chordal: linear, dual CM
    assert r.consistent and r.linear_degree == 2 and r.dual_cm
    r2 = eagon_reiner_check(C4)
    assert r2.consistent and r2.linear_degree is None and not r2.dual_cm
    r3 = eagon_reiner_check(simplex_complex(3))
    assert r3.consistent and r3.dual_void
    # top-degree even cycle: cover linear but dual ring not linear
    c = cover_complex(cycle(6), 3)
    assert eagon_reiner_check(c).consistent
    assert eagon_reiner_check(alexander_dual(c)).consistent


def test_betti_product_matches_join():
    a = clique_complex(points(2))
    j = join(a, a)
    assert betti_hochster(j).entries == betti_product(betti_hochster(a), betti_hochster(a)).entries
    sk = skeleton(simplex_complex(4), 1)
    jj = join(sk, sk)
    assert betti_hochster(jj).entries == betti_product(betti_hochster(sk), betti_hochster(sk)).entries
    with pytest.raises(ValueError):
        betti_product(betti_hochster(a), betti_hochster(a, GF2))


def test_table_json_roundtrip():
    t = betti_hochster(cover_complex(cycle_square(6), 2))
    assert GradedBettiTable.from_json(t.to_json()).entries == t.entries
    assert t.to_json()["entries"] == sorted(t.to_json()["entries"])
    assert t.to_json()["field"] == "Q"


def test_field_specific_tables():
    # Betti numbers can grow in positive characteristic (triangulated RP^2)
    rp2 = C(
        6,
        [(1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6), (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6)],
    )
    tq = betti_hochster(rp2, RATIONALS)
    t2 = betti_hochster(rp2, GF2)
    assert tq.entries != t2.entries
    assert all(t2.entries.get(k, 0) >= v for k, v in tq.entries.items())
    assert betti_hochster(rp2, Field(3)).entries == tq.entries
