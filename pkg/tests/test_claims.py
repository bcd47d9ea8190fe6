import pytest

from srlab.claims import (
    CLAIMS,
    CONFIRMED,
    PARTIAL,
    REFUTED,
    discrepancy_report,
    has_unexpected_refutation,
    scan_conjecture_L2n,
    scan_conjecture_Ln,
    verify_all,
    verify_claim,
)
from srlab.homology import GF2, RATIONALS


def test_catalog_completeness():
    assert len(CLAIMS) >= 15
    families = {rec.family for rec in CLAIMS.values()}
    for fam in ("P", "L", "S", "C", "C2", "L2", "Kmn", "K2xKn", "Grid", "W", "TreeEdges", "simplex"):
        assert fam in families, fam
    # conflicting statements are paired records pointing at each other
    for rec in CLAIMS.values():
        if rec.counterpart:
            assert rec.counterpart in CLAIMS, rec.claim_id
    refuted_records = [r for r in CLAIMS.values() if not r.expect_confirmed]
    assert len(refuted_records) >= 8
    assert all(r.counterpart for r in refuted_records)


def test_all_claims_match_expected_status():
    for field in (RATIONALS, GF2):
        results = verify_all(fields=(field,))
        assert not has_unexpected_refutation(results)
        for r in results:
            rec = CLAIMS[r.claim_id]
            if r.status == PARTIAL:
                continue
            assert (r.status == CONFIRMED) == rec.expect_confirmed, r.to_json()


def test_refuted_variants_are_refuted():
    for cid, rec in CLAIMS.items():
        if rec.expect_confirmed:
            continue
        r = verify_claim(cid)
        assert r.status == REFUTED, r.to_json()
        assert r.discrepancies, cid


def test_unknown_claim():
    with pytest.raises(KeyError):
        verify_claim("no.such.claim")


def test_discrepancy_report_contents_and_stability():
    rep1 = discrepancy_report()
    rep2 = discrepancy_report()
    assert rep1 == rep2
    assert len(rep1) >= 9
    subjects = " | ".join(d.subject for d in rep1)
    for needle in (
        "numerator",
        "tree-ring Betti closed form",
        "degree index of the six-vertex star",
        "six-vertex path, degree-3 dual Betti",
        "third Betti number",
        "cycle Betti formulas",
        "squared-path Betti descriptions",
        "2k-cycle pair",
        "bipartite duals at m=k",
    ):
        assert needle in subjects, needle
    # every entry shows both values side by side
    for d in rep1:
        assert d.reference and d.computed


def test_cross_field_summary():
    from srlab.claims import cross_field_summary

    results = [verify_claim("k1.theorem", field=f) for f in (RATIONALS, GF2)]
    summary = cross_field_summary(results)
    assert summary == [{"claim": "k1.theorem", "status": CONFIRMED, "fields": {"Q": CONFIRMED, "GF(2)": CONFIRMED}}]
    # a synthetic disagreement downgrades to PARTIAL
    import copy

    fake = copy.deepcopy(results)
    fake[1].status = REFUTED
    assert cross_field_summary(fake)[0]["status"] == PARTIAL


def test_claim_reproducibility():
    a = verify_claim("k44.example")
    b = verify_claim("k44.example")
    ja, jb = a.to_json(), b.to_json()
    ja.pop("seconds"), jb.pop("seconds")
    assert ja == jb


def test_scan_ln_small():
    rep = scan_conjecture_Ln((2, 3), (3, 8), (RATIONALS,))
    assert rep.counterexamples == []
    assert rep.status == PARTIAL
    ks = {(c.k, c.n) for c in rep.cells}
    assert (2, 3) in ks and (3, 5) in ks and (3, 8) in ks
    assert (3, 4) not in ks  # below the independent-set threshold
    for c in rep.cells:
        assert c.linear_degree is not None and c.cm, c
    assert any("k=3, n=6" in note for note in rep.notes)


def test_scan_l2n_small():
    rep = scan_conjecture_L2n((2, 3), (3, 8), (RATIONALS, GF2))
    assert rep.counterexamples == []
    for c in rep.cells:
        assert c.linear_degree is not None and c.cm and c.dual_linear_degree is not None and c.dual_cm, c
    fields = {c.field for c in rep.cells}
    assert fields == {"Q", "GF(2)"}
    j = rep.to_json()
    assert j["status"] == PARTIAL and j["cells"]


def test_scan_workers_deterministic():
    a = scan_conjecture_Ln((2, 2), (3, 9), (RATIONALS,), workers=1)
    b = scan_conjecture_Ln((2, 2), (3, 9), (RATIONALS,), workers=2)
    assert [c.to_json() for c in a.cells] == [c.to_json() for c in b.cells]
