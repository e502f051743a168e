import pytest

from pairdist import classify as cls
from pairdist.classify import (
    AMDS,
    MDS,
    NEITHER,
    check_permutation_invariance,
    classify,
    permutation_reports,
    rotate_roots,
    triple_code,
    verify_corollaries_Ca_Cb,
    verify_table1,
    verify_witnesses,
)
from pairdist.code import build_code
from pairdist.errors import InvalidCodeError, InvalidFieldError, InvariantBreach
from pairdist.gf import PrimeField
from pairdist.metric import min_pair_distance, oracle_pair_distance
from pairdist.poly import FactorSpec
from pairdist.tables import AMDS_3P, MDS_3P


@pytest.mark.parametrize(
    "n, k, dp, label, defect",
    [(21, 14, 9, MDS, 0), (21, 15, 7, AMDS, 1), (21, 18, 5, MDS, 0), (21, 14, 8, AMDS, 1), (21, 14, 7, NEITHER, 2)],
)
def test_classify_examples(n, k, dp, label, defect):
    v = classify(n, k, dp)
    assert (v.label, v.defect) == (label, defect)


def test_classify_rejects_bound_violation():
    with pytest.raises(InvariantBreach):
        classify(21, 14, 10)
    with pytest.raises(ValueError):
        classify(21, 21, 2)
    with pytest.raises(ValueError):
        classify(21, 14, 1)


def test_table_data_is_consistent():
    assert len(MDS_3P) == 10 and len(AMDS_3P) == 11
    for row in MDS_3P:
        assert sum(row.triple) == row.redundancy and row.dp == row.redundancy + 2
    for row in AMDS_3P:
        assert sum(row.triple) == row.redundancy and row.dp == row.redundancy + 1


def test_table1_p7_l3():
    rows = verify_table1(7, 3)
    assert len(rows) == 7 and all(r.passed for r in rows), [r.summary() for r in rows if not r.passed]
    by = {r.construction_id.rsplit("/", 1)[1]: r for r in rows}
    assert by["(4,0,0)"].n == 7 and by["(2,1,1)"].n == 42 and by["(3,0,1)"].n == 21


def test_table1_l_2_mod_4_reports_dH_2():
    rows = {r.construction_id.rsplit("/", 1)[1]: r for r in verify_table1(13, 6)}
    for s in ("S(0,1,3)", "S(0,2,2)", "S(0,3,1)"):
        assert rows[s].passed and rows[s].computed["dH"] == 2 and "dp" not in rows[s].expected


def test_table1_preconditions():
    with pytest.raises(InvalidFieldError):
        verify_table1(7, 4)
    with pytest.raises(InvalidCodeError):
        verify_table1(7, 2)


def test_corollary_case_one():
    row = verify_corollaries_Ca_Cb(7, 2, 1, 2, 1)
    assert row.n == 42 and row.passed
    assert (row.computed["dp"], row.computed["label"]) == (5, MDS)


def test_corollary_cb_form():
    row = verify_corollaries_Ca_Cb(7, 2, 1, form="b")
    assert row.passed and row.computed["dp"] == 6


def test_corollary_noncoprime_regime_reports_values():
    row = verify_corollaries_Ca_Cb(5, 3, 1, 2, 1, primitive=3)
    assert row.expected == {} and row.passed
    assert row.n == 20 and row.computed["dH"] == 2 and row.computed["label"] != MDS


def test_corollary_preconditions():
    with pytest.raises(InvalidCodeError):
        verify_corollaries_Ca_Cb(7, 1, 1, 1, 2)
    with pytest.raises(InvalidCodeError):
        verify_corollaries_Ca_Cb(7, 2, 1, 1, 1)
    with pytest.raises(InvalidFieldError):
        verify_corollaries_Ca_Cb(7, 2, 1, 2, 1, primitive=2)


def test_scan_rejects_bad_prime():
    with pytest.raises(InvalidFieldError):
        cls.scan_3p(5)


def test_scan_small_degree():
    res = cls.scan_3p(7, max_deg=4)
    got = res.by_triple()
    assert got[(2, 1, 0)].computed["dp"] == 5 and got[(2, 1, 0)].passed
    assert got[(3, 0, 0)].computed["label"] == AMDS  # canonical form of (0,3,0)
    assert res.checks["b"][0] and res.checks["e"][0]


def test_scan_exhaustive_mode_checks_permutations():
    res = cls.scan_3p(7, max_deg=3, exhaustive=True)
    assert res.checks["permutations"][0]
    assert any(r.construction_id.startswith("scan3p-perm/") for r in res.rows)


def test_scan_p13_matches_p7_pattern():
    a = cls.scan_3p(7).by_triple()
    b = cls.scan_3p(13).by_triple()
    common = set(a) & set(b)
    assert len(common) == len(a) == 53
    for t in sorted(common):
        ca, cb = a[t].computed, b[t].computed
        assert (ca["dH"], ca["dp"], ca["label"]) == (cb["dH"], cb["dp"], cb["label"]), t


def test_permutation_invariance_examples():
    assert check_permutation_invariance(7, (3, 2, 1))
    assert set(permutation_reports(7, (3, 2, 1)).values()) == {(4, 8)}
    assert min_pair_distance(triple_code(7, (0, 0, 2))).dp == min_pair_distance(triple_code(7, (2, 0, 0))).dp


def test_permutation_invariance_421_agrees_with_oracle():
    reps = permutation_reports(7, (4, 2, 1))
    assert len(set(reps.values())) == 1
    dp = next(iter(reps.values()))[1]
    assert dp == oracle_pair_distance(triple_code(7, (4, 2, 1)))


def test_rotate_roots():
    F = PrimeField(7)
    spec = FactorSpec.of(F, [(1, 3), (2, 1)])
    rot = rotate_roots(spec, 2)
    assert rot.pairs() == [(2, 3), (4, 1)]
    a = min_pair_distance(build_code(F, 21, spec))
    b = min_pair_distance(build_code(F, 21, rot))
    assert (a.dH, a.dp) == (b.dH, b.dp)


def test_witness_rows_p7():
    rows = verify_witnesses(7)
    by = {r.construction_id: r for r in rows}
    assert by["witness/p=7/(x^p-1)(x^(p-1)-1) in (4,1,1)"].passed
    assert by["witness/p=7/example a+b"].passed
    assert by["witness/p=7/example d_H"].computed == {"dH": 7}
    for cid, r in by.items():
        assert r.computed.get("pair_weight", r.expected.get("pair_weight")) == r.expected.get("pair_weight")
        if "(x-1)^p(x-w)^p(x-w^2)" in cid or "1-x^2+2x" in cid:
            assert r.passed, r.summary()


def test_witness_1_x_xp_is_not_a_codeword():
    # pair weight 7 as stated, but c(w) = 2 - 2w != 0
    rows = [r for r in verify_witnesses(7) if "1-x-x^p+x^(2p+1)" in r.construction_id]
    assert len(rows) == 4
    assert all(r.computed == {"member": False, "pair_weight": 7} for r in rows)


def test_row_parallelism_is_order_stable():
    a = verify_table1(7, 3, jobs=1)
    b = verify_table1(7, 3, jobs=2)
    assert [(r.construction_id, r.computed) for r in a] == [(r.construction_id, r.computed) for r in b]
