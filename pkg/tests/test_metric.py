import itertools

import pytest

from pairdist.code import build_code, contains
from pairdist.classify import triple_code
from pairdist.errors import OracleUnavailable, SearchBudgetExceeded, UnsupportedCodeError
from pairdist.gf import PrimeField
from pairdist.metric import (
    castagnoli_dH,
    hamming_weight,
    low_weight_codewords,
    min_pair_distance,
    oracle_pair_distance,
    pair_distance,
    pair_read,
    pair_weight,
    run_profile,
    simple_root_distance,
)
from pairdist.metric.kernel import IncrementalKernel, full_support_vectors
from pairdist.metric.search import profile_count
from pairdist.poly import FactorSpec

F7 = PrimeField(7)


def test_pair_read_and_weight():
    x = [1, 0, 0, 2, 3, 0]
    assert pair_read(x)[:3] == [(1, 0), (0, 0), (0, 2)]
    assert pair_read(x)[-1] == (0, 1)
    assert pair_weight(x) == 5
    assert pair_weight([0] * 5) == 0
    assert pair_weight([1] * 5) == 5
    assert hamming_weight(x) == 3


def test_pair_distance():
    assert pair_distance([1, 0, 0, 0], [0, 0, 0, 0]) == 2
    assert pair_distance([1, 2, 3], [1, 2, 3]) == 0
    with pytest.raises(ValueError):
        pair_distance([1, 2], [1, 2, 3])
    with pytest.raises(ValueError):
        pair_weight([1])


def test_run_profile():
    rp = run_profile([0, 1, 1, 0, 0, 1, 0, 1])
    assert (rp.w, rp.runs) == (4, 3)
    assert (rp.run_lengths, rp.gap_lengths) == ((2, 1, 1), (2, 1, 1))
    assert rp.pair_weight == pair_weight([0, 1, 1, 0, 0, 1, 0, 1]) == 7


def test_run_profile_wraps():
    rp = run_profile([1, 0, 0, 1, 1])
    assert (rp.runs, rp.run_lengths, rp.gap_lengths) == (1, (3,), (2,))
    assert rp.pair_weight == 4 == pair_weight([1, 0, 0, 1, 1])
    full = run_profile([3, 3, 3])
    assert (full.runs, full.pair_weight) == (1, 3)


def test_incremental_kernel_and_rollback():
    ker = IncrementalKernel(7)
    assert not ker.add((1, 0))
    mk = ker.mark()
    assert not ker.add((0, 1))
    assert ker.add((1, 1))
    assert ker.kernel == [{0: 6, 1: 6, 2: 1}]
    ker.rollback(mk)
    assert ker.rank == 1 and not ker.kernel
    assert ker.add((3, 0))


def test_full_support_vectors_normalized():
    ker = IncrementalKernel(5)
    for col in [(1,), (2,), (3,)]:
        ker.add(col)
    vecs = list(full_support_vectors(ker.kernel, 3, 5))
    assert vecs and all(v[0] == 1 and all(v) for v in vecs)
    assert all((v[0] + 2 * v[1] + 3 * v[2]) % 5 == 0 for v in vecs)
    with pytest.raises(SearchBudgetExceeded):
        list(full_support_vectors(ker.kernel, 3, 5, limit=2))


def test_simple_root_distance():
    assert simple_root_distance(F7, 3, ()) == 1
    assert simple_root_distance(F7, 3, (1,)) == 2
    assert simple_root_distance(F7, 3, (1, 2)) == 3
    assert simple_root_distance(F7, 3, (1, 2, 4)) is None


def test_castagnoli_decomposition_421():
    dec = castagnoli_dH(triple_code(7, (4, 2, 1)))
    assert dec.dH == 5
    assert [t.roots for t in dec.terms[:5]] == [(1, 2, 4), (1, 2), (1,), (1,), ()]
    assert dec.terms[0].infinite and dec.terms[0].product is None
    assert [t.product for t in dec.terms[1:5]] == [2 * 3, 3 * 2, 4 * 2, 5 * 1]
    row = dec.table()[0]
    assert row["dH_reduced"] == "inf" and row["P_t"] == 1


@pytest.mark.parametrize(
    "triple, dH, dp",
    [((2, 1, 0), 3, 5), ((3, 2, 1), 4, 8), ((5, 3, 2), 6, 12), ((0, 3, 0), 2, 4), ((4, 1, 1), 4, 7)],
)
def test_known_3p_distances(triple, dH, dp):
    rep = min_pair_distance(triple_code(7, triple))
    assert (rep.dH, rep.dp) == (dH, dp)


def test_report_witnesses_are_codewords():
    code = triple_code(7, (3, 1, 1))
    rep = min_pair_distance(code)
    assert contains(code, rep.dp_witness) and contains(code, rep.dH_witness)
    assert pair_weight(rep.dp_witness.vector(21)) == rep.dp
    assert rep.dH_witness.weight() == rep.dH
    assert rep.dH + 1 <= rep.dp <= 2 * rep.dH


def test_witness_is_lexicographic_minimum_over_shapes():
    code = triple_code(7, (2, 1, 1))
    rep = min_pair_distance(code)
    assert rep.dp_witness.vector(21)[0] == 1


def test_jobs_do_not_change_output():
    code = triple_code(7, (4, 2, 1))
    a, b = min_pair_distance(code, jobs=1), min_pair_distance(code, jobs=2)
    assert (a.dH, a.dp, a.dp_witness, a.dH_witness) == (b.dH, b.dp, b.dp_witness, b.dH_witness)


def test_repetition_code_is_unsupported():
    F5 = PrimeField(5)
    with pytest.raises(UnsupportedCodeError):
        min_pair_distance(build_code(F5, 5, FactorSpec.of(F5, [(1, 4)])))


def test_budget_errors():
    code = triple_code(7, (5, 3, 2))
    with pytest.raises(SearchBudgetExceeded):
        min_pair_distance(code, max_patterns=10)
    with pytest.raises(SearchBudgetExceeded):
        min_pair_distance(code, max_pair_weight=9)
    with pytest.raises(OracleUnavailable):
        oracle_pair_distance(code, cap=100)


def test_profile_count_matches_brute_force():
    n = 12
    for s in range(3, 11):
        brute = 0
        for w in range(1, n):
            for sup in itertools.combinations(range(1, n), w - 1):
                v = [0] * n
                for i in (0,) + sup:
                    v[i] = 1
                if not v[-1] and pair_weight(v) == s:  # position 0 starts a run
                    brute += 1
        assert profile_count(n, s, 1) == brute


def test_low_weight_codewords_classes():
    code = triple_code(7, (2, 0, 0))
    words = low_weight_codewords(code, 2)
    assert words and all(w.weight() == 2 and w.coeffs[0] == 1 for w in words)
    assert all(contains(code, w) for w in words)
    assert low_weight_codewords(code, 2, collect_limit=1) == words[:1]


@pytest.mark.parametrize(
    "p, n, pairs",
    [
        (7, 21, [(1, 4), (2, 2), (4, 1)]),
        (7, 21, [(1, 3), (2, 3), (4, 1)]),
        (5, 20, [(2, 2), (3, 1)]),
        (7, 14, [(1, 2), (6, 1)]),
        (3, 6, [(1, 1), (2, 1)]),
        (7, 42, [(2, 2), (3, 1)]),
    ],
)
def test_engine_matches_oracle(p, n, pairs):
    F = PrimeField(p)
    code = build_code(F, n, FactorSpec.of(F, pairs))
    assert min_pair_distance(code).dp == oracle_pair_distance(code)
