"""Smoke tests for the python bindings."""

import math

import pytest

latticemed = pytest.importorskip("latticemed")


def test_median3():
    assert latticemed.median3([1, 5], [2, 4], [3, 3]) == [2, 4]


def test_m_k_matches_sorting():
    vectors = [[3, 1, 2], [1, 3, 2], [2, 2, 2]]
    assert latticemed.m_k(vectors, 1) == [1, 1, 2]
    assert latticemed.m_k(vectors, 2) == [2, 2, 2]
    assert latticemed.m_k(vectors, 3) == [3, 3, 2]
    for k in (1, 2, 3):
        expected = [sorted(col)[k - 1] for col in zip(*vectors)]
        assert latticemed.m_k(vectors, k) == expected


def test_total_orderization_is_a_sorted_chain():
    chain = latticemed.total_orderization([[3, 1], [1, 3], [2, 2]])
    assert chain == [[1, 1], [2, 2], [3, 3]]


def test_apply_ph_builtins():
    assert latticemed.apply_ph("sum", [[1, 2], [3, 0]]) == [4, 2]
    gm = latticemed.apply_ph("gmean", [[1, 4], [4, 1]])
    assert gm == pytest.approx([2, 2])
    rp = latticemed.apply_ph("rootpow", [[3, 0], [0, 4]])
    assert rp == pytest.approx([3, 4])
    with pytest.raises(ValueError):
        latticemed.apply_ph("nope", [[1], [2]])


def test_boxtimes_is_the_geometric_mean():
    got = latticemed.boxtimes([1, 4, 0], [4, 1, 2])
    want = [math.sqrt(a * b) for a, b in [(1, 4), (4, 1), (0, 2)]]
    assert got == pytest.approx(want, abs=1e-6)


def test_exact_invariance_checks():
    assert latticemed.sum_invariance([[3, 1], [1, 3], [2, 2]])
    assert latticemed.product_invariance([[2, 0], [3, 5]])


def test_normal_form():
    assert latticemed.normal_form("med(a,b,c)") == [["a", "b"], ["a", "c"], ["b", "c"]]
    assert latticemed.normal_form("a & (a | b)") == [["a"]]


def test_counting():
    assert latticemed.free_dl_count(3) == 18
    assert latticemed.poset_count(3) == 5
    corpus = latticemed.corpus_json(3)
    assert len(corpus["posets"]) == 8
    assert len(corpus["lattices"]) == 8


def test_run_suite():
    assert "sum" in latticemed.suite_names()
    report = latticemed.run_suite("sum", seed=1, trials=500)
    assert report["summary"]["fail"] == 0
    assert report["suite"] == "sum"
