import json
from fractions import Fraction
from math import comb

import pytest

from diagharm import dyck, harmonics
from diagharm.exactla import gram_rank, rank
from diagharm.harmonics import (
    AllenConjectureFailure,
    DHASpace,
    ResultCache,
    allen_basis,
    build_span,
    check_exclusions,
    discarded_words,
    dimension_grid,
    musum_catalan,
    reconstruct_catalan_from_strings,
    starter_count_kernel,
    starter_count_moments,
    starter_count_qseries,
    starter_counts_qseries,
    starter_grid_from_catalan,
    starter_series,
    starters_kernel,
    theorem21_prune,
    verify_sl2_decomposition,
)
from diagharm.mvpoly import MultiPoly, linear_combination
from diagharm.operators import EWordCache, partition_alternant, sl2_E, sl2_F, vandermonde
from diagharm.partitions import Partition
from diagharm.qtpoly import QtLaurent

PUBLISHED_COUNTS = {5: 7, 6: 17, 7: 44, 8: 120}


def proportional(P, Q):
    return bool(P) and bool(Q) and rank([P, Q]) == 1


# -- spans -------------------------------------------------------------------

def test_build_span_examples():
    s = build_span(3, (3, 0))
    assert [w for w, _ in s.candidates] == [Partition([])] and s.dim == 1
    assert s.basis[0] == vandermonde(3)
    s = build_span(3, (1, 1))
    assert [w for w, _ in s.candidates] == [Partition([2])] and s.dim == 1
    s = build_span(5, (5, 2))
    assert [list(w) for w, _ in s.candidates] == [[4, 1], [3, 2]]
    assert s.dim == 1 and s.selected == [0]
    with pytest.raises(ValueError):
        build_span(3, (3, 1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_span_invariants(n):
    space = harmonics.get_space(n)
    for a, b in space.bidegrees():
        s = space.span(a, b)
        polys = [p for _, p in s.candidates]
        assert s.dim == len(s.selected) == rank(polys)
        if polys:
            assert gram_rank(polys) == s.dim
        for p in polys:
            assert not p or p.bidegree() == (a, b)


def test_dimension_grid_small():
    assert dimension_grid(1) == {(0, 0): 1}
    assert dimension_grid(2) == {(1, 0): 1, (0, 1): 1}
    assert dimension_grid(3) == dyck.coefficient_grid(3)
    assert sum(dimension_grid(4).values()) == 14


def test_dimension_grid_5():
    g = dimension_grid(5)
    assert g == dyck.coefficient_grid(5)
    assert sum(g.values()) == 42


def test_grid_mismatch_is_an_error(monkeypatch):
    space = DHASpace(3)
    space.grid = dict(space.grid)
    space.grid[(1, 1)] = 2
    with pytest.raises(harmonics.TheoremWiringError):
        space.span(1, 1)
    space.grid[(2, 1)] = 0
    with pytest.raises(harmonics.TheoremWiringError):
        space.span(2, 1)


# -- starters ------------------------------------------------------------------

def test_starters_n3():
    (s,) = starters_kernel(3, (3, 0))
    assert s.v0 == vandermonde(3) and s.length == 4
    (s,) = starters_kernel(3, (1, 1))
    assert proportional(s.v0, partition_alternant([2, 1]))
    assert s.length == 1
    with pytest.raises(ValueError):
        starters_kernel(3, (1, 2))


def test_starter_n5_matches_listed_combination():
    (s,) = starters_kernel(5, (6, 2))
    words = EWordCache(vandermonde(5))
    listed = linear_combination([3, 2], [words([2, 2]), words([3, 1])], 5)
    assert not sl2_F(listed)
    assert proportional(s.v0, listed)


def test_n5_string_ends_are_partition_alternants():
    (s,) = starters_kernel(5, (6, 1))
    assert proportional(s.v0, partition_alternant([2, 1, 1, 1]))
    end = s.v0
    for _ in range(5):
        end = sl2_E(end)
    assert proportional(end, partition_alternant([4, 1]))


def test_starter_json_and_description():
    (s,) = starters_kernel(5, (6, 2))
    data = s.to_json()
    assert set(data) == {"coefs", "words"}
    assert linear_combination(data["coefs"], [EWordCache(vandermonde(5))(w) for w in data["words"]], 5) == s.v0
    assert "Delta" in s.describe()


def test_starter_grid_examples():
    g = starter_grid_from_catalan(3)
    assert g.b == {(3, 0): 1, (1, 1): 1} and g.total == 2 and g.c == {4: 1, 1: 1}
    assert starter_grid_from_catalan(5).total == 7
    assert starter_grid_from_catalan(6).total == 17
    for n in range(1, 9):
        g = starter_grid_from_catalan(n)
        assert all(v > 0 for v in g.b.values())
        assert all(u >= v for u, v in g.b)
        assert g.total == sum(g.c.values())


def test_starter_series_examples():
    q = lambda e: QtLaurent.monomial(e)
    assert starter_series(3) == q(4) + q(1) - q(-1) - q(-4)
    assert starter_series(2) == q(2) - q(-2)
    assert starter_counts_qseries(2) == {2: 1}
    assert starter_count_qseries(3) == 2
    with pytest.raises(ValueError):
        starter_series(1)


@pytest.mark.parametrize("n", range(2, 10))
def test_series_equals_shifted_q_catalan(n):
    # (q - 1/q) q^{-C(n,2)} C_n(q) is the same Laurent polynomial
    from diagharm.qtpoly import q_catalan

    lhs = (QtLaurent.monomial(1) - QtLaurent.monomial(-1)) * q_catalan(n).shift_q(-comb(n, 2))
    assert starter_series(n) == lhs


@pytest.mark.parametrize("n, count", sorted(PUBLISHED_COUNTS.items()))
def test_published_counts(n, count):
    assert starter_count_qseries(n) == count


@pytest.mark.parametrize("n", range(2, 11))
def test_moments_equal_series(n):
    assert starter_count_moments(n) == starter_counts_qseries(n)
    assert starter_counts_qseries(n) == starter_grid_from_catalan(n).c


@pytest.mark.parametrize("n", range(2, 6))
def test_kernel_count_agrees(n):
    assert starter_count_kernel(n) == starter_grid_from_catalan(n).total
    space = harmonics.get_space(n)
    for (u, v), k in starter_grid_from_catalan(n).b.items():
        assert len(space.starters(u, v)) == k


@pytest.mark.parametrize("n", [1, 2, 3, 6, 9])
def test_reconstruct_catalan(n):
    assert reconstruct_catalan_from_strings(n) == dyck.qt_catalan(n)


# -- hook formula ----------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_musum_small(n):
    rep = musum_catalan(n)
    assert rep.ok and not rep.skipped
    assert rep.points_checked == (comb(n, 2) + 1) ** 2


def test_musum_n2_by_hand():
    terms = harmonics.musum_terms(2)
    for q, t in [(Fraction(2), Fraction(5)), (Fraction(-3, 7), Fraction(11, 2))]:
        assert harmonics.musum_value(terms, q, t) == q + t


def test_musum_fallback_replaces_zero_points(monkeypatch):
    monkeypatch.setattr(harmonics, "evaluation_points", lambda n: ([2, 3], [1, 5], [7, 11, 13]))
    rep = musum_catalan(2)
    assert rep.ok
    assert rep.skipped == [(2, 1), (3, 1)]
    assert rep.points_checked == 4


def test_evaluation_points_disjoint():
    qs, ts, spare = harmonics.evaluation_points(6)
    assert len(qs) == len(ts) == 16
    assert not set(qs) & set(ts) and not (set(qs) | set(ts)) & set(spare)


# -- Allen construction ----------------------------------------------------------

def test_allen_n2():
    res = allen_basis(2)
    assert res.ok
    by_lam = {e.copartition: e for e in res.elements}
    assert by_lam[Partition([])].poly == vandermonde(2) and by_lam[Partition([])].bidegree == (1, 0)
    y = MultiPoly.y
    assert by_lam[Partition([1])].poly == y(1, 2) - y(2, 2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_allen_basis(n):
    res = allen_basis(n)
    assert res.ok
    assert len(res.elements) == dyck.catalan_number(n)
    assert res.grid() == dyck.coefficient_grid(n)
    assert len({e.copartition for e in res.elements}) == len(res.elements)
    by_bd = {}
    for e in res.elements:
        assert e.poly.bidegree() == e.bidegree
        by_bd.setdefault(e.bidegree, []).append(e.poly)
    for polys in by_bd.values():
        assert rank(polys) == len(polys)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_allen_alternative_order(n):
    res = allen_basis(n, order="increasing-lex")
    assert res.ok and res.grid() == dyck.coefficient_grid(n)


def test_allen_failure_is_reported(monkeypatch):
    space = DHASpace(3)
    space.grid = dict(space.grid)
    space.grid[(1, 1)] = 2
    monkeypatch.setattr(harmonics, "get_space", lambda n, *a, **k: space)
    res = allen_basis(3)
    assert not res.ok
    (f,) = res.failures
    assert f.bidegree == (1, 1) and f.achieved == 1 and f.target == 2
    with pytest.raises(AllenConjectureFailure, match=r"\(1, 1\)"):
        allen_basis(3, strict=True)
    with pytest.raises(ValueError):
        allen_basis(3, order="random")


def test_allen_terms_json():
    res = allen_basis(3)
    data = [e.to_json() for e in res.elements]
    assert all(set(d) == {"copartition", "a", "b", "terms"} for d in data)


# -- pruning ------------------------------------------------------------------

def test_prune_examples():
    assert theorem21_prune(6, []) == []
    ex = theorem21_prune(6, [(5, [[3, 2], [4, 1]])])
    from_32 = [e for e in ex if e.source[1] == Partition([3, 2])]
    assert [e.r_b for e in from_32] == [1, 2, 3, 4, 5]
    for e in from_32:
        assert e.bidegree == (5 + 5 - e.r_b, 3)
        assert sum(e.word) == 15 - e.bidegree[0]


def test_discarded_words_are_dependent():
    space = harmonics.get_space(5)
    for a, w in discarded_words(5):
        span = space.span(a, len(w))
        assert rank(span.basis + [space.words(w)]) == span.dim


def test_discarded_pair_at_n5():
    assert (5, Partition([3, 2])) in discarded_words(5)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_exclusions_consistent(n):
    ex = theorem21_prune(n, discarded_words(n - 1))
    assert all(ok for _, ok in check_exclusions(n, ex))


# -- sl(2) ----------------------------------------------------------------------

def test_sl2_small():
    rep = verify_sl2_decomposition(2)
    assert rep.ok and rep.strings == [((1, 0), 2)]
    rep = verify_sl2_decomposition(3)
    assert rep.ok and sorted(rep.strings) == [((1, 1), 1), ((3, 0), 4)]


@pytest.mark.parametrize("n", [4, 5])
def test_sl2(n):
    rep = verify_sl2_decomposition(n)
    assert rep.ok, rep.failures
    assert rep.total_rank == dyck.catalan_number(n)
    assert len(rep.strings) == starter_grid_from_catalan(n).total


# -- cache ----------------------------------------------------------------------

def test_cache_roundtrip(tmp_path):
    cache = ResultCache(tmp_path)
    first = DHASpace(4, cache=cache)
    grid = first.dimension_grid()
    files = sorted(tmp_path.glob("*.json"))
    assert len(files) == len(first.bidegrees())
    fresh = DHASpace(4)
    for f in files:
        data = f.read_text()
        rec = json.loads(data)
        assert f == cache.path(4, rec["a"], rec["b"])
        assert harmonics._json_bytes(fresh.record(rec["a"], rec["b"])) == data
    second = DHASpace(4, cache=cache)
    assert second.dimension_grid() == grid
    assert [s.v0 for s in second.all_starters()] == [s.v0 for s in first.all_starters()]


def test_cache_from_env(tmp_path, monkeypatch):
    monkeypatch.setenv(harmonics.CACHE_ENV, str(tmp_path))
    assert ResultCache.from_env().root == tmp_path
    monkeypatch.delenv(harmonics.CACHE_ENV)
    assert ResultCache.from_env() is None


# -- n = 6 (opt-in) --------------------------------------------------------------

@pytest.mark.slow
def test_n6_grid_and_kernel():
    g = dimension_grid(6)
    assert g == dyck.coefficient_grid(6) and sum(g.values()) == 132
    assert starter_count_kernel(6) == 17


@pytest.mark.slow
@pytest.mark.parametrize("coefs, words", [
    ([11, 4], [[2, 2], [3, 1]]),
    ([2, 1], [[3, 2], [4, 1]]),
    ([3, 2], [[3, 3], [5, 1]]),
])
def test_n6_listed_starters(coefs, words):
    space = harmonics.get_space(6)
    P = linear_combination(coefs, [space.words(w) for w in words], 6)
    assert P and not sl2_F(P)
    u, v = P.bidegree()
    assert any(proportional(P, s.v0) for s in space.starters(u, v))


@pytest.mark.slow
def test_n6_exclusions_consistent():
    ex = theorem21_prune(6, discarded_words(5))
    assert all(ok for _, ok in check_exclusions(6, ex))


@pytest.mark.slow
def test_n6_sl2():
    assert verify_sl2_decomposition(6).ok
