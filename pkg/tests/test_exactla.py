import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from diagharm.exactla import (
    Echelon,
    MonomialMatrix,
    RankDeficitError,
    gram_rank,
    kernel,
    normalize_vector,
    rank,
    select_independent,
    solve_rational,
)
from diagharm.mvpoly import MultiPoly, linear_combination, random_poly
from diagharm.operators import EWordCache, vandermonde

seeds = st.integers(0, 10 ** 6)


def x(i, n=3):
    return MultiPoly.x(i, n)


def sympy_rank(rows):
    m = MonomialMatrix(list(rows))
    if not m.columns:
        return 0
    return sympy.Matrix(m.entries()).rank()


def dependent_rows(seed, n=2):
    """Random rows with planted dependencies."""
    rng = random.Random(seed)
    base = [random_poly(n, rng, nterms=3, max_exp=2, rational=True) for _ in range(rng.randint(1, 4))]
    rows = list(base)
    for _ in range(rng.randint(0, 4)):
        coefs = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in base]
        rows.append(linear_combination(coefs, base, n))
    rng.shuffle(rows)
    return rows


def test_rank_examples():
    assert rank([x(1), x(2), x(3)]) == 3
    assert rank([x(1) - x(2), (x(2) - x(1)).scale(2)]) == 1
    words = EWordCache(vandermonde(5))
    assert rank([words([3, 2]), words([4, 1])]) == 1
    assert rank([]) == 0
    assert rank([MultiPoly.zero(3)]) == 0


@given(seeds)
def test_rank_oracles(seed):
    rows = dependent_rows(seed)
    r = rank(rows)
    assert r == sympy_rank(rows)
    assert r == gram_rank(rows)


def test_kernel_examples():
    assert kernel([x(1), x(1)]) == [[1, -1]]
    assert kernel([x(1), x(2)]) == []
    P, Q = x(1) + x(2), x(3)
    assert kernel([P, P.scale(2), Q]) == [[2, -1, 0]]


@given(seeds)
def test_kernel_vectors(seed):
    rows = dependent_rows(seed)
    vecs = kernel(rows)
    assert len(vecs) == len(rows) - rank(rows)
    for v in vecs:
        assert all(isinstance(c, int) for c in v)
        assert v == normalize_vector(v)
        assert not linear_combination(v, rows, 2)
    if vecs:
        assert sympy.Matrix(vecs).rank() == len(vecs)


def test_select_examples():
    P, Q = x(1) + x(2), x(3)
    assert select_independent([P, P.scale(2), Q], 2) == [0, 2]
    assert select_independent([P], 0) == []
    words = EWordCache(vandermonde(5))
    assert select_independent([words([4, 1]), words([3, 2])], 1) == [0]
    with pytest.raises(RankDeficitError) as err:
        select_independent([P, P.scale(2)], 2, where="test")
    assert err.value.achieved == 1 and err.value.target == 2


@given(seeds)
def test_select_spans(seed):
    rows = dependent_rows(seed)
    r = rank(rows)
    idx = select_independent(rows, r)
    assert idx == sorted(idx)
    assert rank([rows[i] for i in idx]) == r


def test_monomial_matrix_columns():
    m = MonomialMatrix([x(1) * x(2), x(3) ** 2, x(1) ** 2])
    # grevlex: equal degree, larger last exponent sorts later
    assert m.columns[-1] == (0, 0, 2, 0, 0, 0)
    assert m.rank() == 3
    assert m.kernel() == []
    with pytest.raises(ValueError):
        MonomialMatrix([x(1, 2), x(1, 3)])


def test_echelon_contains():
    ech = Echelon()
    ech.add_poly(x(1) + x(2))
    from diagharm.exactla import integer_row

    assert ech.contains(integer_row((x(1) + x(2)).scale(3)))
    assert not ech.contains(integer_row(x(1)))


def test_solve_rational():
    A = [[1, 1], [1, 3]]
    assert solve_rational(A, [2, 4]) == [1, 1]
    with pytest.raises(ArithmeticError):
        solve_rational([[1, 2], [2, 4]], [1, 2])
