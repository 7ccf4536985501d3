from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diagharm.qtpoly import ONE, Q, T, QtLaurent, euler_apply, q_binomial, q_catalan, q_integer
from diagharm.dyck import catalan_number, qt_catalan

terms_st = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.integers(-9, 9), max_size=5
)
laurent_st = terms_st.map(QtLaurent)


def qpoly(*coefs):
    return QtLaurent({(i, 0): c for i, c in enumerate(coefs)})


def test_canonical_form():
    p = QtLaurent({(1, 0): 2, (0, 1): 0})
    assert p.terms == {(1, 0): 2}
    assert QtLaurent({}) == QtLaurent.const(0)
    assert not QtLaurent.const(0)


def test_arithmetic_examples():
    assert (ONE + Q) * (ONE - Q) == ONE - Q * Q
    assert (Q + T) ** 0 == ONE
    expanded = (ONE + Q + T) * (ONE - Q) * (ONE - T)
    # hand expansion: the qt, q and t terms cancel, leaving six terms
    assert expanded == ONE - Q * Q - T * T - Q * T + Q * Q * T + Q * T * T
    assert expanded(2, 3) == 6 * (-1) * (-2)


def test_negative_power():
    assert (Q * T) ** -2 == QtLaurent.monomial(-2, -2)
    with pytest.raises(ValueError):
        (ONE + Q) ** -1


@given(laurent_st, laurent_st, laurent_st)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QtLaurent.const(0)
    assert -(-a) == a


@given(laurent_st, laurent_st)
def test_evaluation_is_a_ring_map(a, b):
    q, t = Fraction(3, 2), Fraction(-5, 7)
    assert (a * b)(q, t) == a(q, t) * b(q, t)
    assert (a + b)(q, t) == a(q, t) + b(q, t)


def product_formula(m, k):
    """Gaussian binomial by the quotient of q-factorial products."""
    num = ONE
    den = ONE
    for i in range(k):
        num = num * (ONE - QtLaurent.monomial(m - i))
        den = den * (ONE - QtLaurent.monomial(i + 1))
    return num.exact_div(den)


def test_q_binomial_examples():
    assert q_binomial(4, 2) == qpoly(1, 1, 2, 1, 1)
    assert q_binomial(7, 0) == ONE
    assert q_binomial(2, 1) == ONE + Q
    with pytest.raises(ValueError):
        q_binomial(3, 4)
    with pytest.raises(ValueError):
        q_binomial(3, -1)


@given(st.integers(0, 12).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))))
def test_q_binomial_product_formula(mk):
    m, k = mk
    got = q_binomial(m, k)
    assert got == product_formula(m, k)
    assert all(c > 0 for c in got.terms.values())


def test_q_catalan_examples():
    assert q_catalan(1) == ONE
    assert q_catalan(2) == qpoly(1, 0, 1)
    assert q_catalan(3) == QtLaurent({(e, 0): 1 for e in (0, 2, 3, 4, 6)})


@pytest.mark.parametrize("n", range(1, 9))
def test_q_catalan_properties(n):
    p = q_catalan(n)
    assert all(c > 0 for c in p.terms.values())
    assert p.degree_q() <= n * (n - 1)
    assert p(1, 1) == catalan_number(n)


def test_exact_div_rejects_remainder():
    with pytest.raises(ArithmeticError):
        (ONE + Q * Q).exact_div(ONE + Q)


def test_q_integer():
    assert q_integer(3) == qpoly(1, 1, 1)


def test_specialize_examples():
    c3 = qt_catalan(3)
    want = QtLaurent({(-3, 0): 1, (-1, 0): 1, (0, 0): 1, (1, 0): 1, (3, 0): 1})
    assert c3.specialize_t_to_q_inverse() == want
    assert (Q * T).specialize_t_to_q_inverse() == ONE
    assert T.specialize_t_to_q_inverse() == QtLaurent.monomial(-1)


@given(laurent_st, laurent_st)
def test_specialize_multiplicative(a, b):
    s = lambda p: p.specialize_t_to_q_inverse()
    assert s(a * b) == s(a) * s(b)


def test_euler_examples():
    assert euler_apply(Q ** 3, 1) == Q ** 3 * 3
    p = Q - QtLaurent.monomial(-1)
    assert euler_apply(p, 3) == Q + QtLaurent.monomial(-1)
    p = QtLaurent({(4, 0): 1, (1, 0): 1, (-1, 0): -1, (-4, 0): -1})
    assert euler_apply(p, 1) == QtLaurent({(4, 0): 4, (1, 0): 1, (-1, 0): 1, (-4, 0): 4})
    with pytest.raises(ValueError):
        euler_apply(T, 1)


def test_json_roundtrip_and_order():
    p = QtLaurent({(2, 0): 10 ** 30, (0, 1): -3, (-1, -1): 1})
    data = p.to_json()
    keys = [(d["t"], d["q"]) for d in data["terms"]]
    assert keys == sorted(keys)
    assert all(isinstance(d["c"], str) for d in data["terms"])
    assert QtLaurent.from_json(data) == p
