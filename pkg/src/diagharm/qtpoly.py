"""Exact Laurent polynomials in two commuting variables ``q`` and ``t``.

Coefficients are Python integers, so nothing ever rounds.  Exponents may be
negative; a value is stored as a dict ``{(e_q, e_t): coeff}`` with no zero
entries, which makes equality and hashing structural.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Exp = tuple[int, int]


class QtLaurent:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None):
        clean = {}
        if terms:
            for (eq, et), c in terms.items():
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be integers, got {c!r}")
                if c:
                    clean[(int(eq), int(et))] = c
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: int) -> QtLaurent:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, eq: int = 0, et: int = 0, c: int = 1) -> QtLaurent:
        return cls({(eq, et): c})

    @classmethod
    def _coerce(cls, other) -> QtLaurent:
        if isinstance(other, QtLaurent):
            return other
        if isinstance(other, int):
            return cls.const(other)
        return NotImplemented

    # -- container protocol -----------------------------------------------
    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exp, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, eq: int, et: int = 0) -> int:
        return self._terms.get((eq, et), 0)

    def __eq__(self, other) -> bool:
        other = QtLaurent._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations --------------------------------------------------
    def __add__(self, other) -> QtLaurent:
        other = QtLaurent._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return QtLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> QtLaurent:
        return QtLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> QtLaurent:
        other = QtLaurent._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QtLaurent:
        return (-self) + other

    def __mul__(self, other) -> QtLaurent:
        other = QtLaurent._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exp, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return QtLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QtLaurent:
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative power of a non-monomial")
            ((eq, et), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a monomial with coefficient other than +-1")
            return QtLaurent({(eq * k, et * k): c ** (-k)})
        result = QtLaurent.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure --------------------------------------------------------
    def is_univariate_q(self) -> bool:
        return all(et == 0 for _, et in self._terms)

    def degree_q(self) -> int:
        return max(eq for eq, _ in self._terms)

    def low_degree_q(self) -> int:
        return min(eq for eq, _ in self._terms)

    def swap_qt(self) -> QtLaurent:
        return QtLaurent({(et, eq): c for (eq, et), c in self._terms.items()})

    def specialize_t_to_q_inverse(self) -> QtLaurent:
        """Substitute ``t = 1/q``; the result involves ``q`` only."""
        out: dict[Exp, int] = {}
        for (eq, et), c in self._terms.items():
            k = (eq - et, 0)
            out[k] = out.get(k, 0) + c
        return QtLaurent(out)

    def shift_q(self, k: int) -> QtLaurent:
        return QtLaurent({(eq + k, et): c for (eq, et), c in self._terms.items()})

    def __call__(self, q, t=1):
        """Evaluate at numbers (ints or Fractions); negative powers allowed."""
        total = 0
        for (eq, et), c in self._terms.items():
            total += c * _power(q, eq) * _power(t, et)
        return total

    def exact_div(self, other: QtLaurent) -> QtLaurent:
        """Quotient of two univariate Laurent polynomials in ``q``.

        Raises ``ArithmeticError`` when the division leaves a remainder.
        """
        if not (self.is_univariate_q() and other.is_univariate_q()):
            raise ValueError("exact_div is only defined for univariate q-polynomials")
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = {eq: c for (eq, _), c in self._terms.items()}
        if not rem:
            return QtLaurent()
        dtop = other.degree_q()
        lead = other.coeff(dtop)
        den = {eq: c for (eq, _), c in other._terms.items()}
        floor = min(rem) - other.low_degree_q()
        quot: dict[Exp, int] = {}
        while rem:
            top = max(rem)
            shift = top - dtop
            c, r = divmod(rem[top], lead)
            if r or shift < floor:
                raise ArithmeticError("inexact division")
            quot[(shift, 0)] = c
            for e, d in den.items():
                k = e + shift
                v = rem.get(k, 0) - c * d
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return QtLaurent(quot)

    # -- serialization ----------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exp, int]]:
        """Terms in canonical order: ascending ``(e_t, e_q)``."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def to_json(self) -> dict:
        return {"terms": [{"t": et, "q": eq, "c": str(c)} for (eq, et), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> QtLaurent:
        return cls({(int(d["q"]), int(d["t"])): int(d["c"]) for d in data["terms"]})

    def __repr__(self) -> str:
        return f"QtLaurent({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (eq, et), c in reversed(self.sorted_terms()):
            mono = _mono_str("t", et) + _mono_str("q", eq)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


def _mono_str(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}" if e > 0 else f"{var}^({e})"


def _power(x, e: int):
    if e >= 0:
        return x ** e
    return Fraction(1) / (Fraction(x) ** (-e))


ONE = QtLaurent.const(1)
Q = QtLaurent.monomial(1, 0)
T = QtLaurent.monomial(0, 1)


def qt_sum(items: Iterable[QtLaurent]) -> QtLaurent:
    out: dict[Exp, int] = {}
    for p in items:
        for k, c in p.items():
            out[k] = out.get(k, 0) + c
    return QtLaurent(out)


def qt_prod(items: Iterable[QtLaurent]) -> QtLaurent:
    out = ONE
    for p in items:
        out = out * p
    return out


def q_integer(m: int) -> QtLaurent:
    """``[m]_q = 1 + q + ... + q^(m-1)``."""
    return QtLaurent({(i, 0): 1 for i in range(m)})


def q_binomial(m: int, k: int) -> QtLaurent:
    """Gaussian binomial coefficient ``[m choose k]_q``.

    Built with the q-Pascal recurrence, so no division is needed.
    """
    if not 0 <= k <= m:
        raise ValueError(f"q_binomial needs 0 <= k <= m, got m={m}, k={k}")
    # row[j] = [i choose j]_q as coefficient lists
    row: list[list[int]] = [[1]]
    for i in range(1, m + 1):
        new = []
        for j in range(min(i, k) + 1):
            # [i,j] = [i-1,j-1] + q^j [i-1,j]
            a = row[j - 1] if j >= 1 else []
            b = row[j] if j < len(row) else []
            size = max(len(a), len(b) + j)
            coeffs = [0] * size
            for e, c in enumerate(a):
                coeffs[e] += c
            for e, c in enumerate(b):
                coeffs[e + j] += c
            new.append(coeffs)
        row = new
    return QtLaurent({(e, 0): c for e, c in enumerate(row[k])})


def q_catalan(n: int) -> QtLaurent:
    """``[2n choose n]_q / [n+1]_q`` by exact polynomial division."""
    if n < 0:
        raise ValueError("q_catalan needs n >= 0")
    return q_binomial(2 * n, n).exact_div(q_integer(n + 1))


def euler_apply(p: QtLaurent, power: int) -> QtLaurent:
    """Apply ``(q d/dq)^power`` to a Laurent polynomial in ``q`` alone."""
    if not p.is_univariate_q():
        raise ValueError("euler_apply expects a polynomial in q only")
    if power < 0:
        raise ValueError("power must be nonnegative")
    return QtLaurent({(eq, 0): c * eq ** power for (eq, _), c in p.items()})
