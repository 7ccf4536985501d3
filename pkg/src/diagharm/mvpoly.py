"""Sparse polynomials in ``x_1..x_n, y_1..y_n`` with exact rational coefficients.

A monomial is an exponent tuple of length ``2n``: the ``x`` exponents
followed by the ``y`` exponents.  Coefficients are ``int`` whenever they are
integral and ``Fraction`` otherwise, which keeps the integer-only workloads
(every operator in this package has integer matrix entries) fast.

Variable indices in the public API are 1-based, as in ``x_1..x_n``.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

Monomial = tuple[int, ...]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _as_rational(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"coefficient {c!r} is not an exact rational")


def grevlex_key(m: Monomial):
    """Sort key for graded reverse lexicographic order (ascending)."""
    return (sum(m), tuple(-e for e in reversed(m)))


class MultiPoly:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], object] | None = None):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.n = n
        clean: dict[Monomial, object] = {}
        if terms:
            for m, c in terms.items():
                m = tuple(int(e) for e in m)
                if len(m) != 2 * n or min(m, default=0) < 0:
                    raise ValueError(f"bad exponent vector {m} for n={n}")
                c = _as_rational(c)
                if c:
                    clean[m] = _norm(clean.get(m, 0) + c)
                    if not clean[m]:
                        del clean[m]
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> MultiPoly:
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        return p

    @classmethod
    def zero(cls, n: int) -> MultiPoly:
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> MultiPoly:
        return cls._raw(n, {(0,) * (2 * n): 1})

    @classmethod
    def monomial(cls, n: int, xexp: Sequence[int], yexp: Sequence[int], c=1) -> MultiPoly:
        return cls(n, {tuple(xexp) + tuple(yexp): c})

    @classmethod
    def x(cls, i: int, n: int) -> MultiPoly:
        return cls._var(i, n, 0)

    @classmethod
    def y(cls, i: int, n: int) -> MultiPoly:
        return cls._var(i, n, n)

    @classmethod
    def _var(cls, i: int, n: int, offset: int) -> MultiPoly:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        m = [0] * (2 * n)
        m[offset + i - 1] = 1
        return cls._raw(n, {tuple(m): 1})

    # -- basic protocol ---------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, object]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, object]]:
        return iter(self._terms.items())

    def monomials(self) -> Iterable[Monomial]:
        return self._terms.keys()

    def coeff(self, m: Sequence[int]):
        return self._terms.get(tuple(m), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def _check(self, other: MultiPoly):
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"mismatched number of variable pairs: {self.n} vs {other.n}")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: MultiPoly) -> MultiPoly:
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm(v)
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        return self + (-other)

    def scale(self, c) -> MultiPoly:
        c = _as_rational(c)
        if not c:
            return MultiPoly.zero(self.n)
        return MultiPoly._raw(self.n, {m: _norm(v * c) for m, v in self._terms.items()})

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly._raw(self.n, {m: _norm(c) for m, c in out.items() if c})

    def __rmul__(self, other) -> MultiPoly:
        return self.scale(other)

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = MultiPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    # -- degrees ----------------------------------------------------------
    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def bidegrees(self) -> set[tuple[int, int]]:
        n = self.n
        return {(sum(m[:n]), sum(m[n:])) for m in self._terms}

    def bidegree(self) -> tuple[int, int] | None:
        """The bi-degree if ``self`` is nonzero and bi-homogeneous, else ``None``."""
        degs = self.bidegrees()
        return degs.pop() if len(degs) == 1 else None

    def is_bihomogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    # -- calculus ---------------------------------------------------------
    def partial(self, var: str, i: int, order: int = 1) -> MultiPoly:
        """Iterated partial derivative with respect to ``x_i`` or ``y_i``."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        if var not in ("x", "y"):
            raise ValueError("var must be 'x' or 'y'")
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        if order == 0:
            return self
        pos = i - 1 + (self.n if var == "y" else 0)
        out: dict[Monomial, object] = {}
        for m, c in self._terms.items():
            e = m[pos]
            if e >= order:
                nm = list(m)
                nm[pos] = e - order
                out[tuple(nm)] = c * falling(e, order)
        return MultiPoly._raw(self.n, out)

    def multiply_var(self, var: str, i: int) -> MultiPoly:
        return self * (MultiPoly.x(i, self.n) if var == "x" else MultiPoly.y(i, self.n))

    def power_sum_derivative(self, p: int, q: int) -> MultiPoly:
        """``sum_i d^p/dx_i^p d^q/dy_i^q`` applied to ``self``."""
        n = self.n
        out: dict[Monomial, object] = {}
        for m, c in self._terms.items():
            for i in range(n):
                a, b = m[i], m[n + i]
                if a >= p and b >= q:
                    nm = list(m)
                    nm[i] = a - p
                    nm[n + i] = b - q
                    nm = tuple(nm)
                    out[nm] = out.get(nm, 0) + c * falling(a, p) * falling(b, q)
        return MultiPoly._raw(n, {m: _norm(c) for m, c in out.items() if c})

    # -- symmetric group --------------------------------------------------
    def act(self, sigma: Sequence[int]) -> MultiPoly:
        return diagonal_action(sigma, self)

    # -- serialization ----------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        """Terms in descending graded reverse lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def to_json(self) -> list[dict]:
        n = self.n
        return [
            {"x": list(m[:n]), "y": list(m[n:]), "c": _rat_str(c)}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, n: int, data: Sequence[Mapping]) -> MultiPoly:
        return cls(n, {tuple(d["x"]) + tuple(d["y"]): Fraction(d["c"]) for d in data})

    def __repr__(self) -> str:
        return f"MultiPoly(n={self.n}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        n = self.n
        pieces = []
        for m, c in self.sorted_terms():
            factors = []
            for k, e in enumerate(m):
                if e:
                    name = f"x{k + 1}" if k < n else f"y{k - n + 1}"
                    factors.append(name if e == 1 else f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                pieces.append(_rat_str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{_rat_str(c)}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


def _rat_str(c) -> str:
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def falling(e: int, k: int) -> int:
    """``e (e-1) ... (e-k+1)``."""
    out = 1
    for j in range(k):
        out *= e - j
    return out


def monomial_factorial(m: Monomial) -> int:
    out = 1
    for e in m:
        out *= math.factorial(e)
    return out


def poly_sum(polys: Iterable[MultiPoly], n: int) -> MultiPoly:
    out: dict[Monomial, object] = {}
    for p in polys:
        if p.n != n:
            raise ValueError("mismatched number of variable pairs")
        for m, c in p._terms.items():
            out[m] = out.get(m, 0) + c
    return MultiPoly._raw(n, {m: _norm(c) for m, c in out.items() if c})


def linear_combination(coefs: Sequence, polys: Sequence[MultiPoly], n: int) -> MultiPoly:
    return poly_sum((p.scale(c) for c, p in zip(coefs, polys) if c), n)


def check_permutation(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def permutation_sign(sigma: Sequence[int]) -> int:
    seen = [False] * len(sigma)
    sign = 1
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = sigma[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def diagonal_action(sigma: Sequence[int], P: MultiPoly) -> MultiPoly:
    """Send ``x_i -> x_sigma(i)`` and ``y_i -> y_sigma(i)`` simultaneously."""
    n = P.n
    sigma = check_permutation(sigma, n)
    out = {}
    for m, c in P._terms.items():
        nm = [0] * (2 * n)
        for i in range(n):
            j = sigma[i] - 1
            nm[j] = m[i]
            nm[n + j] = m[n + i]
        out[tuple(nm)] = c
    return MultiPoly._raw(n, out)


def scalar_product(P: MultiPoly, Q: MultiPoly):
    """Constant term of ``P(d/dX, d/dY) Q``.

    Monomials are orthogonal, and ``<m, m> = prod(exponent!)``.
    """
    P._check(Q)
    if len(P) > len(Q):
        P, Q = Q, P
    total = 0
    for m, c in P._terms.items():
        d = Q._terms.get(m)
        if d:
            total += c * d * monomial_factorial(m)
    return _norm(total) if isinstance(total, Fraction) else total


def is_diagonal_harmonic(P: MultiPoly) -> bool:
    """True iff every power-sum derivative ``sum_i d^p_x_i d^q_y_i`` kills ``P``.

    Only ``1 <= p+q <= deg P`` needs checking; higher orders annihilate.
    """
    deg = P.total_degree()
    for total in range(1, deg + 1):
        for p in range(total + 1):
            if P.power_sum_derivative(p, total - p):
                return False
    return True


def bidegree_components(P: MultiPoly) -> dict[tuple[int, int], MultiPoly]:
    n = P.n
    parts: dict[tuple[int, int], dict] = {}
    for m, c in P._terms.items():
        parts.setdefault((sum(m[:n]), sum(m[n:])), {})[m] = c
    return {k: MultiPoly._raw(n, v) for k, v in sorted(parts.items())}


def random_poly(
    n: int,
    rng: random.Random,
    nterms: int = 5,
    max_exp: int = 3,
    coeff_range: int = 5,
    rational: bool = False,
) -> MultiPoly:
    """A reproducible random polynomial drawn from ``rng``."""
    terms = {}
    for _ in range(nterms):
        m = tuple(rng.randint(0, max_exp) for _ in range(2 * n))
        c = rng.randint(-coeff_range, coeff_range)
        if rational:
            c = Fraction(c, rng.randint(1, coeff_range))
        terms[m] = c
    return MultiPoly(n, terms)
