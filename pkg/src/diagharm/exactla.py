"""Exact rank, left kernels and greedy independent subsets for lists of polynomials.

Each polynomial is a row; its monomials are the columns.  Rows are scaled to
primitive integer vectors and eliminated without fractions: combining two
rows multiplies through by the pivot entries and then strips the content
(gcd of all entries), which keeps coefficients small on sparse inputs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .mvpoly import MultiPoly, Monomial


class RankDeficitError(ArithmeticError):
    """Raised when a requested number of independent rows does not exist."""

    def __init__(self, achieved: int, target: int, where: str = ""):
        self.achieved = achieved
        self.target = target
        self.where = where
        msg = f"only {achieved} independent rows, {target} requested"
        super().__init__(f"{msg} at {where}" if where else msg)


def column_key(m: Monomial):
    """Columns sort so that the grevlex-largest monomial comes first."""
    return (-sum(m), m[::-1])


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def integer_row(P: MultiPoly) -> dict:
    """Clear denominators of ``P``; keys are column keys, values integers."""
    den = 1
    for _, c in P.items():
        if isinstance(c, Fraction):
            den = _lcm(den, c.denominator)
    row = {}
    for m, c in P.items():
        v = c * den
        row[column_key(m)] = v.numerator if isinstance(v, Fraction) else v
    return row


def _content(*dicts) -> int:
    g = 0
    for d in dicts:
        for v in d.values():
            g = math.gcd(g, v)
            if g == 1:
                return 1
    return g


def _combine(fa: int, a: dict, fb: int, b: dict) -> dict:
    """``fa*a - fb*b`` with zero entries dropped."""
    out = {k: fa * v for k, v in a.items()} if fa != 1 else dict(a)
    for k, v in b.items():
        w = out.get(k, 0) - fb * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


class Echelon:
    """Incremental row echelon form over the integers.

    ``add`` reports whether a new row raises the rank.  With ``track=True``
    every row remembers its combination of the input rows, so rows that
    reduce to zero yield left-kernel vectors.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.pivots: dict = {}
        self.kernel_vectors: list[dict[int, int]] = []
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict, combo: dict | None = None):
        pivots = self.pivots
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                break
            prow, pcombo = piv
            a, b = prow[c], row[c]
            g = math.gcd(a, b)
            fa, fb = a // g, b // g
            row = _combine(fa, row, fb, prow)
            if combo is not None:
                combo = _combine(fa, combo, fb, pcombo)
                g = _content(row, combo)
            else:
                g = _content(row)
            if g > 1:
                row = {k: v // g for k, v in row.items()}
                if combo is not None:
                    combo = {k: v // g for k, v in combo.items()}
        return row, combo

    def add(self, row: dict) -> bool:
        idx = self._count
        self._count += 1
        combo = {idx: 1} if self.track else None
        # with tracking the row must stay an integer multiple of its input
        g = 1 if self.track else _content(row)
        if g > 1:
            row = {k: v // g for k, v in row.items()}
        row, combo = self.reduce(row, combo)
        if not row:
            if combo is not None:
                self.kernel_vectors.append(combo)
            return False
        if row[min(row)] < 0:
            row = {k: -v for k, v in row.items()}
            if combo is not None:
                combo = {k: -v for k, v in combo.items()}
        self.pivots[min(row)] = (row, combo)
        return True

    def add_poly(self, P: MultiPoly) -> bool:
        return self.add(integer_row(P))

    def contains(self, row: dict) -> bool:
        reduced, _ = self.reduce(dict(row))
        return not reduced


@dataclass
class MonomialMatrix:
    rows: list[MultiPoly]
    columns: list[Monomial] = field(init=False)

    def __post_init__(self):
        ns = {r.n for r in self.rows}
        if len(ns) > 1:
            raise ValueError("rows live in different polynomial rings")
        cols = set()
        for r in self.rows:
            cols.update(r.monomials())
        self.columns = sorted(cols, key=column_key)

    def entries(self) -> list[list]:
        return [[r.coeff(m) for m in self.columns] for r in self.rows]

    def rank(self) -> int:
        return rank(self.rows)

    def kernel(self) -> list[list[int]]:
        return kernel(self.rows)


def rank(rows: Sequence[MultiPoly] | MonomialMatrix) -> int:
    if isinstance(rows, MonomialMatrix):
        rows = rows.rows
    ints = sorted((integer_row(P) for P in rows), key=len)
    ech = Echelon()
    for r in ints:
        if r:
            ech.add(r)
    return ech.rank


def normalize_vector(vec: Sequence[int]) -> list[int]:
    """Primitive integer vector with first nonzero entry positive."""
    vec = list(vec)
    g = reduce(math.gcd, vec, 0)
    if g == 0:
        return vec
    vec = [v // g for v in vec]
    first = next(v for v in vec if v)
    return [-v for v in vec] if first < 0 else vec


def kernel(rows: Sequence[MultiPoly] | MonomialMatrix) -> list[list[int]]:
    """Basis of ``{c : sum_i c_i rows[i] = 0}`` as primitive integer vectors.

    Row ``i`` is scaled by its denominator lcm before elimination; the
    returned vectors refer to the original (unscaled) rows.
    """
    if isinstance(rows, MonomialMatrix):
        rows = rows.rows
    rows = list(rows)
    scales = []
    ech = Echelon(track=True)
    for P in rows:
        den = 1
        for _, c in P.items():
            if isinstance(c, Fraction):
                den = _lcm(den, c.denominator)
        scales.append(den)
        ech.add(integer_row(P))
    out = []
    for combo in ech.kernel_vectors:
        vec = [combo.get(i, 0) * scales[i] for i in range(len(rows))]
        out.append(normalize_vector(vec))
    return out


def select_independent(rows: Sequence[MultiPoly], target: int, where: str = "") -> list[int]:
    """Scan left to right keeping rows that raise the rank; stop at ``target``."""
    if target <= 0:
        return []
    ech = Echelon()
    kept = []
    for i, P in enumerate(rows):
        if P and ech.add_poly(P):
            kept.append(i)
            if len(kept) == target:
                return kept
    raise RankDeficitError(len(kept), target, where)


def gram_rank(rows: Sequence[MultiPoly]) -> int:
    """Rank through the Gram matrix of the apolar scalar product.

    The product is positive definite on real polynomials, so the Gram matrix
    has the same rank as the rows.  Used as an independent cross-check.
    """
    import sympy

    from .mvpoly import scalar_product

    rows = list(rows)
    if not rows:
        return 0
    G = sympy.Matrix(len(rows), len(rows), lambda i, j: sympy.Rational(scalar_product(rows[i], rows[j])))
    return G.rank()


def solve_rational(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system exactly by Gauss-Jordan elimination."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular system")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]
