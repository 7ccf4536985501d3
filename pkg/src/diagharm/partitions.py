"""Integer partitions and their cell statistics.

Diagrams are drawn in French: row 0 sits at the bottom and holds the
largest part, and a cell is addressed as ``(column, row)``.  For a cell
``c``

* ``arm``   = cells strictly East of ``c`` (same row),
* ``coarm`` = cells strictly West of ``c`` (equals the column index),
* ``leg``   = cells strictly North of ``c`` (same column),
* ``coleg`` = cells strictly South of ``c`` (equals the row index).
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .qtpoly import ONE, Q, T, QtLaurent, qt_prod, qt_sum


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Being a tuple, partitions hash, compare and sort by their part sequence.
    """

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_any(cls, parts: Sequence[int]) -> Partition:
        """Sort an arbitrary multiset of positive integers into a partition."""
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    n = size

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> list[tuple[int, int]]:
        """Cells ``(column, row)`` in row-major order starting at ``(0, 0)``."""
        return [(c, r) for r, part in enumerate(self) for c in range(part)]

    def contains(self, other: Sequence[int]) -> bool:
        """True if the diagram of ``other`` fits inside this one."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def to_json(self) -> list[int]:
        return list(self)


@dataclass(frozen=True)
class CellStats:
    cell: tuple[int, int]
    arm: int
    leg: int
    coarm: int
    coleg: int


@dataclass(frozen=True)
class HookStats:
    n_mu: int
    n_mu_conj: int
    T_mu: QtLaurent
    B_mu: QtLaurent
    Pi_mu: QtLaurent
    w_mu: QtLaurent
    M: QtLaurent


def conjugate(mu: Sequence[int]) -> Partition:
    if not mu:
        return Partition()
    return Partition([sum(1 for p in mu if p > j) for j in range(mu[0])])


def staircase(m: int) -> Partition:
    """The staircase ``[m, m-1, ..., 1]``."""
    return Partition(range(m, 0, -1))


def cell_stats(mu: Sequence[int]) -> list[CellStats]:
    mu = Partition(mu)
    conj = conjugate(mu)
    return [
        CellStats(cell=(c, r), arm=mu[r] - c - 1, leg=conj[c] - r - 1, coarm=c, coleg=r)
        for c, r in mu.cells()
    ]


def n_of(mu: Sequence[int]) -> int:
    """``n(mu) = sum of colegs = sum_i i * mu_i`` (0-based rows)."""
    return sum(i * p for i, p in enumerate(mu))


def hook_stats(mu: Sequence[int]) -> HookStats:
    mu = Partition(mu)
    if not mu:
        raise ValueError("hook statistics are undefined for the empty partition")
    stats = cell_stats(mu)
    n_mu = sum(s.coleg for s in stats)
    n_conj = sum(s.coarm for s in stats)
    M = (ONE - T) * (ONE - Q)
    B = qt_sum(QtLaurent.monomial(s.coarm, s.coleg) for s in stats)
    Pi = qt_prod(
        ONE - QtLaurent.monomial(s.coarm, s.coleg) for s in stats if s.cell != (0, 0)
    )
    w = qt_prod(
        (QtLaurent.monomial(s.arm, 0) - QtLaurent.monomial(0, s.leg + 1))
        * (QtLaurent.monomial(0, s.leg) - QtLaurent.monomial(s.arm + 1, 0))
        for s in stats
    )
    return HookStats(
        n_mu=n_mu,
        n_mu_conj=n_conj,
        T_mu=QtLaurent.monomial(n_conj, n_mu),
        B_mu=B,
        Pi_mu=Pi,
        w_mu=w,
        M=M,
    )


def z_mu(mu: Sequence[int]) -> int:
    z = 1
    for part, mult in Counter(mu).items():
        z *= part ** mult * math.factorial(mult)
    return z


def partitions_of(
    n: int,
    max_part: int | None = None,
    length: int | None = None,
    inside: Sequence[int] | None = None,
) -> list[Partition]:
    """All partitions of ``n``, largest first in lexicographic order.

    ``max_part`` bounds every part, ``length`` fixes the number of parts and
    ``inside`` keeps only partitions whose diagram fits in the given shape.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    bound = n if max_part is None else min(n, max_part)
    return [Partition(p) for p in _gen(n, bound, length, tuple(inside) if inside is not None else None, 0)]


def _gen(n: int, bound: int, length: int | None, inside, depth: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if length is None or length == depth:
            yield ()
        return
    if length is not None:
        remaining = length - depth
        if remaining <= 0 or n > remaining * bound:
            return
    if inside is not None:
        if depth >= len(inside):
            return
        bound = min(bound, inside[depth])
    for first in range(min(n, bound), 0, -1):
        if length is not None and n - first < length - depth - 1:
            continue
        for rest in _gen(n - first, first, length, inside, depth + 1):
            yield (first,) + rest
