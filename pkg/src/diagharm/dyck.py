"""Dyck paths in the n x n square and their area, bounce and dinv statistics.

A path is stored by the abscissas ``d_1..d_n`` of its North steps: the i-th
North step runs from height ``i-1`` to ``i`` along ``x = d_i``.  Validity
means ``d_1 = 0``, ``d`` weakly increasing and ``d_i <= i-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partitions import Partition
from .qtpoly import QtLaurent


@dataclass(frozen=True)
class DyckPath:
    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        object.__setattr__(self, "d", d)
        if not d:
            raise ValueError("a Dyck path needs at least one North step")
        for i, x in enumerate(d):
            if not 0 <= x <= i:
                raise ValueError(f"d[{i}]={x} leaves the region above the diagonal")
            if i and x < d[i - 1]:
                raise ValueError(f"abscissas must be weakly increasing: {d}")

    @property
    def n(self) -> int:
        return len(self.d)

    def u(self) -> tuple[int, ...]:
        """Row-by-row area contributions ``u_i = (i-1) - d_i``."""
        return tuple(i - x for i, x in enumerate(self.d))

    def area(self) -> int:
        return sum(self.u())

    def bounce(self) -> int:
        return bounce(self)

    def dinv(self) -> int:
        return dinv(self)

    def copartition(self) -> Partition:
        return copartition(self)

    def to_json(self) -> dict:
        return {"d": list(self.d)}


@dataclass(frozen=True)
class PathStats:
    area: int
    bounce: int
    dinv: int
    u: tuple[int, ...]


def enumerate_paths(n: int) -> list[DyckPath]:
    """All Dyck paths of size ``n`` in lexicographic order of ``d``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [DyckPath(d) for d in _paths(n)]


def _paths(n: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix: list[int]):
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 0
        for x in range(lo, i + 1):
            prefix.append(x)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def area(path: DyckPath) -> int:
    return path.area()


def bounce(path: DyckPath) -> int:
    """Sum of the labels ``n - j`` of the diagonal points ``(j, j)`` the bounce path hits.

    Travelling North along ``x = X`` the bounce path turns East at the first
    West end of an East step of the path; since ``d`` is sorted, that height is
    the number of North steps with ``d_i <= X``.
    """
    d, n = path.d, path.n
    total = 0
    x = 0
    while True:
        h = sum(1 for v in d if v <= x)
        if h >= n:
            return total
        total += n - h
        x = h


def dinv(path: DyckPath) -> int:
    u = path.u()
    n = len(u)
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] == u[j] or u[i] == u[j] + 1:
                count += 1
    return count


def path_stats(path: DyckPath) -> PathStats:
    return PathStats(area=path.area(), bounce=bounce(path), dinv=dinv(path), u=path.u())


def copartition(path: DyckPath) -> Partition:
    """The nonzero North-step abscissas, largest first."""
    return Partition(sorted((x for x in path.d if x), reverse=True))


def qt_catalan(n: int, stat: str = "bounce") -> QtLaurent:
    """``sum t^bounce q^area`` (``stat='bounce'``) or ``sum t^area q^dinv`` (``stat='dinv'``)."""
    terms: dict[tuple[int, int], int] = {}
    for path in enumerate_paths(n):
        a = path.area()
        if stat == "bounce":
            key = (a, bounce(path))
        elif stat == "dinv":
            key = (dinv(path), a)
        else:
            raise ValueError(f"unknown statistic pair {stat!r}")
        terms[key] = terms.get(key, 0) + 1
    return QtLaurent(terms)


def coefficient_grid(n: int, stat: str = "bounce") -> dict[tuple[int, int], int]:
    """Map ``(a, b)`` to the coefficient of ``t^a q^b`` in the q,t-Catalan."""
    return {(et, eq): c for (eq, et), c in qt_catalan(n, stat).items()}


def grid_to_json(grid: dict[tuple[int, int], int]) -> list[dict]:
    return [{"a": a, "b": b, "coef": c} for (a, b), c in sorted(grid.items())]


def catalan_number(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)
