"""Polarized differential operators acting on diagonal polynomials.

``E(r,s) = sum_i y_i d^r/dx_i^r d^s/dy_i^s``,
``F(r,s) = sum_i x_i d^r/dx_i^r d^s/dy_i^s``,
``Pi(p,q) = sum_i d^p/dx_i^p d^q/dy_i^q``.

The sl(2) triple is ``E = E(1,0)``, ``F = F(0,1)`` and ``H = [E, F]``, which
acts on a bi-homogeneous polynomial of bi-degree ``(a, b)`` as ``b - a``.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .mvpoly import MultiPoly, _norm, falling, is_diagonal_harmonic, permutation_sign
from .partitions import Partition

KINDS = ("E", "F", "Pi")


@dataclass(frozen=True)
class OpGen:
    kind: str
    r: int
    s: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.r < 0 or self.s < 0:
            raise ValueError("operator indices must be nonnegative")
        if self.r + self.s < 1:
            raise ValueError(f"{self.kind}(0,0) is not an admissible generator")

    def __call__(self, P: MultiPoly) -> MultiPoly:
        return apply_gen(self, P)

    def __str__(self) -> str:
        if self.kind == "E" and self.s == 0:
            return f"E{self.r}"
        return f"{self.kind}{self.r},{self.s}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "r": self.r, "s": self.s}


def E(r: int, s: int = 0) -> OpGen:
    return OpGen("E", r, s)


def F(r: int, s: int = 0) -> OpGen:
    return OpGen("F", r, s)


def Pi(p: int, q: int) -> OpGen:
    return OpGen("Pi", p, q)


def _apply(kind: str, r: int, s: int, P: MultiPoly) -> MultiPoly:
    n = P.n
    if kind == "Pi":
        return P.power_sum_derivative(r, s)
    # the multiplier variable sits at offset n for y_i, 0 for x_i
    mult = n if kind == "E" else 0
    out: dict = {}
    for m, c in P.items():
        for i in range(n):
            a = m[i]
            b = m[n + i]
            if a < r or b < s:
                continue
            nm = list(m)
            nm[i] = a - r
            nm[n + i] = b - s
            nm[mult + i] += 1
            nm = tuple(nm)
            k = c * falling(a, r) * falling(b, s)
            out[nm] = out.get(nm, 0) + k
    return MultiPoly._raw(n, {m: _norm(c) for m, c in out.items() if c})


def apply_gen(g: OpGen, P: MultiPoly) -> MultiPoly:
    return _apply(g.kind, g.r, g.s, P)


def sl2_E(P: MultiPoly) -> MultiPoly:
    return _apply("E", 1, 0, P)


def sl2_F(P: MultiPoly) -> MultiPoly:
    return _apply("F", 0, 1, P)


def sl2_H(P: MultiPoly) -> MultiPoly:
    """The y-Euler operator minus the x-Euler operator."""
    n = P.n
    out = {}
    for m, c in P.items():
        w = sum(m[n:]) - sum(m[:n])
        if w:
            out[m] = c * w
    return MultiPoly._raw(n, out)


class OperatorWord(tuple):
    """An ordered product of generators; the rightmost acts first."""

    def __new__(cls, gens: Iterable[OpGen] = ()):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, OpGen):
                raise TypeError(f"{g!r} is not an OpGen")
        return super().__new__(cls, gens)

    @classmethod
    def e_word(cls, mu: Sequence[int]) -> OperatorWord:
        """``E_{mu_1,0} E_{mu_2,0} ... `` for a partition (or any sequence of parts)."""
        return cls(E(r, 0) for r in mu)

    @classmethod
    def parse(cls, text: str) -> OperatorWord:
        """Parse ``"E3 E2"``, ``"E2,1 F0,1 Pi1,1"`` or a JSON list of generators."""
        text = text.strip()
        if text.startswith("["):
            return cls(OpGen(d["kind"], int(d["r"]), int(d.get("s", 0))) for d in json.loads(text))
        gens = []
        for tok in text.split():
            m = re.fullmatch(r"(E|F|Pi)(\d+)(?:,(\d+))?", tok)
            if not m:
                raise ValueError(f"cannot parse operator {tok!r}")
            kind, r, s = m.group(1), int(m.group(2)), int(m.group(3) or 0)
            if kind == "Pi" and m.group(3) is None:
                raise ValueError(f"Pi needs two indices: {tok!r}")
            gens.append(OpGen(kind, r, s))
        return cls(gens)

    def __str__(self) -> str:
        return " ".join(str(g) for g in self)

    def to_json(self) -> list[dict]:
        return [g.to_json() for g in self]

    def __call__(self, P: MultiPoly) -> MultiPoly:
        return apply_word(self, P)


def apply_word(w: Sequence[OpGen], P: MultiPoly) -> MultiPoly:
    for g in reversed(tuple(w)):
        if not P:
            break
        P = apply_gen(g, P)
    return P


def vandermonde(n: int) -> MultiPoly:
    """``prod_{i<j} (x_i - x_j)`` expanded."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return partition_alternant(Partition([1] * n))


def alternant_cells(mu: Sequence[int]) -> list[tuple[int, int]]:
    """Column order for the determinant of ``mu``.

    Row-major cells from ``(0, 0)``, reversed, so that the identity term is
    ``prod x_i^(n-i)`` for the one-column shape.
    """
    return list(reversed(Partition(mu).cells()))


def partition_alternant(mu: Sequence[int], n: int | None = None) -> MultiPoly:
    """``det || x_i^coleg(c_j) y_i^coarm(c_j) ||`` over the cells ``c_j`` of ``mu``."""
    mu = Partition(mu)
    if n is None:
        n = mu.size
    if mu.size != n:
        raise ValueError(f"partition {list(mu)} has size {mu.size}, expected {n}")
    cells = alternant_cells(mu)
    terms = {}
    for sigma in itertools.permutations(range(n)):
        m = [0] * (2 * n)
        for j, (col, row) in enumerate(cells):
            v = sigma[j]
            m[v] = row
            m[n + v] = col
        terms[tuple(m)] = permutation_sign([v + 1 for v in sigma])
    return MultiPoly(n, terms)


class EWordCache:
    """Memoized ``E_{mu_1,0} ... E_{mu_l,0} base`` keyed by the sorted word.

    The operators ``E_{r,0}`` commute, so a word is identified with the
    partition of its indices; the longest prefix is built from a cached suffix.
    """

    def __init__(self, base: MultiPoly, maxsize: int | None = None):
        self.base = base
        self.n = base.n
        self._cache: dict[tuple[int, ...], MultiPoly] = {(): base}
        self.maxsize = maxsize

    def __call__(self, mu: Sequence[int]) -> MultiPoly:
        key = tuple(sorted(mu, reverse=True))
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        # apply the smallest part last so suffixes are shared
        inner = self(key[:-1])
        out = _apply("E", key[-1], 0, inner) if inner else inner
        if self.maxsize is None or len(self._cache) < self.maxsize:
            self._cache[key] = out
        return out

    def clear(self):
        self._cache = {(): self.base}


def commutator(g1: OpGen, g2: OpGen, P: MultiPoly) -> MultiPoly:
    return apply_gen(g1, apply_gen(g2, P)) - apply_gen(g2, apply_gen(g1, P))


def commutator_rhs(g1: OpGen, g2: OpGen) -> list[tuple[int, str, int, int]]:
    """Right-hand side of the bracket as ``[(multiplier, kind, r, s), ...]``."""
    p, q, r, s = g1.r, g1.s, g2.r, g2.s
    k1, k2 = g1.kind, g2.kind
    if k1 == "F" and k2 == "F":
        terms = [(p - r, "F", p + r - 1, q + s)]
    elif k1 == "E" and k2 == "E":
        terms = [(q - s, "E", p + r, q + s - 1)]
    elif k1 == "F" and k2 == "E":
        terms = [(q, "F", p + r, q + s - 1), (-r, "E", p + r - 1, q + s)]
    elif k1 == "E" and k2 == "F":
        # [E_pq, F_rs] = -[F_rs, E_pq]
        terms = [(-s, "F", r + p, s + q - 1), (p, "E", r + p - 1, s + q)]
    else:
        raise ValueError("commutator identities cover E and F generators only")
    out = []
    for c, kind, a, b in terms:
        if c == 0:
            continue
        if a < 0 or b < 0:
            raise ValueError(f"identity used outside its range: {kind}({a},{b}) with multiplier {c}")
        out.append((c, kind, a, b))
    return out


def commutator_check(g1: OpGen, g2: OpGen, P: MultiPoly) -> bool:
    rhs = MultiPoly.zero(P.n)
    for c, kind, a, b in commutator_rhs(g1, g2):
        rhs = rhs + _apply(kind, a, b, P).scale(c)
    return commutator(g1, g2, P) == rhs


def exchange_identity_holds(g: OpGen, p: int, q: int, P: MultiPoly) -> bool:
    """Check ``Pi_pq g = g Pi_pq + (correction)`` on ``P``.

    For ``F(r,s)`` the correction is ``p Pi(p+r-1, q+s)``; for ``E(r,s)`` it is
    ``q Pi(p+r, q+s-1)``.
    """
    lhs = _apply("Pi", p, q, apply_gen(g, P))
    rhs = apply_gen(g, _apply("Pi", p, q, P))
    if g.kind == "F" and p:
        rhs = rhs + _apply("Pi", p + g.r - 1, q + g.s, P).scale(p)
    elif g.kind == "E" and q:
        rhs = rhs + _apply("Pi", p + g.r, q + g.s - 1, P).scale(q)
    elif g.kind == "Pi":
        raise ValueError("exchange identities are stated for E and F")
    return lhs == rhs


def harmonic_preservation_check(g: OpGen, P: MultiPoly) -> bool:
    """``g P`` is diagonal harmonic and the exchange identities hold on ``P``."""
    if g.kind not in ("E", "F"):
        raise ValueError("only E and F generators are checked")
    if not is_diagonal_harmonic(P):
        raise ValueError("input polynomial is not diagonal harmonic")
    deg = P.total_degree() + 1
    for total in range(1, deg + 1):
        for p in range(total + 1):
            if not exchange_identity_holds(g, p, total - p, P):
                return False
    return is_diagonal_harmonic(apply_gen(g, P))
