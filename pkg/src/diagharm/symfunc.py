"""Symmetric group characters and the Schur to power-sum expansion.

Characters come from the Murnaghan-Nakayama rule, run on beta-sets: removing
a border strip of length ``r`` from ``lambda`` is moving one bead of the
beta-set ``{lambda_i + (l - i)}`` down by ``r`` onto an empty position, with
sign ``(-1)^(beads jumped over)``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .partitions import Partition, partitions_of, z_mu


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta:
            continue
        jumped = sum(1 for c in beta if nb < c < b)
        total += (-1) ** jumped * _mn((beta - {b}) | {nb}, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``chi^lambda`` evaluated on the class of cycle type ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{list(lam)}| != |{list(mu)}|")
    l = len(lam)
    beta = frozenset(p + l - 1 - i for i, p in enumerate(lam))
    return _mn(beta, tuple(mu))


def schur_to_power(lam: Sequence[int]) -> dict[Partition, Fraction]:
    """``s_lambda = sum_mu chi^lambda_mu / z_mu * p_mu`` over all ``mu`` of the same size.

    Zero coefficients are kept so the support is the full set of partitions.
    """
    lam = Partition(lam)
    return {
        mu: Fraction(mn_character(lam, mu), z_mu(mu))
        for mu in partitions_of(lam.size)
    }


def expansion_to_json(expansion: dict[Partition, Fraction]) -> list[dict]:
    return [
        {"mu": list(mu), "coef": f"{c.numerator}/{c.denominator}"}
        for mu, c in expansion.items()
    ]


def hook_length_count(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lambda``."""
    from .partitions import cell_stats

    lam = Partition(lam)
    prod = 1
    for s in cell_stats(lam):
        prod *= s.arm + s.leg + 1
    return math.factorial(lam.size) // prod
