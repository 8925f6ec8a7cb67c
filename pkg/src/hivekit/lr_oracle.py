"""
Littlewood-Richardson coefficients by the tableau rule, and invariant
dimensions of tensor products of GL_n irreducibles built on top of them.

This module is the ground truth the hive, MV and k-hive counts are checked
against, so it deliberately shares no code with them.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .weights import Coweight, dominant_with_sum, dual, is_dominant

Partition = tuple[int, ...]


def _partition(p: Sequence[int]) -> Partition:
    p = tuple(int(v) for v in p)
    if any(v < 0 for v in p) or not is_dominant(p):
        raise ValueError(f"{p} is not a partition")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of ``s_nu`` in ``s_lam * s_mu``."""
    return _lr(_partition(lam), _partition(mu), _partition(nu))


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(lam) + sum(mu) != sum(nu) or len(lam) > len(nu) or len(mu) > len(nu):
        return 0
    lam = lam + (0,) * (len(nu) - len(lam))
    if any(a > b for a, b in zip(lam, nu)):
        return 0
    if not mu:
        return 1

    # cells of nu/lam in reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    count = [0] * (len(mu) + 1)
    total = 0

    def rec(pos: int) -> None:
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        r, c = cells[pos]
        hi = min(len(mu), r + 1)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((r - 1, c))
        lo = 1 if above is None else above + 1
        for v in range(lo, hi + 1):
            if count[v] >= mu[v - 1]:
                continue
            if v > 1 and count[v] + 1 > count[v - 1]:
                continue
            count[v] += 1
            filling[(r, c)] = v
            rec(pos + 1)
            del filling[(r, c)]
            count[v] -= 1

    rec(0)
    return total


def tensor_decomposition(lam: Sequence[int], mu: Sequence[int]) -> dict[Coweight, int]:
    """``V_lam (x) V_mu = sum_gamma c^gamma V_gamma`` for GL_n, as ``{gamma: c}``."""
    n = len(lam)
    if len(mu) != n:
        raise ValueError("dimension mismatch")
    a, b = lam[-1], mu[-1]
    lp = tuple(v - a for v in lam)
    mp = tuple(v - b for v in mu)
    out = {}
    for g in dominant_with_sum(n, sum(lp) + sum(mp), lp[0] + mp[0], 0):
        c = lr_coefficient(lp, mp, g)
        if c:
            out[tuple(v + a + b for v in g)] = c
    return out


def triple_invariant_dim(lam: Sequence[int], mu: Sequence[int], chi: Sequence[int]) -> int:
    """``c_{lam mu chi} = dim (V_lam (x) V_mu (x) V_chi)^G``."""
    n = len(lam)
    if len(mu) != n or len(chi) != n:
        raise ValueError("dimension mismatch")
    for name, w in (("lam", lam), ("mu", mu), ("chi", chi)):
        if not is_dominant(w):
            raise ValueError(f"{name}={tuple(w)} is not dominant")
    if sum(lam) + sum(mu) + sum(chi) != 0:
        return 0
    nu = dual(chi)
    a, b = lam[-1], mu[-1]
    target = tuple(v - a - b for v in nu)
    if target[-1] < 0:
        return 0
    return lr_coefficient(tuple(v - a for v in lam), tuple(v - b for v in mu), target)


def multi_invariant_dim(*weights: Sequence[int]) -> int:
    """``dim (V_{lam^1} (x) ... (x) V_{lam^k})^G`` for k >= 2."""
    if len(weights) < 2:
        raise ValueError("need at least two coweights")
    n = len(weights[0])
    if any(len(w) != n for w in weights):
        raise ValueError("dimension mismatch")
    for w in weights:
        if not is_dominant(w):
            raise ValueError(f"{tuple(w)} is not dominant")
    return _multi(tuple(tuple(int(v) for v in w) for w in weights))


@lru_cache(maxsize=None)
def _multi(weights: tuple[Coweight, ...]) -> int:
    if sum(map(sum, weights)) != 0:
        return 0
    if len(weights) == 2:
        return int(weights[1] == dual(weights[0]))
    first, second, rest = weights[0], weights[1], weights[2:]
    return sum(c * _multi((gamma,) + rest)
               for gamma, c in tensor_decomposition(first, second).items())
