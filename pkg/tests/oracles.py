"""
Independent reference computations used only by the tests.

None of these share code with the package beyond trivial tuple helpers.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache

import numpy as np
from scipy.optimize import linprog


# ---------------------------------------------------------------------------
# characters of GL_n irreducibles


@lru_cache(maxsize=None)
def character(shape: tuple[int, ...], n: int) -> Counter:
    """Weight multiset of V_shape for GL_n via semistandard tableaux (entries 1..n)."""
    shape = tuple(v for v in shape if v > 0)
    if len(shape) > n:
        return Counter()
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    out: Counter = Counter()
    fill: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> None:
        if idx == len(cells):
            wt = [0] * n
            for v in fill.values():
                wt[v - 1] += 1
            out[tuple(wt)] += 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, fill[(r, c - 1)])
        if r > 0:
            lo = max(lo, fill[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            fill[(r, c)] = v
            rec(idx + 1)
        fill.pop((r, c), None)

    rec(0)
    return out


def shifted_character(w: tuple[int, ...]) -> Counter:
    """Character of V_w for any dominant coweight (negative entries allowed)."""
    n = len(w)
    s = min(w)
    base = character(tuple(v - s for v in w), n)
    return Counter({tuple(a + s for a in k): m for k, m in base.items()})


def char_product(a: Counter, b: Counter) -> Counter:
    out: Counter = Counter()
    for wa, ma in a.items():
        for wb, mb in b.items():
            out[tuple(x + y for x, y in zip(wa, wb))] += ma * mb
    return out


def decompose(ch: Counter) -> Counter:
    """Irreducible multiplicities of a character by peeling off highest weights."""
    ch = Counter({k: v for k, v in ch.items() if v})
    out: Counter = Counter()
    while ch:
        top = max(ch)  # lexicographically largest weight is dominant and highest
        m = ch[top]
        out[top] += m
        for k, v in shifted_character(top).items():
            ch[k] -= m * v
            if ch[k] == 0:
                del ch[k]
        if any(v < 0 for v in ch.values()):
            raise AssertionError("character decomposition went negative")
    return out


def lr_by_characters(lam, mu, nu) -> int:
    return decompose(char_product(shifted_character(tuple(lam)), shifted_character(tuple(mu))))[tuple(nu)]


def invariants_by_characters(*ws) -> int:
    ch = shifted_character(tuple(ws[0]))
    for w in ws[1:]:
        ch = char_product(ch, shifted_character(tuple(w)))
    return decompose(ch)[tuple([0] * len(ws[0]))]


# ---------------------------------------------------------------------------
# convex hull membership


def in_hull_lp(x, lam) -> bool:
    """Is x a convex combination of the permutations of lam?"""
    perms = sorted(set(itertools.permutations(lam)))
    A = np.array(perms, dtype=float).T
    A_eq = np.vstack([A, np.ones(len(perms))])
    b_eq = np.concatenate([np.array(x, dtype=float), [1.0]])
    res = linprog(np.zeros(len(perms)), A_eq=A_eq, b_eq=b_eq, bounds=[(0, None)] * len(perms),
                  method="highs")
    return res.status == 0


# ---------------------------------------------------------------------------
# hives by exhaustive search over a box


def brute_hives(lam, mu, nu) -> list[tuple[int, ...]]:
    """Every labelling satisfying all rhombus inequalities, listed in (i, j, k) order.

    Interior values range over [min boundary - B - 1, max boundary]; hitting
    the lower end raises, so the box is certified rather than assumed.
    """
    n = len(lam)
    if sum(lam) + sum(mu) != sum(nu):
        return []
    pts = [(i, j, n - i - j) for i in range(n + 1) for j in range(n + 1 - i)]
    fixed = {}
    for k in range(n + 1):
        fixed[(n - k, 0, k)] = sum(lam[k:])
        fixed[(0, n - k, k)] = sum(nu[k:])
    for i in range(n + 1):
        fixed[(i, n - i, 0)] = sum(nu) - sum(mu[:i])
    inner = [p for p in pts if p not in fixed]
    B = sum(map(abs, lam)) + sum(map(abs, mu)) + sum(map(abs, nu))
    lo, hi = min(fixed.values()) - B - 1, max(fixed.values())

    def ok(F) -> bool:
        for (i, j, k) in pts:
            if i >= 1 and k >= 1 and F[(i, j, k)] + F[(i, j + 1, k - 1)] > F[(i + 1, j, k - 1)] + F[(i - 1, j + 1, k)]:
                return False
            if j >= 1 and k >= 1:
                if F[(i, j, k)] + F[(i + 1, j - 1, k)] > F[(i + 1, j, k - 1)] + F[(i, j - 1, k + 1)]:
                    return False
                if F[(i, j, k)] + F[(i + 1, j, k - 1)] > F[(i, j + 1, k - 1)] + F[(i + 1, j - 1, k)]:
                    return False
        return True

    out = []
    for combo in itertools.product(range(lo, hi + 1), repeat=len(inner)):
        F = dict(fixed)
        F.update(zip(inner, combo))
        if ok(F):
            if lo in combo:
                raise AssertionError("brute-force hive box is too small")
            out.append(tuple(F[p] for p in pts))
    return sorted(out)


# ---------------------------------------------------------------------------
# determinant expansions


def mixed_coefficient(g1, g2, g3, ijk, det, zero, one):
    """Coefficient of x^i y^j z^k in det(x g1 + y g2 + z g3) by multilinearity in rows."""
    n = len(g1)
    mats = (g1, g2, g3)
    total = zero
    for choice in itertools.product(range(3), repeat=n):
        if tuple(choice.count(m) for m in range(3)) != tuple(ijk):
            continue
        rows = [mats[choice[r]][r] for r in range(n)]
        total = total + det(rows, zero, one)
    return total
