"""
The triangular grid Delta_n, the rhombus (hive) condition and enumeration of
hives with prescribed boundary.

A labelling is stored as a tuple of integers in the canonical point order of
:func:`points`, i.e. lexicographic on ``(i, j, k)``. Boundaries follow the
asymmetric convention ``HIVE_{lam mu}^nu``::

    lam_k = F[n-k+1, 0, k-1] - F[n-k, 0, k]
    mu_i  = F[i-1, n-i+1, 0] - F[i, n-i, 0]
    nu_k  = F[0, n-k+1, k-1] - F[0, n-k, k]

Orientation: each unit rhombus satisfies
``sum over the short diagonal <= sum over the long diagonal``. Passing
``orientation=-1`` flips every inequality (used only as a negative control).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .weights import Coweight, dual, require_dominant

Point = tuple[int, int, int]


@lru_cache(maxsize=None)
def points(n: int) -> tuple[Point, ...]:
    """Delta_n in canonical order; ``(n+1)(n+2)/2`` points."""
    return tuple((i, j, n - i - j) for i in range(n + 1) for j in range(n + 1 - i))


@lru_cache(maxsize=None)
def point_index(n: int) -> dict[Point, int]:
    return {p: idx for idx, p in enumerate(points(n))}


@dataclass(frozen=True)
class Rhombus:
    """A unit rhombus: ``short[0] + short[1] <= long[0] + long[1]``."""
    kind: str              # "i", "ii" or "iii"
    at: Point              # the (i, j, k) of the defining formula
    short: tuple[Point, Point]
    long: tuple[Point, Point]


@lru_cache(maxsize=None)
def rhombi(n: int) -> tuple[Rhombus, ...]:
    out = []
    for (i, j, k) in points(n):
        if i >= 1 and k >= 1:
            out.append(Rhombus("i", (i, j, k), ((i, j, k), (i, j + 1, k - 1)),
                               ((i + 1, j, k - 1), (i - 1, j + 1, k))))
        if j >= 1 and k >= 1:
            out.append(Rhombus("ii", (i, j, k), ((i, j, k), (i + 1, j - 1, k)),
                               ((i + 1, j, k - 1), (i, j - 1, k + 1))))
        if j >= 1 and k >= 1:
            out.append(Rhombus("iii", (i, j, k), ((i, j, k), (i + 1, j, k - 1)),
                               ((i, j + 1, k - 1), (i + 1, j - 1, k))))
    return tuple(out)


@dataclass(frozen=True)
class Hive:
    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(points(self.n)):
            raise ValueError(f"a labelling of Delta_{self.n} needs {len(points(self.n))} values")

    def __getitem__(self, p: Point) -> int:
        return self.values[point_index(self.n)[p]]

    def items(self) -> Iterator[tuple[Point, int]]:
        return zip(points(self.n), self.values)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[Point, int]) -> "Hive":
        missing = [p for p in points(n) if p not in mapping]
        if missing:
            raise ValueError(f"labelling is missing points {missing}")
        return cls(n, tuple(int(mapping[p]) for p in points(n)))

    @classmethod
    def constant(cls, n: int, c: int = 0) -> "Hive":
        return cls(n, (c,) * len(points(n)))

    def normalized(self) -> "Hive":
        base = self[(0, 0, self.n)]
        return Hive(self.n, tuple(v - base for v in self.values))

    def negated(self) -> "Hive":
        return Hive(self.n, tuple(-v for v in self.values))

    def to_json(self) -> dict:
        return {"n": self.n,
                "values": [{"i": i, "j": j, "k": k, "v": v} for (i, j, k), v in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Hive":
        n = int(data["n"])
        mapping = {(int(e["i"]), int(e["j"]), int(e["k"])): int(e["v"]) for e in data["values"]}
        if any(sum(p) != n or min(p) < 0 for p in mapping):
            raise ValueError("hive JSON contains points outside Delta_n")
        return cls.from_mapping(n, mapping)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _as_lookup(F: Hive | Mapping[Point, int], n: int | None = None) -> tuple[int, Mapping]:
    if isinstance(F, Hive):
        return F.n, F
    if n is None:
        n = max(sum(p) for p in F)
    missing = [p for p in points(n) if p not in F]
    if missing:
        raise ValueError(f"labelling is missing points {missing}")
    return n, F


def check_hive(F: Hive | Mapping[Point, int], n: int | None = None,
               orientation: int = 1) -> list[tuple[str, Point]]:
    """Violated rhombi as ``(kind, at)`` pairs; empty for a hive."""
    n, G = _as_lookup(F, n)
    bad = []
    for r in rhombi(n):
        gap = G[r.short[0]] + G[r.short[1]] - G[r.long[0]] - G[r.long[1]]
        if orientation * gap > 0:
            bad.append((r.kind, r.at))
    return bad


def is_hive(F: Hive, orientation: int = 1) -> bool:
    return not check_hive(F, orientation=orientation)


def boundary(F: Hive) -> tuple[Coweight, Coweight, Coweight]:
    """``(lam, mu, nu)`` read off the three edges."""
    n = F.n
    lam = tuple(F[(n - k + 1, 0, k - 1)] - F[(n - k, 0, k)] for k in range(1, n + 1))
    mu = tuple(F[(i - 1, n - i + 1, 0)] - F[(i, n - i, 0)] for i in range(1, n + 1))
    nu = tuple(F[(0, n - k + 1, k - 1)] - F[(0, n - k, k)] for k in range(1, n + 1))
    return lam, mu, nu


def to_symmetric_boundary(nu: Sequence[int]) -> Coweight:
    """The third edge in the symmetric convention: ``chi = nu^vee``."""
    return dual(nu)


def boundary_values(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> dict[Point, int] | None:
    """Edge values of the normalized hive with this boundary, or None if sums disagree."""
    n = len(lam)
    if sum(lam) + sum(mu) != sum(nu):
        return None
    vals: dict[Point, int] = {}
    for k in range(n + 1):
        vals[(n - k, 0, k)] = sum(lam[k:])
        vals[(0, n - k, k)] = sum(nu[k:])
    for i in range(n + 1):
        vals[(i, n - i, 0)] = sum(nu) - sum(mu[:i])
    return vals


def _search_plan(n: int, orientation: int):
    """For each interior point (in fill order), the rhombi that become complete when it is placed."""
    order = [(i, j, n - i - j) for i in range(n - 2, 0, -1) for j in range(n - i - 1, 0, -1)]
    rank = {p: r for r, p in enumerate(order)}
    steps: list[list[tuple[bool, tuple[Point, Point], Point]]] = [[] for _ in order]
    initial = []
    for rh in rhombi(n):
        pts = rh.short + rh.long
        last = max((rank.get(p, -1) for p in pts))
        if last < 0:
            initial.append(rh)
            continue
        p = order[last]
        # bound on p is  sum(plus) - minus ; an upper bound when p sits on the short diagonal
        if p in rh.short:
            other = rh.short[1] if rh.short[0] == p else rh.short[0]
            plus, upper = rh.long, True
        else:
            other = rh.long[1] if rh.long[0] == p else rh.long[0]
            plus, upper = rh.short, False
        if orientation < 0:
            upper = not upper
        steps[last].append((upper, plus, other))
    for r, s in enumerate(steps):
        if {c[0] for c in s} != {True, False}:
            raise AssertionError(f"point {order[r]} is not bounded on both sides")
    return order, steps, initial


def enumerate_hives(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
                    orientation: int = 1) -> list[Hive]:
    """All normalized hives with boundary ``(lam, mu, nu)``, sorted by value vector."""
    lam = require_dominant(lam, "lam")
    mu = require_dominant(mu, "mu")
    nu = require_dominant(nu, "nu")
    n = len(lam)
    if len(mu) != n or len(nu) != n:
        raise ValueError("lam, mu, nu must have the same length")
    vals = boundary_values(lam, mu, nu)
    if vals is None:
        return []
    order, steps, initial = _search_plan(n, orientation)
    for rh in initial:
        gap = vals[rh.short[0]] + vals[rh.short[1]] - vals[rh.long[0]] - vals[rh.long[1]]
        if orientation * gap > 0:
            return []

    found: list[Hive] = []

    def rec(r: int) -> None:
        if r == len(order):
            found.append(Hive.from_mapping(n, vals))
            return
        lo, hi = None, None
        for upper, plus, other in steps[r]:
            bound = vals[plus[0]] + vals[plus[1]] - vals[other]
            if upper:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        p = order[r]
        for v in range(lo, hi + 1):
            vals[p] = v
            rec(r + 1)
        vals.pop(p, None)

    rec(0)
    found.sort(key=lambda h: h.values)
    return found
