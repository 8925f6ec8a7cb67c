"""
Bounds propagation and branching over integer variables.

Two constraint shapes are supported, which is all the k-hive search needs:

* ``sum(pos) - sum(neg) <= 0`` (rhombus inequalities, and the two easy
  halves of an octahedron relation);
* ``min(a0 + a1, b0 + b1) == c0 + c1`` (the octahedron relation itself).

Bounds may start infinite; the search refuses to branch on a variable whose
domain is still unbounded after propagation, so an incomplete box is
reported instead of silently truncating the solution set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

INF = math.inf


class UnboundedSearch(RuntimeError):
    pass


@dataclass
class Problem:
    nvars: int
    lo: list[float]
    hi: list[float]
    ineqs: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    mins: list[tuple[tuple[int, int], tuple[int, int], tuple[int, int]]] = field(default_factory=list)

    def add_le(self, pos: Sequence[int], neg: Sequence[int]) -> None:
        self.ineqs.append((tuple(pos), tuple(neg)))

    def add_min_eq(self, a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> None:
        self.mins.append((a, b, c))
        self.add_le(c, a)
        self.add_le(c, b)


def _watchers(p: Problem) -> list[list[tuple[int, int]]]:
    w: list[list[tuple[int, int]]] = [[] for _ in range(p.nvars)]
    for idx, (pos, neg) in enumerate(p.ineqs):
        for x in pos + neg:
            w[x].append((0, idx))
    for idx, (a, b, c) in enumerate(p.mins):
        for x in a + b + c:
            w[x].append((1, idx))
    return w


def propagate(p: Problem, lo: list[float], hi: list[float],
              watchers: list[list[tuple[int, int]]], dirty: Sequence[int] | None = None) -> bool:
    """Tighten ``lo``/``hi`` in place to a fixpoint; False when a domain empties."""
    queue = {(0, i) for i in range(len(p.ineqs))} | {(1, i) for i in range(len(p.mins))} \
        if dirty is None else {c for x in dirty for c in watchers[x]}
    changed: list[int] = []

    def tighten_hi(x: int, v: float) -> bool:
        if v < hi[x]:
            hi[x] = math.floor(v) if v != -INF else v
            changed.append(x)
        return lo[x] <= hi[x]

    def tighten_lo(x: int, v: float) -> bool:
        if v > lo[x]:
            lo[x] = math.ceil(v) if v != INF else v
            changed.append(x)
        return lo[x] <= hi[x]

    while queue:
        kind, idx = queue.pop()
        if kind == 0:
            pos, neg = p.ineqs[idx]
            shi = sum(hi[x] for x in neg)
            if shi != INF:
                for t, x in enumerate(pos):
                    rest = sum(lo[y] for s, y in enumerate(pos) if s != t)
                    if rest != -INF and not tighten_hi(x, shi - rest):
                        return False
            slo = sum(lo[x] for x in pos)
            if slo != -INF:
                for t, x in enumerate(neg):
                    rest = sum(hi[y] for s, y in enumerate(neg) if s != t)
                    if rest != INF and not tighten_lo(x, slo - rest):
                        return False
        else:
            (a0, a1), (b0, b1), (c0, c1) = p.mins[idx]
            lo_a, lo_b = lo[a0] + lo[a1], lo[b0] + lo[b1]
            need = min(lo_a, lo_b)
            if need != -INF:
                if hi[c1] != INF and not tighten_lo(c0, need - hi[c1]):
                    return False
                if hi[c0] != INF and not tighten_lo(c1, need - hi[c0]):
                    return False
            hi_c = hi[c0] + hi[c1]
            for (x0, x1), lo_other in (((a0, a1), lo_b), ((b0, b1), lo_a)):
                if hi_c != INF and lo_other > hi_c:
                    # the other branch cannot attain the minimum, so this one equals c
                    if lo[x1] != -INF and not tighten_hi(x0, hi_c - lo[x1]):
                        return False
                    if lo[x0] != -INF and not tighten_hi(x1, hi_c - lo[x0]):
                        return False
        while changed:
            queue.update(watchers[changed.pop()])
    return True


def satisfied(p: Problem, values: Sequence[int]) -> bool:
    for pos, neg in p.ineqs:
        if sum(values[x] for x in pos) > sum(values[x] for x in neg):
            return False
    for (a0, a1), (b0, b1), (c0, c1) in p.mins:
        if min(values[a0] + values[a1], values[b0] + values[b1]) != values[c0] + values[c1]:
            return False
    return True


def solutions(p: Problem) -> Iterator[tuple[int, ...]]:
    """All integer points satisfying every constraint."""
    watchers = _watchers(p)
    lo, hi = list(p.lo), list(p.hi)
    if not propagate(p, lo, hi, watchers):
        return
    yield from _branch(p, lo, hi, watchers)


def _branch(p: Problem, lo: list[float], hi: list[float], watchers) -> Iterator[tuple[int, ...]]:
    free = [x for x in range(p.nvars) if lo[x] != hi[x]]
    if not free:
        values = tuple(int(v) for v in lo)
        if satisfied(p, values):
            yield values
        return
    x = min(free, key=lambda y: hi[y] - lo[y])
    if hi[x] - lo[x] == INF:
        raise UnboundedSearch(f"variable {x} has domain [{lo[x]}, {hi[x]}] after propagation")
    for v in range(int(lo[x]), int(hi[x]) + 1):
        lo2, hi2 = list(lo), list(hi)
        lo2[x] = hi2[x] = v
        if propagate(p, lo2, hi2, watchers, dirty=(x,)):
            yield from _branch(p, lo2, hi2, watchers)
