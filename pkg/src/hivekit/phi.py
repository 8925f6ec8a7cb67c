"""
The map from BZ data to hives, its inverse, and the subset min-formula.

Forward map::

    F[i, j, k] = M[{k+1, ..., k+i}] + nu_{k+i+1} + ... + nu_n

Every interval subset is therefore readable from a hive. The inverse seeds
those values on the chamber weights of the reduced word
``1..n-1 1..n-2 ... 1`` (which are exactly the intervals) and then walks the
graph of reduced words of ``w_0``. Each braid move ``a b a -> b a b`` trades
one chamber weight for another, and the tropical Plucker relation at that
position solves for the new value. Every edge of the graph is evaluated, so
two derivations of the same subset are always compared.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from . import weights as W
from .bz import BZDatum, enumerate_mv
from .hive import Hive, boundary, check_hive, enumerate_hives, points


class InvalidDatumError(ValueError):
    """The forward map produced something that is not a hive."""


class PropagationConflict(ValueError):
    """Two braid-move derivations assigned different values to one subset."""


def bz_to_hive(M: BZDatum, nu: Sequence[int]) -> Hive:
    n = M.n
    if len(nu) != n:
        raise ValueError("nu has the wrong length")
    vals = {}
    for (i, j, k) in points(n):
        vals[(i, j, k)] = M[W.interval(k + 1, k + i)] + sum(nu[k + i:])
    F = Hive.from_mapping(n, vals)
    bad = check_hive(F)
    if bad:
        raise InvalidDatumError(f"image violates rhombi {bad[:3]}")
    return F


@dataclass
class PropagationState:
    word: tuple[int, ...]
    known: dict[int, int]
    frontier: list[tuple[int, ...]] = field(default_factory=list)
    seen: set[tuple[int, ...]] = field(default_factory=set)


def _interval_values(F: Hive, nu: Sequence[int]) -> dict[int, int]:
    known: dict[int, int] = {}
    for (i, j, k) in points(F.n):
        m = W.interval(k + 1, k + i)
        v = F[(i, j, k)] - sum(nu[k + i:])
        if known.setdefault(m, v) != v:
            raise PropagationConflict(f"hive gives two values for {W.elements_of(m)}")
    return known


def hive_to_bz(F: Hive, rng: random.Random | None = None) -> BZDatum:
    """The unique BZ datum whose image under :func:`bz_to_hive` is ``F``.

    With ``rng`` the reduced-word graph is explored in random order; the
    result must not depend on it.
    """
    n = F.n
    if check_hive(F):
        raise ValueError("input is not a hive")
    F = F.normalized()
    nu = boundary(F)[2]
    known = _interval_values(F, nu)

    start = W.standard_word(n)
    seeded = W.word_chamber_set(start, n) | {0, W.full_mask(n)}
    intervals = {W.interval(a, b) for a in range(1, n + 1) for b in range(a - 1, n + 1)}
    if seeded != intervals:
        raise AssertionError("chamber weights of the standard word are not the intervals")

    state = PropagationState(start, known, [start], {start})
    while state.frontier:
        word = state.frontier.pop(rng.randrange(len(state.frontier)) if rng else 0)
        state.word = word
        for nb, move in W.braid_neighbors(word):
            if move.kind == 3:
                _apply_braid_move(state, word, move.position, n)
            if nb not in state.seen:
                state.seen.add(nb)
                state.frontier.append(nb)

    missing = [W.elements_of(m) for m in range(1 << n) if m not in state.known]
    if missing:
        raise AssertionError(f"propagation left subsets unassigned: {missing}")
    return BZDatum.from_mapping(n, state.known)


def _apply_braid_move(state: PropagationState, word: tuple[int, ...], position: int, n: int) -> None:
    u = W.word_product(word[:position - 1], n)
    a, b = word[position - 1], word[position]
    ua, ub = W.times_s(u, a), W.times_s(u, b)
    old = W.chamber(ua, a)
    new = W.chamber(ub, b)
    k = state.known
    value = min(k[W.chamber(u, a)] + k[W.chamber(W.times_s(ua, b), b)],
                k[W.chamber(W.times_s(ub, a), a)] + k[W.chamber(u, b)]) - k[old]
    prior = k.setdefault(new, value)
    if prior != value:
        raise PropagationConflict(
            f"tropical Plucker inconsistency at {W.elements_of(new)}: {prior} vs {value}")


def min_formula(M: BZDatum, nu: Sequence[int], ijk: tuple[int, int, int]) -> int:
    """``min M_alpha + <nu, beta>`` over disjoint ``alpha, beta`` with ``|alpha| = i, |beta| = j``."""
    i, j, k = ijk
    n = M.n
    if i + j + k != n or min(ijk) < 0:
        raise ValueError(f"{ijk} is not a point of Delta_{n}")
    best = None
    for alpha in itertools.combinations(range(1, n + 1), i):
        rest = [a for a in range(1, n + 1) if a not in alpha]
        ma = M[W.mask_of(alpha)]
        for beta in itertools.combinations(rest, j):
            v = ma + sum(nu[b - 1] for b in beta)
            if best is None or v < best:
                best = v
    return best


@dataclass
class PhiReport:
    triple: tuple
    mv_count: int
    hive_count: int
    method: str
    injective: bool = True
    onto: bool = True
    min_formula_ok: bool = True
    round_trip_ok: bool = True
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return (self.injective and self.onto and self.min_formula_ok and self.round_trip_ok
                and self.mv_count == self.hive_count)

    def to_json(self) -> dict:
        return {"triple": [list(t) for t in self.triple], "mv_count": self.mv_count,
                "hive_count": self.hive_count, "method": self.method, "injective": self.injective,
                "onto": self.onto, "min_formula_ok": self.min_formula_ok,
                "round_trip_ok": self.round_trip_ok, "ok": self.ok,
                "counterexample": self.counterexample}


def verify_phi_bijection(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
                         method: str | None = None,
                         data: Sequence[BZDatum] | None = None) -> PhiReport:
    """Check that the forward map sends MV data bijectively onto hives.

    For ``n <= 3`` the MV set comes from the brute-force search by default, so
    it does not depend on the inverse map. ``data`` may be passed to reuse
    an enumeration already made with ``method``.
    """
    n = len(lam)
    method = method or ("brute" if n <= 3 else "propagate")
    if data is None:
        data = enumerate_mv(lam, mu, nu, method=method)
    hives = enumerate_hives(lam, mu, nu)
    report = PhiReport((tuple(lam), tuple(mu), tuple(nu)), len(data), len(hives), method)
    images = {}
    for M in data:
        F = bz_to_hive(M, nu)
        if F.values in images:
            report.injective = False
            report.counterexample = report.counterexample or {
                "kind": "collision", "data": [M.to_json(), images[F.values].to_json()]}
        images[F.values] = M
        for p in points(n):
            if min_formula(M, nu, p) != F[p]:
                report.min_formula_ok = False
                report.counterexample = report.counterexample or {
                    "kind": "min_formula", "datum": M.to_json(), "point": list(p)}
                break
        if hive_to_bz(F) != M:
            report.round_trip_ok = False
            report.counterexample = report.counterexample or {
                "kind": "round_trip", "datum": M.to_json()}
    hive_set = {F.values for F in hives}
    if set(images) != hive_set:
        report.onto = False
        report.counterexample = report.counterexample or {
            "kind": "image", "missing": [list(v) for v in sorted(hive_set - set(images))],
            "extra": [list(v) for v in sorted(set(images) - hive_set)]}
    return report
