"""
BZ data for GL_n: tropical Plucker relations, edge inequalities, GGMS
vertices, polytope containment, monotonicity, and the sets MV_{lam mu}^nu.

A :class:`BZDatum` stores one integer per subset of ``{1..n}`` (indexed by
bitmask), including ``M[empty] = 0`` and ``M[{1..n}]``, the common coordinate
sum of all vertices.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from . import weights as W
from .weights import Coweight, Perm


@dataclass(frozen=True)
class BZDatum:
    n: int
    values: tuple[int, ...]  # indexed by bitmask

    def __post_init__(self) -> None:
        if len(self.values) != 1 << self.n:
            raise ValueError(f"a BZ datum for GL_{self.n} needs {1 << self.n} values")
        if self.values[0] != 0:
            raise ValueError("M[empty] must be 0")

    def __getitem__(self, subset: int | Sequence[int]) -> int:
        if not isinstance(subset, int):
            subset = W.mask_of(subset)
        return self.values[subset]

    @property
    def total(self) -> int:
        return self.values[-1]

    def sort_key(self) -> tuple[int, ...]:
        return tuple(self.values[m] for m in W.canonical_subsets(self.n))

    def items(self) -> Iterator[tuple[int, int]]:
        for m in W.canonical_subsets(self.n):
            yield m, self.values[m]

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "BZDatum":
        """Build from ``{bitmask: value}``; the empty set defaults to 0."""
        vals = [0] * (1 << n)
        missing = []
        for m in range(1, 1 << n):
            if m not in mapping:
                missing.append(W.elements_of(m))
            else:
                vals[m] = int(mapping[m])
        if missing:
            raise ValueError(f"BZ table is missing subsets {missing}")
        if mapping.get(0, 0) != 0:
            raise ValueError("M[empty] must be 0")
        return cls(n, tuple(vals))

    @classmethod
    def linear(cls, mu: Sequence[int]) -> "BZDatum":
        """``M_gamma = <mu, gamma>``: the datum of a single point ``t^mu``."""
        n = len(mu)
        return cls(n, tuple(W.coordinate_sum(mu, m) for m in range(1 << n)))

    def to_json(self) -> dict:
        return {"n": self.n,
                "M": [{"subset": list(W.elements_of(m)), "v": v} for m, v in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "BZDatum":
        n = int(data["n"])
        return cls.from_mapping(n, {W.mask_of(e["subset"]): int(e["v"]) for e in data["M"]})

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# ---------------------------------------------------------------------------
# relations


@dataclass(frozen=True)
class PluckerViolation:
    w: Perm
    i: int
    j: int
    lhs: int
    rhs: int


def plucker_instances(n: int) -> Iterator[tuple[Perm, int, int, tuple[int, int, int, int, int, int]]]:
    """Every ``(w, i, i+1)`` with both ascents, with the six subsets of the relation.

    The subsets are ordered ``(w s_i Li, w s_j Lj, w Li, w s_i s_j Lj, w s_j s_i Li, w Lj)``
    so the relation reads ``M0 + M1 = min(M2 + M3, M4 + M5)``.
    """
    for w in W.permutations(n):
        for i in range(1, n - 1):
            j = i + 1
            if not (W.ascends(w, i) and W.ascends(w, j)):
                continue
            wi, wj = W.times_s(w, i), W.times_s(w, j)
            yield w, i, j, (W.chamber(wi, i), W.chamber(wj, j),
                            W.chamber(w, i), W.chamber(W.times_s(wi, j), j),
                            W.chamber(W.times_s(wj, i), i), W.chamber(w, j))


def check_tropical_plucker(M: BZDatum) -> list[PluckerViolation]:
    bad = []
    for w, i, j, (a, b, c, d, e, f) in plucker_instances(M.n):
        lhs = M[a] + M[b]
        rhs = min(M[c] + M[d], M[e] + M[f])
        if lhs != rhs:
            bad.append(PluckerViolation(w, i, j, lhs, rhs))
    return bad


def check_edge_inequalities(M: BZDatum) -> list[tuple[Perm, int, int]]:
    """``(w, i, excess)`` wherever ``M_{w s_i Li} + M_{w Li} - M_{w L(i-1)} - M_{w L(i+1)} > 0``."""
    bad = []
    for w in W.permutations(M.n):
        for i in range(1, M.n):
            excess = (M[W.chamber(W.times_s(w, i), i)] + M[W.chamber(w, i)]
                      - M[W.chamber(w, i - 1)] - M[W.chamber(w, i + 1)])
            if excess > 0:
                bad.append((w, i, excess))
    return bad


def vertices(M: BZDatum) -> dict[Perm, Coweight]:
    """The GGMS datum ``w -> mu_w`` with ``<mu_w, w Li> = M_{w Li}``."""
    out = {}
    for w in W.permutations(M.n):
        mu = [0] * M.n
        for i in range(1, M.n + 1):
            mu[w[i - 1] - 1] = M[W.chamber(w, i)] - M[W.chamber(w, i - 1)]
        out[w] = tuple(mu)
    return out


def coweight(M: BZDatum) -> tuple[Coweight, Coweight]:
    """``(mu_e, mu_{w_0})``."""
    v = vertices(M)
    return v[W.identity(M.n)], v[W.longest(M.n)]


def polytope_contained(M: BZDatum, lam: Sequence[int], shift: Sequence[int] | None = None) -> bool:
    """``P(M) in conv(W lam)``, or ``P(M) in shift - conv(W lam)`` when ``shift`` is given."""
    for mu_w in vertices(M).values():
        x = mu_w if shift is None else tuple(s - m for s, m in zip(shift, mu_w))
        if not W.in_weyl_polytope(x, lam):
            return False
    return True


def check_monotone(M: BZDatum) -> list[tuple[int, int]]:
    """Pairs ``gamma >= delta`` of equal size with ``M_gamma < M_delta``."""
    bad = []
    for size in range(1, M.n):
        subs = [W.mask_of(c) for c in itertools.combinations(range(1, M.n + 1), size)]
        for g in subs:
            for d in subs:
                if g != d and W.subset_ge(g, d) and M[g] < M[d]:
                    bad.append((g, d))
    return bad


# ---------------------------------------------------------------------------
# MV_{lam mu}^nu


def mv_conditions(M: BZDatum, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> dict[str, bool]:
    """Each defining condition of ``MV_{lam mu}^nu`` separately."""
    n = M.n
    top = tuple(a - b for a, b in zip(nu, mu))
    return {
        "plucker": not check_tropical_plucker(M),
        "edge": not check_edge_inequalities(M),
        "lowest_vertex": all(M[W.interval(1, i)] == sum(top[:i]) for i in range(1, n + 1)),
        "highest_vertex": all(M[W.interval(n - i + 1, n)] == sum(lam[n - i:]) for i in range(1, n + 1)),
        "in_lam": polytope_contained(M, lam),
        "in_nu_minus_mu": polytope_contained(M, mu, shift=nu),
    }


def is_mv(M: BZDatum, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> bool:
    """Same verdict as :func:`mv_conditions`, cheapest checks first."""
    n = M.n
    top = tuple(a - b for a, b in zip(nu, mu))
    if not all(M[W.interval(1, i)] == sum(top[:i]) for i in range(1, n + 1)):
        return False
    if not all(M[W.interval(n - i + 1, n)] == sum(lam[n - i:]) for i in range(1, n + 1)):
        return False
    return (not check_edge_inequalities(M) and not check_tropical_plucker(M)
            and polytope_contained(M, lam) and polytope_contained(M, mu, shift=nu))


class MVConditionError(RuntimeError):
    """A datum obtained from a hive failed one of the MV conditions."""


def enumerate_mv(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
                 method: str = "propagate") -> list[BZDatum]:
    """All data in ``MV_{lam mu}^nu``, in canonical order.

    ``method="propagate"`` inverts every hive with boundary ``(lam, mu, nu)``;
    ``method="brute"`` searches all tables directly (n <= 3 only).
    """
    lam = W.require_dominant(lam, "lam")
    mu = W.require_dominant(mu, "mu")
    nu = W.require_dominant(nu, "nu")
    if not len(lam) == len(mu) == len(nu):
        raise ValueError("lam, mu, nu must have the same length")
    if method == "brute":
        return enumerate_mv_brute(lam, mu, nu)
    if method != "propagate":
        raise ValueError(f"unknown method {method!r}")

    from .hive import enumerate_hives
    from .phi import hive_to_bz

    out = []
    for F in enumerate_hives(lam, mu, nu):
        M = hive_to_bz(F)
        failed = [k for k, ok in mv_conditions(M, lam, mu, nu).items() if not ok]
        if failed:
            raise MVConditionError(f"datum from hive {F.values} fails {failed}")
        out.append(M)
    out.sort(key=BZDatum.sort_key)
    return out


def brute_force_bound(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    return sum(map(abs, lam)) + sum(map(abs, mu)) + sum(map(abs, nu))


def enumerate_mv_brute(lam: Coweight, mu: Coweight, nu: Coweight) -> list[BZDatum]:
    """Exhaustive search over every table with values in ``[-B-1, B+1]``.

    Every vertex lies in ``conv(W lam)``, so ``|M_gamma| <= B``; a hit on the
    outer layer of the box means the box was wrong.
    """
    n = len(lam)
    if n > 3:
        raise ValueError("brute-force MV enumeration is limited to n <= 3")
    if sum(lam) + sum(mu) != sum(nu):
        return []
    B = brute_force_bound(lam, mu, nu) + 1
    top = tuple(a - b for a, b in zip(nu, mu))
    fixed = {0: 0, W.full_mask(n): sum(lam)}
    for i in range(1, n):
        fixed[W.interval(1, i)] = sum(top[:i])
        fixed[W.interval(n - i + 1, n)] = sum(lam[n - i:])
    free = [m for m in W.chamber_weights(n) if m not in fixed]
    out = []
    for combo in itertools.product(range(-B, B + 1), repeat=len(free)):
        table = dict(fixed)
        table.update(zip(free, combo))
        M = BZDatum.from_mapping(n, table)
        if is_mv(M, lam, mu, nu):
            if any(abs(v) == B for v in combo):
                raise AssertionError(f"brute-force bound {B} is too tight for {lam}, {mu}, {nu}")
            out.append(M)
    out.sort(key=BZDatum.sort_key)
    return out
