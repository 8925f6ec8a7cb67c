"""
Valuation functions on tuples of Laurent matrices.

Action convention: ``g e_j = sum_i g[i, j] e_i``, so the coordinates of
``g v_gamma`` (``v_gamma`` the wedge of the basis vectors in ``gamma``) are
the minors ``det g[beta, gamma]``.

* ``d_gamma(g, gamma) = min_beta val det g[beta, gamma]``
* ``h_function(gs, i)`` is the valuation of ``(g_1, ..., g_k) xi_i`` where
  ``xi_i = sum sign(alpha) v_{alpha_1} (x) ... (x) v_{alpha_k}`` over ordered
  set partitions of ``{1..n}`` with block sizes ``i``.
* ``speyer_s`` is the valuation of one coefficient of
  ``det(x g_1 + y g_2 + z g_3)``.

Valuations of zero are ``None`` (+infinity).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from . import weights as W
from .bz import BZDatum, plucker_instances
from .laurent import ONE, ZERO, LaurentMatrix, LaurentPoly, det, perm_sign, random_laurent_matrix, vmin

Block = tuple[int, ...]


def _subset(gamma: int | Sequence[int]) -> Block:
    return W.elements_of(gamma) if isinstance(gamma, int) else tuple(sorted(gamma))


def d_gamma(g: LaurentMatrix, gamma: int | Sequence[int]) -> int | None:
    """``min_beta val det g[beta, gamma]``; 0 for the empty set."""
    g.require_invertible()
    cols = _subset(gamma)
    best = None
    for beta in itertools.combinations(range(1, g.n + 1), len(cols)):
        best = vmin(best, g.minor(beta, cols).valuation())
    return best


def d_values(g: LaurentMatrix) -> BZDatum:
    """``gamma -> d_gamma(g, gamma)`` for every subset, as a BZ table."""
    g.require_invertible()
    vals = {}
    for m in range(1 << g.n):
        v = d_gamma(g, m)
        if v is None:
            raise AssertionError("an invertible matrix has a nonzero minor in every column set")
        vals[m] = v
    return BZDatum.from_mapping(g.n, vals)


# ---------------------------------------------------------------------------
# the invariant vectors xi


@dataclass(frozen=True)
class XiExpansion:
    n: int
    sizes: tuple[int, ...]
    terms: tuple[tuple[tuple[Block, ...], int], ...]

    def __len__(self) -> int:
        return len(self.terms)


def _ordered_partitions(elems: Block, sizes: Sequence[int]):
    if not sizes:
        yield ()
        return
    for first in itertools.combinations(elems, sizes[0]):
        rest = tuple(e for e in elems if e not in first)
        for tail in _ordered_partitions(rest, sizes[1:]):
            yield (first,) + tail


def xi_terms(n: int, sizes: Sequence[int]) -> XiExpansion:
    """Every ordered set partition with the given block sizes, signed by the
    permutation that lists the (sorted) blocks one after another."""
    sizes = tuple(int(s) for s in sizes)
    if sum(sizes) != n or min(sizes, default=0) < 0:
        raise ValueError(f"block sizes {sizes} do not partition {n}")
    terms = []
    for blocks in _ordered_partitions(tuple(range(1, n + 1)), sizes):
        flat = [e - 1 for b in blocks for e in b]
        terms.append((blocks, perm_sign(flat)))
    return XiExpansion(n, sizes, tuple(terms))


def apply_to_xi(mats: Sequence[Sequence[Sequence]], sizes: Sequence[int], zero, one) -> dict:
    """Coordinates of ``(A_1 (x) ... (x) A_k) xi``, keyed by tuples of row sets.

    Works over any commutative ring; ``zero``/``one`` fix the ring. Zero
    coordinates are omitted.
    """
    n = len(mats[0])
    xi = xi_terms(n, sizes)
    minors: list[dict] = []
    for A, s in zip(mats, sizes):
        table = {}
        for beta in itertools.combinations(range(1, n + 1), s):
            for alpha in itertools.combinations(range(1, n + 1), s):
                table[(beta, alpha)] = det([[A[r - 1][c - 1] for c in alpha] for r in beta], zero, one)
        minors.append(table)
    out = {}
    for betas in itertools.product(*(itertools.combinations(range(1, n + 1), s) for s in sizes)):
        acc = zero
        for blocks, sign in xi.terms:
            term = one
            for m, (beta, alpha) in enumerate(zip(betas, blocks)):
                term = term * minors[m][(beta, alpha)]
            acc = acc + term if sign > 0 else acc - term
        if acc != zero:
            out[betas] = acc
    return out


def h_function(gs: Sequence[LaurentMatrix], sizes: Sequence[int]) -> int | None:
    """Valuation of ``(g_1, ..., g_k) xi_sizes``."""
    if len(gs) != len(sizes):
        raise ValueError("need one matrix per block size")
    n = gs[0].n
    if any(g.n != n for g in gs):
        raise ValueError("matrices have different sizes")
    if sum(sizes) != n:
        raise ValueError(f"block sizes must sum to {n}")
    for g in gs:
        g.require_invertible()
    coords = apply_to_xi([g.entries for g in gs], sizes, ZERO, ONE)
    return vmin(*(p.valuation() for p in coords.values()))


# ---------------------------------------------------------------------------
# determinant of x g1 + y g2 + z g3


TriPoly = dict  # (a, b, c) -> LaurentPoly


def _tri_mul(p: TriPoly, q: TriPoly) -> TriPoly:
    out: TriPoly = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            out[e] = out.get(e, ZERO) + ca * cb
    return {e: c for e, c in out.items() if not c.is_zero}


def pencil_det(g1: LaurentMatrix, g2: LaurentMatrix, g3: LaurentMatrix) -> TriPoly:
    """``det(x g1 + y g2 + z g3)`` as ``{(a, b, c): coefficient of x^a y^b z^c}``."""
    n = g1.n
    if g2.n != n or g3.n != n:
        raise ValueError("matrices have different sizes")
    total: TriPoly = {}
    for perm in itertools.permutations(range(n)):
        term: TriPoly = {(0, 0, 0): ONE}
        for r in range(n):
            c = perm[r]
            entry = {e: v for e, v in (((1, 0, 0), g1[r, c]), ((0, 1, 0), g2[r, c]),
                                       ((0, 0, 1), g3[r, c])) if not v.is_zero}
            term = _tri_mul(term, entry)
        sign = perm_sign(perm)
        for e, v in term.items():
            total[e] = total.get(e, ZERO) + (v if sign > 0 else -v)
    return {e: c for e, c in total.items() if not c.is_zero}


def speyer_s(g1: LaurentMatrix, g2: LaurentMatrix, g3: LaurentMatrix,
             ijk: tuple[int, int, int]) -> int | None:
    i, j, k = ijk
    if i + j + k != g1.n or min(ijk) < 0:
        raise ValueError(f"{ijk} does not sum to {g1.n}")
    return pencil_det(g1, g2, g3).get((i, j, k), ZERO).valuation()


# ---------------------------------------------------------------------------
# tropical Plucker relations on random matrices


@dataclass
class PluckerReport:
    instances: int = 0
    holding: int = 0
    failures: list = field(default_factory=list)

    @property
    def rate(self) -> float:
        return self.holding / self.instances if self.instances else 1.0

    def merge(self, other: "PluckerReport") -> None:
        self.instances += other.instances
        self.holding += other.holding
        self.failures.extend(other.failures)

    def to_json(self) -> dict:
        return {"instances": self.instances, "holding": self.holding, "rate": self.rate,
                "failures": self.failures[:10]}


def check_generic_plucker(g: LaurentMatrix) -> PluckerReport:
    """Which tropical Plucker relations the table ``gamma -> d_gamma(g)`` satisfies."""
    M = d_values(g)
    rep = PluckerReport()
    for w, i, j, (a, b, c, d, e, f) in plucker_instances(g.n):
        rep.instances += 1
        lhs, rhs = M[a] + M[b], min(M[c] + M[d], M[e] + M[f])
        if lhs == rhs:
            rep.holding += 1
        else:
            rep.failures.append({"w": list(w), "i": i, "j": j, "lhs": lhs, "rhs": rhs})
    return rep


def plucker_sweep(n: int, count: int, seed: int, exps: tuple[int, int] = (-1, 2),
                  coeffs: tuple[int, int] = (-9, 9)) -> PluckerReport:
    rng = random.Random(seed)
    rep = PluckerReport()
    for _ in range(count):
        rep.merge(check_generic_plucker(random_laurent_matrix(n, rng, exps, coeffs)))
    return rep


__all__ = [
    "LaurentMatrix", "LaurentPoly", "PluckerReport", "XiExpansion", "apply_to_xi",
    "check_generic_plucker", "d_gamma", "d_values", "h_function",
    "pencil_det", "plucker_sweep", "speyer_s", "xi_terms",
]
