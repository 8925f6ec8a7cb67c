"""
k-hives on the lattice ``Delta_n^k = {v in N^k : sum v = n}``.

A k-hive restricts to a hive on every 2-face and satisfies, for every
``v`` with ``sum v = n - 2`` and every ``i < j < r < s``::

    min(F[v+e_i+e_s] + F[v+e_j+e_r], F[v+e_i+e_j] + F[v+e_r+e_s])
        = F[v+e_i+e_r] + F[v+e_j+e_s]

Axis conventions (1-based). ``ne_i`` is the vertex ``n * e_i``. The
boundary ``lam^i`` is read along the edge from ``ne_(i-1)`` to ``ne_i``
(cyclically), and values are normalized so ``F[ne_k] = 0``. For ``k = 3``
the boundary is ``(lam, mu, chi)`` with ``chi`` the dual of the third hive
edge.

For the associator the four tensor positions ``lam, mu, nu, chi`` are the
four boundary edges, and the four faces carry::

    P in HIVE_{lam delta}^chi   face (1, 3, 4)
    Q in HIVE_{mu nu}^delta     face (2, 3, 1)
    R in HIVE_{lam mu}^gamma    face (1, 2, 4)
    S in HIVE_{gamma nu}^chi    face (2, 3, 4)
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .hive import Hive, boundary, check_hive, rhombi
from .hive import points as tri_points
from .propagate import INF, Problem, UnboundedSearch, solutions
from .weights import Coweight, require_dominant

KPoint = tuple[int, ...]


class CompletionError(RuntimeError):
    """Completion from two faces did not yield a valid 4-hive."""


@lru_cache(maxsize=None)
def kpoints(n: int, k: int) -> tuple[KPoint, ...]:
    """``Delta_n^k`` in lexicographic order."""
    if k == 1:
        return ((n,),)
    return tuple((a,) + rest for a in range(n + 1) for rest in kpoints(n - a, k - 1))


@lru_cache(maxsize=None)
def kpoint_index(n: int, k: int) -> dict[KPoint, int]:
    return {p: i for i, p in enumerate(kpoints(n, k))}


def _unit(k: int, *axes: int) -> KPoint:
    v = [0] * k
    for a in axes:
        v[a] += 1
    return tuple(v)


def _add(u: KPoint, v: KPoint) -> KPoint:
    return tuple(a + b for a, b in zip(u, v))


def vertex(n: int, k: int, i: int) -> KPoint:
    """``n e_i`` for a 1-based axis ``i``."""
    v = [0] * k
    v[i - 1] = n
    return tuple(v)


@dataclass(frozen=True)
class KHive:
    n: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(kpoints(self.n, self.k)):
            raise ValueError(f"a labelling of Delta_{self.n}^{self.k} needs "
                             f"{len(kpoints(self.n, self.k))} values")

    def __getitem__(self, p: KPoint) -> int:
        return self.values[kpoint_index(self.n, self.k)[tuple(p)]]

    def items(self) -> Iterator[tuple[KPoint, int]]:
        return zip(kpoints(self.n, self.k), self.values)

    @classmethod
    def from_mapping(cls, n: int, k: int, mapping: Mapping[KPoint, int]) -> "KHive":
        missing = [p for p in kpoints(n, k) if p not in mapping]
        if missing:
            raise ValueError(f"labelling is missing points {missing[:5]}")
        return cls(n, k, tuple(int(mapping[p]) for p in kpoints(n, k)))

    @classmethod
    def constant(cls, n: int, k: int, c: int = 0) -> "KHive":
        return cls(n, k, (c,) * len(kpoints(n, k)))

    def normalized(self) -> "KHive":
        base = self[vertex(self.n, self.k, self.k)]
        return KHive(self.n, self.k, tuple(v - base for v in self.values))

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k,
                "values": [{"index": list(p), "v": v} for p, v in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "KHive":
        n, k = int(data["n"]), int(data["k"])
        mapping = {tuple(int(x) for x in e["index"]): int(e["v"]) for e in data["values"]}
        if any(len(p) != k or sum(p) != n or min(p) < 0 for p in mapping):
            raise ValueError("k-hive JSON contains points outside Delta_n^k")
        return cls.from_mapping(n, k, mapping)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# ---------------------------------------------------------------------------
# local conditions


@dataclass(frozen=True)
class OctahedronViolation:
    v: KPoint
    axes: tuple[int, int, int, int]  # 1-based
    lhs: int
    rhs: int


@lru_cache(maxsize=None)
def octahedra(n: int, k: int) -> tuple[tuple[KPoint, tuple[int, ...], tuple[KPoint, ...]], ...]:
    """``(v, axes, (A0, A1, B0, B1, C0, C1))`` with ``min(A0+A1, B0+B1) = C0+C1``."""
    out = []
    if n < 2 or k < 4:
        return ()
    for v in kpoints(n - 2, k):
        for i, j, r, s in itertools.combinations(range(k), 4):
            pts = tuple(_add(v, _unit(k, a, b)) for a, b in
                        ((i, s), (j, r), (i, j), (r, s), (i, r), (j, s)))
            out.append((v, (i + 1, j + 1, r + 1, s + 1), pts))
    return tuple(out)


def _lookup(F: KHive | Mapping[KPoint, int]):
    return F.__getitem__ if isinstance(F, KHive) else F.__getitem__


def check_octahedron(F: KHive | Mapping[KPoint, int], n: int | None = None,
                     k: int | None = None) -> list[OctahedronViolation]:
    if isinstance(F, KHive):
        n, k = F.n, F.k
    elif n is None or k is None:
        some = next(iter(F))
        n, k = sum(some), len(some)
    if not isinstance(F, KHive):
        missing = [p for p in kpoints(n, k) if p not in F]
        if missing:
            raise ValueError(f"labelling is missing points {missing[:5]}")
    get = _lookup(F)
    bad = []
    for v, axes, (a0, a1, b0, b1, c0, c1) in octahedra(n, k):
        lhs = min(get(a0) + get(a1), get(b0) + get(b1))
        rhs = get(c0) + get(c1)
        if lhs != rhs:
            bad.append(OctahedronViolation(v, axes, lhs, rhs))
    return bad


def _embed(k: int, axes: Sequence[int], p: Sequence[int]) -> KPoint:
    v = [0] * k
    for a, x in zip(axes, p):
        v[a - 1] = x
    return tuple(v)


def face(F: KHive, axes: Sequence[int]) -> Hive:
    """Restriction to the face spanned by three distinct 1-based axes, as a normalized hive.

    The hive coordinate ``(i, j, k)`` sits at ``i`` on ``axes[0]``, ``j`` on
    ``axes[1]`` and ``k`` on ``axes[2]``. Any order of axes is accepted.
    """
    if len(axes) != 3 or len(set(axes)) != 3 or not all(1 <= a <= F.k for a in axes):
        raise ValueError(f"{tuple(axes)} is not a face of Delta^{F.k}")
    H = Hive.from_mapping(F.n, {p: F[_embed(F.k, axes, p)] for p in tri_points(F.n)})
    return H.normalized()


def faces(k: int) -> list[tuple[int, int, int]]:
    return list(itertools.combinations(range(1, k + 1), 3))


def check_khive(F: KHive) -> dict[str, list]:
    """Failed conditions: per-face rhombus violations and octahedron violations."""
    out: dict[str, list] = {}
    for ax in faces(F.k):
        bad = check_hive(face(F, ax))
        if bad:
            out[f"face{ax}"] = bad
    octs = check_octahedron(F)
    if octs:
        out["octahedron"] = octs
    return out


def is_khive(F: KHive) -> bool:
    return not check_khive(F)


def _edge_point(n: int, k: int, i: int, a: int) -> KPoint:
    """The point with ``a`` on axis ``i-1`` and ``n-a`` on axis ``i`` (cyclic, 1-based)."""
    prev = (i - 2) % k
    v = [0] * k
    v[prev] += a
    v[i - 1] += n - a
    return tuple(v)


def boundary_k(F: KHive) -> tuple[Coweight, ...]:
    n, k = F.n, F.k
    return tuple(
        tuple(F[_edge_point(n, k, i, j - 1)] - F[_edge_point(n, k, i, j)] for j in range(1, n + 1))
        for i in range(1, k + 1))


def boundary_k_values(weights: Sequence[Sequence[int]]) -> dict[KPoint, int] | None:
    """Values on the boundary cycle of edges, or None when the total is not zero."""
    k, n = len(weights), len(weights[0])
    if sum(map(sum, weights)) != 0:
        return None
    vals: dict[KPoint, int] = {}
    top = 0  # F[ne_i], accumulated from F[ne_k] = 0
    tops = {}
    for i in range(1, k + 1):
        top += sum(weights[i - 1])
        tops[i] = top
    for i in range(1, k + 1):
        lam = weights[i - 1]
        for a in range(n + 1):
            vals[_edge_point(n, k, i, a)] = tops[i] - sum(lam[:a])
    return vals


# ---------------------------------------------------------------------------
# enumeration


def _two_skeleton(n: int, k: int) -> list[KPoint]:
    return [p for p in kpoints(n, k) if sum(1 for x in p if x) <= 3]


def enumerate_khives(*weights: Sequence[int]) -> list[KHive]:
    """All normalized k-hives with boundary ``weights``, sorted by value vector.

    Boundary-cycle values are fixed. On the 2-skeleton every value is bounded
    above by the largest fixed value, because a hive is convex along every
    edge-parallel line. Every other bound comes from propagating the rhombus
    and octahedron conditions; an unbounded variable raises.
    """
    if len(weights) < 3:
        raise ValueError("need at least three coweights")
    ws = [require_dominant(w, f"lam^{i + 1}") for i, w in enumerate(weights)]
    n, k = len(ws[0]), len(ws)
    if any(len(w) != n for w in ws):
        raise ValueError("coweights must have the same length")
    fixed = boundary_k_values(ws)
    if fixed is None:
        return []

    pts = kpoints(n, k)
    idx = kpoint_index(n, k)
    cap = max(fixed.values())
    skeleton = set(_two_skeleton(n, k))
    lo = [-INF] * len(pts)
    hi = [INF] * len(pts)
    for p in pts:
        if p in fixed:
            lo[idx[p]] = hi[idx[p]] = fixed[p]
        elif p in skeleton:
            hi[idx[p]] = cap
    prob = Problem(len(pts), lo, hi)
    for ax in faces(k):
        for rh in rhombi(n):
            prob.add_le([idx[_embed(k, ax, q)] for q in rh.short],
                        [idx[_embed(k, ax, q)] for q in rh.long])
    for _, _, (a0, a1, b0, b1, c0, c1) in octahedra(n, k):
        prob.add_min_eq((idx[a0], idx[a1]), (idx[b0], idx[b1]), (idx[c0], idx[c1]))

    out = [KHive(n, k, vals) for vals in solutions(prob)]
    out.sort(key=lambda F: F.values)
    return out


# ---------------------------------------------------------------------------
# completion from two faces and the associator


def _fill(n: int, known: dict[KPoint, int], solve: tuple[int, int]) -> dict[KPoint, int]:
    """Fill every point with positive entries on both ``solve`` axes (0-based).

    Points are processed by increasing ``p[a] + p[b]``. For ``p = v + e_a + e_b``
    the octahedron on the four axes is solved for ``F[p]`` as
    ``min-side - partner``; the single-unknown property is asserted.
    """
    a, b = solve
    c, d = [x for x in range(4) if x not in solve]
    todo = sorted((p for p in kpoints(n, 4) if p[a] >= 1 and p[b] >= 1),
                  key=lambda p: (p[a] + p[b], p))
    vals = dict(known)
    for p in todo:
        v = list(p)
        v[a] -= 1
        v[b] -= 1
        v = tuple(v)
        # relation on sorted axes i<j<r<s: min(is + jr, ij + rs) = ir + js
        pair = {frozenset(q): _add(v, _unit(4, *q)) for q in itertools.combinations(range(4), 2)}
        i, j, r, s = 0, 1, 2, 3
        lhs_pairs = ((frozenset((i, s)), frozenset((j, r))), (frozenset((i, j)), frozenset((r, s))))
        rhs_pair = (frozenset((i, r)), frozenset((j, s)))
        target = frozenset((a, b))
        partner = frozenset((c, d))
        if {target, partner} != set(rhs_pair):
            raise AssertionError("solve axes must be a right-hand pair of the relation")
        needed = [pair[q] for q in (lhs_pairs[0] + lhs_pairs[1]) + (partner,)]
        gaps = [q for q in needed if q not in vals]
        if gaps:
            raise CompletionError(f"point {p} is not determined: {gaps} unknown")
        m = min(vals[pair[lhs_pairs[0][0]]] + vals[pair[lhs_pairs[0][1]]],
                vals[pair[lhs_pairs[1][0]]] + vals[pair[lhs_pairs[1][1]]])
        vals[p] = m - vals[pair[partner]]
    return vals


def _finish(n: int, vals: dict[KPoint, int]) -> KHive:
    missing = [p for p in kpoints(n, 4) if p not in vals]
    if missing:
        raise CompletionError(f"completion left points undetermined: {missing[:5]}")
    F = KHive.from_mapping(n, 4, vals).normalized()
    bad = check_khive(F)
    if bad:
        raise CompletionError(f"completed labelling is not a 4-hive: {sorted(bad)}")
    return F


def _place(vals: dict[KPoint, int], k: int, axes: Sequence[int], H: Hive, shift: int) -> None:
    for p, v in H.items():
        q = _embed(k, axes, p)
        v = v + shift
        if vals.setdefault(q, v) != v:
            raise ValueError(f"faces disagree at {q}: {vals[q]} vs {v}")


def complete_tetrahedron(P: Hive, Q: Hive) -> KHive:
    """The 4-hive with face (1,3,4) equal to ``P`` and face (2,3,1) equal to ``Q``."""
    if P.n != Q.n:
        raise ValueError("P and Q have different sizes")
    n = P.n
    P, Q = P.normalized(), Q.normalized()
    if boundary(P)[1] != boundary(Q)[2]:
        raise ValueError(f"shared edge mismatch: {boundary(P)[1]} vs {boundary(Q)[2]}")
    vals: dict[KPoint, int] = {}
    _place(vals, 4, (1, 3, 4), P, 0)
    _place(vals, 4, (2, 3, 1), Q, P[(n, 0, 0)])
    return _finish(n, _fill(n, vals, (1, 3)))


def complete_from_right(R: Hive, S: Hive) -> KHive:
    """The 4-hive with face (1,2,4) equal to ``R`` and face (2,3,4) equal to ``S``."""
    if R.n != S.n:
        raise ValueError("R and S have different sizes")
    n = R.n
    R, S = R.normalized(), S.normalized()
    if boundary(R)[2] != boundary(S)[0]:
        raise ValueError(f"shared edge mismatch: {boundary(R)[2]} vs {boundary(S)[0]}")
    vals: dict[KPoint, int] = {}
    _place(vals, 4, (1, 2, 4), R, 0)
    _place(vals, 4, (2, 3, 4), S, 0)
    return _finish(n, _fill(n, vals, (0, 2)))


def left_faces(F: KHive) -> tuple[Hive, Hive]:
    return face(F, (1, 3, 4)), face(F, (2, 3, 1))


def right_faces(F: KHive) -> tuple[Hive, Hive]:
    return face(F, (1, 2, 4)), face(F, (2, 3, 4))


def associator(P: Hive, Q: Hive) -> tuple[Hive, Hive]:
    """``(P, Q) -> (R, S)`` through the unique 4-hive containing ``P`` and ``Q``."""
    return right_faces(complete_tetrahedron(P, Q))


def associator_inverse(R: Hive, S: Hive) -> tuple[Hive, Hive]:
    return left_faces(complete_from_right(R, S))


__all__ = [
    "CompletionError", "KHive", "OctahedronViolation", "UnboundedSearch", "associator",
    "associator_inverse", "boundary_k", "boundary_k_values", "check_khive", "check_octahedron",
    "complete_from_right", "complete_tetrahedron", "enumerate_khives", "face", "faces",
    "is_khive", "kpoints", "left_faces", "octahedra", "right_faces", "vertex",
]
