"""
Batch verification: every acceptance criterion as a function returning a
:class:`CriterionResult`, and :func:`sweep_verify_all` to run them together.

Reports are deterministic for a given configuration (no timings in the JSON).
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from . import weights as W
from .affgr_eval import apply_to_xi, d_gamma, d_values, h_function, plucker_sweep, xi_terms
from .bz import check_monotone, enumerate_mv, mv_conditions
from .hive import Hive, enumerate_hives, points
from .khive import (associator, associator_inverse, boundary_k, check_khive, complete_tetrahedron,
                    enumerate_khives, left_faces)
from .laurent import LaurentMatrix, det, random_integral, random_laurent_matrix, random_rational_matrix
from .lr_oracle import multi_invariant_dim, tensor_decomposition, triple_invariant_dim
from .phi import min_formula, verify_phi_bijection


@dataclass
class SweepConfig:
    n_max: int = 3
    entry_bound: int = 3
    supplement_n: int | None = 4       # extra hive triples at this rank
    supplement_bound: int = 2
    khive_gl2_bound: int = 2
    khive_gl3_bound: int | None = 1
    eval_n_max: int = 3
    eval_samples: int = 100
    plucker_n: int = 3
    plucker_matrices: int = 200
    plucker_target: float = 0.99
    plucker_floor: float = 0.90
    seed: int = 0

    @classmethod
    def scaled(cls, n_max: int, entry_bound: int, seed: int = 0) -> "SweepConfig":
        """A sweep sized by ``n_max`` and ``entry_bound`` alone."""
        return cls(n_max=min(n_max, 3), entry_bound=entry_bound,
                   supplement_n=4 if n_max >= 4 else None,
                   supplement_bound=min(entry_bound, 2),
                   khive_gl2_bound=min(entry_bound, 2),
                   khive_gl3_bound=1 if n_max >= 3 else None,
                   eval_n_max=min(n_max, 3), seed=seed)


@dataclass
class CriterionResult:
    key: str
    title: str
    passed: bool
    checked: int
    detail: dict = field(default_factory=dict)
    counterexample: dict | None = None
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        d = asdict(self)
        d.pop("elapsed")
        return d

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.key} {self.title}: {self.checked} checked"


def _timed(fn: Callable[..., CriterionResult]) -> Callable[..., CriterionResult]:
    def wrapper(*args, **kwargs) -> CriterionResult:
        t = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _weights(n: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    return list(W.dominant_coweights(n, lo, hi))


def hive_triples(cfg: SweepConfig) -> Iterator[tuple[tuple[int, ...], ...]]:
    for n in range(1, cfg.n_max + 1):
        yield from itertools.product(_weights(n, 0, cfg.entry_bound), repeat=3)
    if cfg.supplement_n:
        yield from itertools.product(_weights(cfg.supplement_n, 0, cfg.supplement_bound), repeat=3)


def quadruples(cfg: SweepConfig, zero_sum_only: bool = False) -> Iterator[tuple[tuple[int, ...], ...]]:
    ranges = [(2, cfg.khive_gl2_bound)]
    if cfg.khive_gl3_bound is not None:
        ranges.append((3, cfg.khive_gl3_bound))
    for n, b in ranges:
        for q in itertools.product(_weights(n, -b, b), repeat=4):
            if not zero_sum_only or sum(map(sum, q)) == 0:
                yield q


def _js(ws) -> list[list[int]]:
    return [list(w) for w in ws]


def _method(n: int) -> str:
    return "brute" if n <= 3 else "propagate"


@lru_cache(maxsize=None)
def _mv(lam, mu, nu) -> tuple:
    """MV data shared by the criteria that need them."""
    return tuple(enumerate_mv(lam, mu, nu, method=_method(len(lam))))


# ---------------------------------------------------------------------------
# criteria


@_timed
def criterion_hive_lr(cfg: SweepConfig, orientation: int = 1) -> CriterionResult:
    """|hives| = triple invariant dimension for every triple of the sweep."""
    res = CriterionResult("C1", "hive count equals LR coefficient", True, 0, {"counts": []})
    for lam, mu, nu in hive_triples(cfg):
        got = len(enumerate_hives(lam, mu, nu, orientation=orientation))
        want = triple_invariant_dim(lam, mu, W.dual(nu))
        res.checked += 1
        if got:
            res.detail["counts"].append([_js((lam, mu, nu)), got])
        if got != want and res.passed:
            res.passed = False
            res.counterexample = {"triple": _js((lam, mu, nu)), "hives": got, "oracle": want}
    res.detail["nonzero"] = len(res.detail["counts"])
    return res


@_timed
def criterion_mv_hive(cfg: SweepConfig) -> CriterionResult:
    """|MV| = |hives|, and every datum satisfies every MV condition and monotonicity."""
    res = CriterionResult("C2", "MV count equals hive count; all data valid", True, 0)
    data_checked = 0
    for lam, mu, nu in hive_triples(cfg):
        if sum(lam) + sum(mu) != sum(nu):
            continue
        data = _mv(lam, mu, nu)
        hives = enumerate_hives(lam, mu, nu)
        res.checked += 1
        bad = None
        if len(data) != len(hives):
            bad = {"kind": "count", "mv": len(data), "hives": len(hives)}
        for M in data:
            data_checked += 1
            failed = [k for k, ok in mv_conditions(M, lam, mu, nu).items() if not ok]
            if check_monotone(M):
                failed.append("monotone")
            if failed and bad is None:
                bad = {"kind": "condition", "failed": failed, "datum": M.to_json()}
        if bad and res.passed:
            res.passed = False
            res.counterexample = {"triple": _js((lam, mu, nu)), **bad}
    res.detail["data_checked"] = data_checked
    return res


@_timed
def criterion_phi(cfg: SweepConfig) -> CriterionResult:
    """The forward map is injective onto the hive set and the inverse undoes it."""
    res = CriterionResult("C3", "forward map is a bijection onto hives", True, 0)
    for lam, mu, nu in hive_triples(cfg):
        if sum(lam) + sum(mu) != sum(nu):
            continue
        rep = verify_phi_bijection(lam, mu, nu, method=_method(len(lam)), data=_mv(lam, mu, nu))
        res.checked += rep.mv_count
        if not (rep.injective and rep.onto and rep.round_trip_ok and rep.mv_count == rep.hive_count):
            if res.passed:
                res.passed = False
                res.counterexample = rep.to_json()
    return res


@_timed
def criterion_min_formula(cfg: SweepConfig) -> CriterionResult:
    """The brute-force double minimum reproduces every hive value."""
    res = CriterionResult("C4", "double-min formula equals forward map", True, 0)
    for lam, mu, nu in hive_triples(cfg):
        if sum(lam) + sum(mu) != sum(nu):
            continue
        for M in _mv(lam, mu, nu):
            n = M.n
            for (i, j, k) in points(n):
                res.checked += 1
                direct = M[W.interval(k + 1, k + i)] + sum(nu[k + i:])
                if min_formula(M, nu, (i, j, k)) != direct and res.passed:
                    res.passed = False
                    res.counterexample = {"triple": _js((lam, mu, nu)), "datum": M.to_json(),
                                          "point": [i, j, k]}
    return res


@_timed
def criterion_khive(cfg: SweepConfig) -> CriterionResult:
    """|4-hives| = invariant dimension; each 4-hive is valid and rebuilt from two faces."""
    res = CriterionResult("C5", "4-hive count equals invariant dimension", True, 0, {"counts": []})
    for q in quadruples(cfg):
        hives = enumerate_khives(*q)
        want = multi_invariant_dim(*q)
        res.checked += 1
        if hives:
            res.detail["counts"].append([_js(q), len(hives)])
        bad = None
        if len(hives) != want:
            bad = {"kind": "count", "khives": len(hives), "oracle": want}
        for F in hives:
            if bad:
                break
            if check_khive(F):
                bad = {"kind": "invalid", "khive": F.to_json()}
            elif boundary_k(F) != tuple(q):
                bad = {"kind": "boundary", "khive": F.to_json()}
            elif complete_tetrahedron(*left_faces(F)) != F:
                bad = {"kind": "reconstruction", "khive": F.to_json()}
        if bad and res.passed:
            res.passed = False
            res.counterexample = {"quadruple": _js(q), **bad}
    return res


def left_union(lam, mu, nu, chi) -> list[tuple[Hive, Hive]]:
    """Pairs ``(P, Q)`` with ``P in HIVE_{lam delta}^{chi^vee}``, ``Q in HIVE_{mu nu}^delta``."""
    top = W.dual(chi)
    return [(P, Q) for delta in sorted(tensor_decomposition(mu, nu))
            for P in enumerate_hives(lam, delta, top) for Q in enumerate_hives(mu, nu, delta)]


def right_union(lam, mu, nu, chi) -> list[tuple[Hive, Hive]]:
    """Pairs ``(R, S)`` with ``R in HIVE_{lam mu}^gamma``, ``S in HIVE_{gamma nu}^{chi^vee}``."""
    top = W.dual(chi)
    return [(R, S) for gamma in sorted(tensor_decomposition(lam, mu))
            for R in enumerate_hives(lam, mu, gamma) for S in enumerate_hives(gamma, nu, top)]


@_timed
def criterion_associator(cfg: SweepConfig) -> CriterionResult:
    """The associator maps the left union injectively onto the right union."""
    res = CriterionResult("C6", "associator is a bijection", True, 0)
    pairs = 0
    for q in quadruples(cfg, zero_sum_only=True):
        lam, mu, nu, chi = q
        left, right = left_union(*q), right_union(*q)
        right_set = set(right)
        oracle_left = sum(c * triple_invariant_dim(lam, d, chi) for d, c in tensor_decomposition(mu, nu).items())
        oracle_right = sum(c * triple_invariant_dim(g, nu, chi) for g, c in tensor_decomposition(lam, mu).items())
        res.checked += 1
        bad = None
        if not (len(left) == len(right) == oracle_left == oracle_right):
            bad = {"kind": "cardinality", "left": len(left), "right": len(right),
                   "oracle_left": oracle_left, "oracle_right": oracle_right}
        images = set()
        for P, Q in left:
            if bad:
                break
            pairs += 1
            try:
                R, S = associator(P, Q)
            except Exception as exc:  # surfaced as a counterexample
                bad = {"kind": "completion", "error": str(exc), "P": P.to_json(), "Q": Q.to_json()}
                break
            if (R, S) not in right_set:
                bad = {"kind": "image", "P": P.to_json(), "Q": Q.to_json()}
            elif (R, S) in images:
                bad = {"kind": "collision", "P": P.to_json(), "Q": Q.to_json()}
            elif associator_inverse(R, S) != (P, Q):
                bad = {"kind": "inverse", "P": P.to_json(), "Q": Q.to_json()}
            images.add((R, S))
        if bad is None and images != right_set:
            bad = {"kind": "not_onto", "missing": len(right_set - images)}
        if bad and res.passed:
            res.passed = False
            res.counterexample = {"quadruple": _js(q), **bad}
    res.detail["pairs"] = pairs
    return res


@_timed
def criterion_evaluators(cfg: SweepConfig) -> CriterionResult:
    """Exact identities of the valuation functions."""
    res = CriterionResult("C7", "evaluator identities", True, 0, {})
    rng = random.Random(cfg.seed)
    failures: dict[str, dict] = {}

    def record(name: str, ok: bool, info: dict) -> None:
        res.checked += 1
        res.detail[name] = res.detail.get(name, 0) + 1
        if not ok and name not in failures:
            failures[name] = info

    for n in range(1, cfg.eval_n_max + 1):
        # d_gamma on t^mu is linear
        for mu in itertools.product(range(-2, 3), repeat=n):
            g = LaurentMatrix.diag_t(mu)
            for m in range(1 << n):
                record("dgamma_linear", d_gamma(g, m) == W.coordinate_sum(mu, m),
                       {"mu": list(mu), "gamma": list(W.elements_of(m))})
        # identity tuples have valuation 0
        for k in (1, 2, 3, 4):
            for sizes in itertools.product(range(n + 1), repeat=k):
                if sum(sizes) == n:
                    v = h_function([LaurentMatrix.identity(n)] * k, sizes)
                    record("h_identity", v == 0, {"n": n, "sizes": list(sizes), "value": v})
        compositions = [s for s in itertools.product(range(n + 1), repeat=3) if sum(s) == n]
        for _ in range(cfg.eval_samples):
            g = random_laurent_matrix(n, rng)
            u = random_integral(n, rng)
            ug = u * g
            for m in range(1 << n):
                record("dgamma_left_invariant", d_gamma(ug, m) == d_gamma(g, m),
                       {"g": g.to_json(), "u": u.to_json(), "gamma": list(W.elements_of(m))})
            gs = [random_laurent_matrix(n, rng) for _ in range(3)]
            us = [random_integral(n, rng) for _ in range(3)]
            sizes = compositions[rng.randrange(len(compositions))]
            record("h_left_invariant",
                   h_function([a * b for a, b in zip(us, gs)], sizes) == h_function(gs, sizes),
                   {"sizes": list(sizes), "gs": [x.to_json() for x in gs]})
            A = random_rational_matrix(n, rng)
            d = det(A, Fraction(0), Fraction(1))
            want = {blocks: d * sign for blocks, sign in xi_terms(n, sizes).terms}
            got = apply_to_xi([A] * 3, sizes, Fraction(0), Fraction(1))
            record("xi_equivariant", got == want,
                   {"A": [[str(x) for x in row] for row in A], "sizes": list(sizes)})
            # H with (g, t^nu, 1) collapses to the double minimum over D-values of g
            nu = sorted((rng.randint(-2, 2) for _ in range(n)), reverse=True)
            M = d_values(g)
            for ijk in points(n):
                h = h_function([g, LaurentMatrix.diag_t(nu), LaurentMatrix.identity(n)], ijk)
                record("h_min_formula", h == min_formula(M, nu, ijk),
                       {"g": g.to_json(), "nu": nu, "point": list(ijk), "h": h})
    if failures:
        res.passed = False
        res.counterexample = failures
    return res


@_timed
def criterion_plucker(cfg: SweepConfig) -> CriterionResult:
    rep = plucker_sweep(cfg.plucker_n, cfg.plucker_matrices, cfg.seed)
    res = CriterionResult("C8", "generic tropical Plucker relations", rep.rate >= cfg.plucker_target,
                          rep.instances, {"holding": rep.holding, "rate": rep.rate, "seed": cfg.seed,
                                          "matrices": cfg.plucker_matrices,
                                          "systematic_failure": rep.rate < cfg.plucker_floor})
    if rep.failures:
        res.counterexample = {"failures": rep.failures[:5]}
    return res


@_timed
def criterion_direction(cfg: SweepConfig, baseline: CriterionResult | None = None) -> CriterionResult:
    """The adopted orientation passes the hive sweep; the reversed one fails the control case."""
    if baseline is None:
        baseline = criterion_hive_lr(cfg)
    case = ((1, 0), (1, 0), (1, 1))
    adopted = len(enumerate_hives(*case))
    reversed_ = len(enumerate_hives(*case, orientation=-1))
    ok = baseline.passed and adopted == 1 and reversed_ == 0
    return CriterionResult("C9", "rhombus orientation negative control", ok, baseline.checked + 1,
                           {"case": _js(case), "adopted": adopted, "reversed": reversed_,
                            "baseline_passed": baseline.passed})


@dataclass
class SweepReport:
    config: SweepConfig
    criteria: list[CriterionResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.criteria)

    def to_json(self) -> dict:
        return {"config": asdict(self.config), "passed": self.passed,
                "criteria": [c.to_json() for c in self.criteria]}


def sweep_verify_all(n_max: int = 3, entry_bound: int = 3, seed: int = 0,
                     config: SweepConfig | None = None,
                     progress: Callable[[CriterionResult], None] | None = None) -> SweepReport:
    cfg = config or SweepConfig.scaled(n_max, entry_bound, seed)
    out: list[CriterionResult] = []

    def run(fn, *args) -> CriterionResult:
        r = fn(cfg, *args)
        out.append(r)
        if progress:
            progress(r)
        return r

    c1 = run(criterion_hive_lr)
    for fn in (criterion_mv_hive, criterion_phi, criterion_min_formula, criterion_khive,
               criterion_associator, criterion_evaluators, criterion_plucker):
        run(fn)
    run(criterion_direction, c1)
    return SweepReport(cfg, out)
