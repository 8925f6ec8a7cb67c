"""
Command-line interface.

Coweights are comma-separated integers. Values starting with a minus sign
must be attached with ``=``, e.g. ``--la=-1,-2`` (otherwise the shell word
looks like an option). Exit codes: 0 success, 1 verification failure
(counterexample printed as JSON), 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable, Sequence, TextIO

from . import weights as W
from .affgr_eval import check_generic_plucker, d_gamma, h_function, plucker_sweep, speyer_s
from .bz import BZDatum, check_monotone, enumerate_mv, mv_conditions
from .hive import Hive, boundary, check_hive, enumerate_hives
from .khive import associator, boundary_k, check_khive, enumerate_khives
from .laurent import LaurentMatrix
from .lr_oracle import multi_invariant_dim, triple_invariant_dim
from .phi import bz_to_hive, hive_to_bz, verify_phi_bijection
from .sweep import SweepConfig, sweep_verify_all

OK, FAILED, USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class CommandSpec:
    name: str
    args: argparse.Namespace


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _dominant(*named: tuple[str, Sequence[int] | None]) -> list[tuple[int, ...]]:
    out = []
    for name, w in named:
        if w is None:
            raise UsageError(f"--{name} is required")
        out.append(W.require_dominant(w, name))
    if len({len(w) for w in out}) > 1:
        raise UsageError("coweights have different lengths")
    return out


# ---------------------------------------------------------------------------
# output helpers


class Out:
    def __init__(self, stream: TextIO, as_json: bool) -> None:
        self.stream, self.json = stream, as_json

    def emit(self, payload, text: str | Callable[[], str]) -> None:
        if self.json:
            self.stream.write(json.dumps(payload) + "\n")
        else:
            self.stream.write((text() if callable(text) else text) + "\n")

    def fail(self, payload: dict) -> int:
        self.stream.write(json.dumps({"verified": False, **payload}) + "\n")
        return FAILED


def hive_text(F: Hive) -> str:
    """Rows ``i = n .. 0``; row ``i`` lists ``F[i, j, n-i-j]`` for ``j = 0 ..``."""
    n = F.n
    rows = []
    for i in range(n, -1, -1):
        vals = [F[(i, j, n - i - j)] for j in range(n - i + 1)]
        rows.append(" " * (2 * i) + "  ".join(f"{v:>2}" for v in vals))
    return "\n".join(rows)


def _boundary_header(lam, mu, nu) -> str:
    return f"lam={list(lam)} mu={list(mu)} nu={list(nu)} chi=nu^vee={list(W.dual(nu))}"


# ---------------------------------------------------------------------------
# commands


def cmd_hive_enumerate(a, out: Out) -> int:
    lam, mu, nu = _dominant(("la", a.la), ("mu", a.mu), ("nu", a.nu))
    hives = enumerate_hives(lam, mu, nu)
    out.emit({"lam": lam, "mu": mu, "nu": nu, "chi": W.dual(nu), "count": len(hives),
              "hives": [F.to_json() for F in hives]},
             lambda: "\n\n".join([_boundary_header(lam, mu, nu) + f"\n{len(hives)} hive(s)"]
                                 + [hive_text(F) for F in hives]))
    return OK


def cmd_hive_check(a, out: Out) -> int:
    F = Hive.from_json(_load_json(a.file))
    bad = check_hive(F)
    lam, mu, nu = boundary(F)
    if bad:
        return out.fail({"violations": [[k, list(p)] for k, p in bad]})
    out.emit({"verified": True, "lam": lam, "mu": mu, "nu": nu, "chi": W.dual(nu)},
             "hive OK; " + _boundary_header(lam, mu, nu))
    return OK


def cmd_lr_coeff(a, out: Out) -> int:
    lam, mu, nu = _dominant(("la", a.la), ("mu", a.mu), ("nu", a.nu))
    c = triple_invariant_dim(lam, mu, W.dual(nu))
    out.emit({"lam": lam, "mu": mu, "nu": nu, "coefficient": c}, str(c))
    return OK


def cmd_lr_multi(a, out: Out) -> int:
    ws = _dominant(*(("w", w) for w in a.w or [None]))
    d = multi_invariant_dim(*ws)
    out.emit({"weights": ws, "dimension": d}, str(d))
    return OK


def cmd_bz_enumerate(a, out: Out) -> int:
    lam, mu, nu = _dominant(("la", a.la), ("mu", a.mu), ("nu", a.nu))
    data = enumerate_mv(lam, mu, nu, method=a.method)
    out.emit({"lam": lam, "mu": mu, "nu": nu, "count": len(data), "data": [M.to_json() for M in data]},
             lambda: f"{len(data)} datum(s)\n" + "\n".join(
                 "  ".join(f"{list(W.elements_of(m))}:{v}" for m, v in M.items()) for M in data))
    return OK


def cmd_bz_check(a, out: Out) -> int:
    M = BZDatum.from_json(_load_json(a.file))
    lam, mu, nu = _dominant(("la", a.la), ("mu", a.mu), ("nu", a.nu))
    conds = mv_conditions(M, lam, mu, nu)
    conds["monotone"] = not check_monotone(M)
    if not all(conds.values()):
        return out.fail({"conditions": conds})
    out.emit({"verified": True, "conditions": conds}, "datum OK: " + ", ".join(conds))
    return OK


def cmd_phi_forward(a, out: Out) -> int:
    M = BZDatum.from_json(_load_json(a.file))
    if a.nu is None or len(a.nu) != M.n:
        raise UsageError(f"--nu with {M.n} entries is required")
    F = bz_to_hive(M, a.nu)
    out.emit(F.to_json(), lambda: hive_text(F))
    return OK


def cmd_phi_inverse(a, out: Out) -> int:
    F = Hive.from_json(_load_json(a.file))
    M = hive_to_bz(F)
    out.emit(M.to_json(), lambda: "  ".join(f"{list(W.elements_of(m))}:{v}" for m, v in M.items()))
    return OK


def cmd_phi_verify(a, out: Out) -> int:
    lam, mu, nu = _dominant(("la", a.la), ("mu", a.mu), ("nu", a.nu))
    rep = verify_phi_bijection(lam, mu, nu)
    if not rep.ok:
        return out.fail(rep.to_json())
    out.emit({"verified": True, **rep.to_json()},
             f"bijection OK: {rep.mv_count} data <-> {rep.hive_count} hives ({rep.method})")
    return OK


def cmd_khive_enumerate(a, out: Out) -> int:
    ws = _dominant(*(("w", w) for w in a.w or [None]))
    if len(ws) < 3:
        raise UsageError("give at least three --w coweights")
    hs = enumerate_khives(*ws)
    oracle = multi_invariant_dim(*ws)
    for F in hs:
        if check_khive(F) or boundary_k(F) != tuple(ws):
            return out.fail({"kind": "invalid k-hive", "khive": F.to_json()})
    if len(hs) != oracle:
        return out.fail({"kind": "count", "khives": len(hs), "oracle": oracle})
    out.emit({"weights": ws, "count": len(hs), "oracle": oracle, "khives": [F.to_json() for F in hs]},
             f"{len(hs)} k-hive(s); invariant dimension {oracle}")
    return OK


def cmd_khive_associate(a, out: Out) -> int:
    P = Hive.from_json(_load_json(a.p))
    Q = Hive.from_json(_load_json(a.q))
    R, S = associator(P, Q)
    out.emit({"R": R.to_json(), "S": S.to_json()},
             lambda: "R:\n" + hive_text(R) + "\nS:\n" + hive_text(S))
    return OK


def _matrices(paths: Sequence[str] | None, count: int | None = None) -> list[LaurentMatrix]:
    gs = [LaurentMatrix.from_json(_load_json(p)) for p in paths or []]
    if count is not None and len(gs) != count:
        raise UsageError(f"expected {count} --matrix arguments, got {len(gs)}")
    if not gs:
        raise UsageError("at least one --matrix is required")
    return gs


def _val(v: int | None):
    return "inf" if v is None else v


def cmd_eval_dgamma(a, out: Out) -> int:
    (g,) = _matrices(a.matrix, 1)
    gamma = a.gamma or ()
    if any(not 1 <= x <= g.n for x in gamma) or len(set(gamma)) != len(gamma):
        raise UsageError(f"--gamma must be a subset of 1..{g.n}")
    v = d_gamma(g, gamma)
    out.emit({"gamma": sorted(gamma), "value": v}, str(_val(v)))
    return OK


def cmd_eval_h(a, out: Out) -> int:
    gs = _matrices(a.matrix)
    v = h_function(gs, a.sizes or ())
    out.emit({"sizes": list(a.sizes or ()), "value": v}, str(_val(v)))
    return OK


def cmd_eval_speyer(a, out: Out) -> int:
    g1, g2, g3 = _matrices(a.matrix, 3)
    if a.ijk is None or len(a.ijk) != 3:
        raise UsageError("--ijk needs three integers")
    v = speyer_s(g1, g2, g3, a.ijk)
    out.emit({"ijk": list(a.ijk), "value": v}, str(_val(v)))
    return OK


def cmd_eval_plucker(a, out: Out) -> int:
    if a.matrix:
        rep = check_generic_plucker(_matrices(a.matrix, 1)[0])
    else:
        rep = plucker_sweep(a.n, a.count, a.seed)
    payload = {"seed": a.seed, **rep.to_json()}
    if rep.rate < a.threshold:
        return out.fail(payload)
    out.emit(payload, f"{rep.holding}/{rep.instances} relations hold ({rep.rate:.2%})")
    return OK


def cmd_sweep(a, out: Out) -> int:
    cfg = SweepConfig.scaled(a.n_max, a.bound, a.seed)

    def progress(r) -> None:
        if not out.json:
            print(r.line(), file=sys.stderr)

    rep = sweep_verify_all(config=cfg, progress=progress)
    payload = rep.to_json()
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
    if out.json:
        out.stream.write(json.dumps(payload) + "\n")
    else:
        out.stream.write(("all criteria pass" if rep.passed else "FAILED") + "\n")
    return OK if rep.passed else FAILED


# ---------------------------------------------------------------------------
# parser


def _triple_flags(p: argparse.ArgumentParser, nu: bool = True) -> None:
    p.add_argument("--la", type=parse_ints, help="lam, e.g. 2,1,0")
    p.add_argument("--mu", type=parse_ints, help="mu")
    if nu:
        p.add_argument("--nu", type=parse_ints, help="nu (the chi = nu^vee edge is printed too)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hivekit", description="Hives, BZ data, k-hives and valuation evaluators.",
        epilog="Negative coweights: attach with '=', e.g. --la=-1,-2.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    top = parser.add_subparsers(dest="group", required=True)

    def group(name: str, help_: str):
        g = top.add_parser(name, help=help_)
        return g.add_subparsers(dest="action", required=True)

    def leaf(sub, name: str, fn, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        p.set_defaults(fn=fn)
        return p

    g = group("hive", "hives with prescribed boundary")
    _triple_flags(leaf(g, "enumerate", cmd_hive_enumerate, "list all hives"))
    leaf(g, "check", cmd_hive_check, "check a hive JSON file").add_argument("file")

    g = group("lr", "Littlewood-Richardson oracle")
    _triple_flags(leaf(g, "coeff", cmd_lr_coeff, "multiplicity of V_nu in V_la (x) V_mu"))
    leaf(g, "multi", cmd_lr_multi, "invariant dimension of a tensor product").add_argument(
        "--w", type=parse_ints, action="append", help="a coweight; repeat for each factor")

    g = group("bz", "BZ data")
    p = leaf(g, "enumerate", cmd_bz_enumerate, "list MV data")
    _triple_flags(p)
    p.add_argument("--method", choices=["propagate", "brute"], default="propagate")
    p = leaf(g, "check", cmd_bz_check, "check a BZ datum JSON file")
    p.add_argument("file")
    _triple_flags(p)

    g = group("phi", "BZ data <-> hives")
    p = leaf(g, "forward", cmd_phi_forward, "BZ datum JSON -> hive")
    p.add_argument("file")
    p.add_argument("--nu", type=parse_ints)
    leaf(g, "inverse", cmd_phi_inverse, "hive JSON -> BZ datum").add_argument("file")
    _triple_flags(leaf(g, "verify", cmd_phi_verify, "check the bijection for one triple"))

    g = group("khive", "k-hives and the associator")
    leaf(g, "enumerate", cmd_khive_enumerate, "list k-hives").add_argument(
        "--w", type=parse_ints, action="append", help="a boundary coweight; repeat k times")
    p = leaf(g, "associate", cmd_khive_associate, "map (P, Q) to (R, S)")
    p.add_argument("--p", required=True, help="hive JSON in HIVE_{lam delta}^chi")
    p.add_argument("--q", required=True, help="hive JSON in HIVE_{mu nu}^delta")

    g = group("eval", "valuation functions on Laurent matrices")
    p = leaf(g, "dgamma", cmd_eval_dgamma, "min valuation of the gamma-column minors")
    p.add_argument("--matrix", action="append")
    p.add_argument("--gamma", type=parse_ints)
    p = leaf(g, "h", cmd_eval_h, "valuation of (g_1, ..., g_k) applied to xi")
    p.add_argument("--matrix", action="append")
    p.add_argument("--sizes", type=parse_ints)
    p = leaf(g, "speyer", cmd_eval_speyer, "valuation of a coefficient of det(x g1 + y g2 + z g3)")
    p.add_argument("--matrix", action="append")
    p.add_argument("--ijk", type=parse_ints)
    p = leaf(g, "plucker-sweep", cmd_eval_plucker, "tropical Plucker relations on random matrices")
    p.add_argument("--matrix", action="append", help="check one matrix instead of a random sweep")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--threshold", type=float, default=0.99)

    g = group("sweep", "batch verification")
    p = leaf(g, "verify-all", cmd_sweep, "run every acceptance criterion")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--out", help="also write the JSON report here")
    return parser


def run(argv: Sequence[str] | None = None, stream: TextIO | None = None) -> int:
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    spec = CommandSpec(f"{args.group} {args.action}", args)
    out = Out(stream, args.json)
    try:
        return spec.args.fn(spec.args, out)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"hivekit {spec.name}: error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
