from __future__ import annotations

import io
import json

import pytest

from hivekit.cli import run
from hivekit.hive import enumerate_hives
from hivekit.laurent import LaurentMatrix


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), stream=buf)
    return code, buf.getvalue()


def test_hive_enumerate_json():
    code, out = call("hive", "enumerate", "--la", "2,1,0", "--mu", "2,1,0", "--nu", "3,2,1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2 and len(data["hives"]) == 2 and data["chi"] == [-1, -2, -3]


def test_hive_enumerate_text_shows_both_conventions():
    code, out = call("hive", "enumerate", "--la", "1,0", "--mu", "1,0", "--nu", "1,1")
    assert code == 0 and "nu=[1, 1]" in out and "chi=nu^vee=[-1, -1]" in out


def test_lr_coeff():
    assert call("lr", "coeff", "--la", "1,0", "--mu", "1,0", "--nu", "2,0") == (0, "1\n")


def test_negative_entries_with_equals():
    code, out = call("lr", "multi", "--w", "1,0", "--w", "1,0", "--w=0,-1", "--w=0,-1")
    assert (code, out) == (0, "2\n")


def test_not_dominant_is_usage_error():
    assert call("hive", "enumerate", "--la", "1,0,2", "--mu", "0,0,0", "--nu", "1,0,2")[0] == 2


def test_unknown_flag_is_usage_error():
    assert call("hive", "enumerate", "--bogus")[0] == 2
    assert call("nonsense")[0] == 2


def test_dimension_mismatch_is_usage_error():
    assert call("lr", "coeff", "--la", "1,0", "--mu", "1,0,0", "--nu", "2,0")[0] == 2


def test_check_and_phi_round_trip(tmp_path):
    F = enumerate_hives((2, 1, 0), (2, 1, 0), (3, 2, 1))[0]
    hp = tmp_path / "h.json"
    hp.write_text(F.dumps())
    assert call("hive", "check", str(hp))[0] == 0
    code, out = call("--json", "phi", "inverse", str(hp))
    assert code == 0
    mp = tmp_path / "m.json"
    mp.write_text(out)
    code, out = call("--json", "phi", "forward", str(mp), "--nu", "3,2,1")
    assert code == 0 and json.loads(out) == F.to_json()
    assert call("bz", "check", str(mp), "--la", "2,1,0", "--mu", "2,1,0", "--nu", "3,2,1")[0] == 0


def test_verification_failure_exit_code(tmp_path):
    bad = enumerate_hives((1, 0), (1, 0), (1, 1))[0].to_json()
    bad["values"][4]["v"] += 2
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    code, out = call("hive", "check", str(p))
    assert code == 1 and json.loads(out)["verified"] is False


def test_phi_verify_and_khive():
    assert call("phi", "verify", "--la", "2,1,0", "--mu", "2,1,0", "--nu", "3,2,1")[0] == 0
    code, out = call("--json", "khive", "enumerate", "--w", "1,0", "--w", "1,0", "--w=0,-1", "--w=0,-1")
    assert code == 0 and json.loads(out)["count"] == 2


def test_khive_associate(tmp_path):
    (P,) = enumerate_hives((1, 0), (1, 0), (1, 1))
    (Q,) = enumerate_hives((1, 0), (0, 0), (1, 0))
    pp, qp = tmp_path / "p.json", tmp_path / "q.json"
    pp.write_text(P.dumps())
    qp.write_text(Q.dumps())
    code, out = call("--json", "khive", "associate", "--p", str(pp), "--q", str(qp))
    assert code == 0 and set(json.loads(out)) == {"R", "S"}


def test_eval_commands(tmp_path):
    g = tmp_path / "g.json"
    g.write_text(LaurentMatrix.diag_t((3, 1)).dumps())
    assert call("eval", "dgamma", "--matrix", str(g), "--gamma", "1") == (0, "3\n")
    assert call("eval", "h", "--matrix", str(g), "--matrix", str(g), "--sizes", "1,1") == (0, "4\n")
    assert call("eval", "speyer", "--matrix", str(g), "--matrix", str(g), "--matrix", str(g),
                "--ijk", "2,0,0") == (0, "4\n")
    assert call("eval", "dgamma", "--matrix", str(g), "--gamma", "3")[0] == 2


def test_plucker_sweep_deterministic():
    a = call("--json", "--seed", "7", "eval", "plucker-sweep", "--count", "15")
    b = call("--json", "--seed", "7", "eval", "plucker-sweep", "--count", "15")
    assert a == b and a[0] == 0


def test_sweep_verify_all_small_is_byte_identical():
    a = call("--json", "sweep", "verify-all", "--n-max", "2", "--bound", "1")
    b = call("--json", "sweep", "verify-all", "--n-max", "2", "--bound", "1")
    assert a == b and a[0] == 0
    report = json.loads(a[1])
    assert report["passed"] and len(report["criteria"]) == 9
    assert {"key", "passed", "checked", "detail", "counterexample"} <= set(report["criteria"][0])
