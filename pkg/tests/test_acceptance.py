"""Acceptance criteria 1-12, each at its stated parameters and tolerance.

Every criterion prints one PASS/FAIL line (collected again in the terminal
summary).  Run directly with ``python tests/test_acceptance.py`` for the
lines alone.
"""
import os
import subprocess
import sys
import time

import pytest

from quiverqg import suites
from quiverqg.freealg import FreeElem
from quiverqg.quiver import preset
from quiverqg.scalars import Scalar
from quiverqg.session import Session

ALL = ["real", "A2", "jordan", "two-loop", "three-loop", "A2-mixed"]
RESULTS = []


def _report(num, title, records, elapsed, budget):
    failed = [r for r in records if r["result"] != "pass"]
    ok = bool(records) and not failed and elapsed < budget
    line = (f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}: "
            f"{len(records)} checks, {len(failed)} failed, {elapsed:.1f}s (target < {budget:g}s)")
    RESULTS.append(line)
    print(line)
    assert records, "no checks were run"
    assert not failed, failed[:3]
    assert elapsed < budget


def _run(num, title, budget, fn):
    t0 = time.perf_counter()
    records = fn()
    _report(num, title, records, time.perf_counter() - t0, budget)


def _session(name, h=4, **kw):
    return Session(preset(name), max_height=h, **kw)


def test_criterion_01_modulo():
    def go():
        out = []
        for name in ALL:
            out += suites.suite_modulo(_session(name, 5), max_len=5, draws=3)
        return out
    _run(1, "pairing of E_(i,|c|) with E_(i,c)", 30, go)


def test_criterion_02_nondegeneracy():
    def go():
        out = []
        for name in ("two-loop", "three-loop"):
            out += suites.suite_nondeg(_session(name, 5, series_order=20),
                                       max_len=4, max_rank_level=5)
        # rank checks must reach level 5 on both vertices
        assert sum(r["check"] == "nondeg-rank" for r in out) == 10
        return out
    _run(2, "series window and rank 2^(l-1)", 120, go)


def test_criterion_03_jordan_dims():
    def go():
        s = _session("jordan", 6)
        out = suites.suite_dims(s, max_level=6)
        dims = [s.pairing.graded_dim((l,)) for l in range(1, 7)]
        out.append(suites.record("jordan-partition-numbers", {}, dims == [1, 2, 3, 5, 7, 11],
                                 {"dims": dims}))
        return out
    _run(3, "Jordan graded dimensions p(l)", 60, go)


def test_criterion_04_radical():
    def go():
        out = []
        for name in ("A2", "A2-mixed"):
            out += suites.suite_serre(_session(name, 5), max_height=5, draws=5)
        out += suites.suite_iso_commutators(_session("jordan", 6), max_height=6, draws=5)
        return out
    _run(4, "Serre elements and isotropic commutators in the radical", 120, go)


def test_criterion_05_primitive():
    def go():
        out = []
        for name in ALL:
            out += suites.suite_primitive(_session(name, 4), max_level=4)
        assert any(r["check"] == "primitive-isotropic-value" for r in out)
        s = _session("jordan", 4)
        p = s.uplus.primitive(0, 2)
        half = Scalar.coerce(1) / 2
        exact = (p.representative == FreeElem.gen((0, 2)) - FreeElem.word(((0, 1), (0, 1)), half)
                 and p.tau == half)
        out.append(suites.record("jordan-a2-exact", {}, exact))
        return out
    _run(5, "primitive elements a_(i,l), l <= 4", 60, go)


def test_criterion_06_delta():
    def go():
        out = []
        for name in ALL:
            out += suites.suite_delta(_session(name, 4), max_level=3, samples=10, max_height=4)
        return out
    _run(6, "delta-component identities", 120, go)


def test_criterion_07_double():
    def go():
        out = []
        for name in ALL:
            out += suites.suite_double(_session(name, 5), gen_height=5, samples=20,
                                       sample_height=3)
        return out
    _run(7, "Drinfeld double relation and rank-one rule", 120, go)


def test_criterion_08_hopf():
    def go():
        out = []
        for name in ALL:
            out += suites.suite_hopf(_session(name, 4), gen_height=4, samples=10,
                                     sample_height=3)
        return out
    _run(8, "antipode, skew antipode and coassociativity", 120, go)


def test_criterion_09_theta():
    def go():
        out = []
        for name in ALL:
            s = _session(name, 4)
            p = 4 if s.q.n == 1 else 3
            out += [r for r in suites.suite_theta(s, p) if r["check"] == "theta-intertwine"]
        return out
    _run(9, "quasi-R-matrix intertwining", 300, go)


def test_criterion_10_casimir():
    def go():
        out = []
        for name in ALL:
            out += suites.suite_casimir(_session(name, 4), depth=2, max_level=2)
        assert any(r["check"] == "casimir-stability" for r in out)
        return out
    _run(10, "Casimir identities, highest weight and stability", 300, go)


def test_criterion_11_f_identity():
    def go():
        out = []
        for name in ALL:
            out += suites.suite_f(_session(name, 5), max_level=5, bound=3)
        return out
    _run(11, "quadratic identity for f", 10, go)


def test_criterion_12_determinism():
    def go():
        cmd = [sys.executable, "-m", "quiverqg", "verify-all", "--preset", "A2-mixed",
               "--seed", "7", "--format", "json"]
        runs = [subprocess.run(cmd, capture_output=True, check=False, env=dict(os.environ))
                for _ in range(2)]
        same = runs[0].stdout == runs[1].stdout and runs[0].stdout != b""
        return [suites.record("verify-all-byte-identical", {"preset": "A2-mixed", "seed": 7},
                              same and all(r.returncode == 0 for r in runs))]
    _run(12, "verify-all --seed 7 --format json is byte-identical", 600, go)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
