"""Acceptance criteria, one test per numbered criterion, all tolerances exact.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to see them
live).  Criterion 6 is asserted literally as stated; its weight-3 dimension
formula conflicts with the exact oracle on curves carrying a non-Gorenstein
branch (the products module is strictly smaller than an invertible cube
there), so that test reports the failing cases instead of hiding them; the
accompanying value-route check confirms the oracle independently.
"""

import time

from maxnoether.cli import main
from maxnoether.suites import SuiteParams, run_suite


def _announce(name, ok, elapsed, extra=""):
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({elapsed:.1f}s)" + (f" {extra}" if extra else "")
    print(f"ACCEPTANCE {name}: {verdict}{suffix}")


def _failures(reports):
    return [r for r in reports if not r.passed]


def test_criterion_1_dualizing_oracle_census():
    t0 = time.perf_counter()
    reports = run_suite("eq4-oracle", SuiteParams(max_genus=8))
    elapsed = time.perf_counter() - t0
    census = [r for r in reports if r.check == "semigroup-census"]
    ok = not _failures(reports) and census[0].predicted == 156 and elapsed < 10.0
    _announce("1 dualizing-values residue oracle (g<=8, 156 semigroups)", ok, elapsed)
    assert census[0].predicted == census[0].oracle == 156
    assert not _failures(reports)
    assert elapsed < 10.0


def test_criterion_2_max_noether_single_singularity():
    t0 = time.perf_counter()
    reports = run_suite("noether-single", SuiteParams(max_genus=8, max_n=4))
    elapsed = time.perf_counter() - t0
    bad = _failures(reports)
    ok = not bad and elapsed < 120.0
    _announce("2 Max Noether, single singularity (g in [2,8], mult>=3, n=2..4)", ok, elapsed)
    assert not bad, [r.input for r in bad[:5]]
    assert elapsed < 120.0


def test_criterion_3_hyperelliptic_necessity():
    t0 = time.perf_counter()
    reports = run_suite("hyperelliptic-negative", SuiteParams())
    elapsed = time.perf_counter() - t0
    bad = _failures(reports)
    gaps = [r.oracle["dimension_gap"] for r in reports]
    ok = not bad and gaps == [1, 2, 3]
    _announce("3 hyperelliptic necessity (mult-2 family fails by g-2)", ok, elapsed)
    assert gaps == [1, 2, 3]
    k3 = next(r for r in reports if r.check.endswith("k3"))
    assert k3.witness == {"missing_values": [7]}
    assert not bad


def test_criterion_4_local_covering_combinatorics():
    t0 = time.perf_counter()
    reports = run_suite("local-lemma", SuiteParams(max_genus=10, max_n=4))
    elapsed = time.perf_counter() - t0
    bad = _failures(reports)
    ok = not bad and elapsed < 30.0
    _announce("4 local covering combinatorics (non-symmetric, g<=10, n<=4)", ok, elapsed)
    assert not bad, [r.check for r in bad[:5]]
    assert elapsed < 30.0


def test_criterion_5_blowup_claims():
    t0 = time.perf_counter()
    reports = run_suite("blowup", SuiteParams(max_genus=10))
    elapsed = time.perf_counter() - t0
    bad = _failures(reports)
    ok = not bad and elapsed < 30.0
    _announce("5 blowup stabilization and almost-Gorenstein equivalences (g<=10)", ok, elapsed)
    assert not bad, [r.check for r in bad[:5]]
    assert elapsed < 30.0


def test_criterion_6_dimension_formulas():
    t0 = time.perf_counter()
    reports = run_suite("dims", SuiteParams(max_n=3))
    elapsed = time.perf_counter() - t0
    literal = [r for r in reports if not r.check.startswith("sections-dim-value-route")]
    value_route = [r for r in reports if r.check.startswith("sections-dim-value-route")]
    bad = _failures(literal)
    ok = not bad
    extra = f"[value-route cross-check: {len(value_route) - len(_failures(value_route))}/{len(value_route)} ok]"
    _announce("6 dimension formulas over the mixed corpus (n=1,2,3)", ok, elapsed, extra)
    # the independent value-route count always matches the oracle
    assert not _failures(value_route)
    # literal criterion: dim H0 = genus at n=1 and (2n-1)(g-1) at n=2,3
    assert not bad, (
        "(2n-1)(g-1) does not match the exact oracle at n=3 on curves with a "
        "non-Gorenstein branch: "
        + "; ".join(
            f"{r.input['branches']} n-formula {r.predicted} vs oracle {r.oracle}"
            for r in bad[:4]
        )
    )


def test_criterion_7_resolution_quotients():
    t0 = time.perf_counter()
    reports = run_suite("resolution", SuiteParams(max_n=3))
    elapsed = time.perf_counter() - t0
    quotient = [r for r in reports if r.check.startswith("resolution-quotient")]
    bad = _failures(quotient)
    ok = not bad and len(quotient) == 8
    _announce("7 resolution quotient surjectivity (two 2-branch curves, n=2,3)", ok, elapsed)
    assert len(quotient) == 8
    assert not bad


def test_criterion_8_hyperelliptic_resolution():
    t0 = time.perf_counter()
    reports = run_suite("resolution", SuiteParams(max_n=3))
    elapsed = time.perf_counter() - t0
    hyper = [r for r in reports if r.check.startswith("hyperelliptic-resolution")]
    noether = [r for r in reports if r.check.startswith("max-noether-with-gorenstein-cusp")]
    bad = _failures(hyper) + _failures(noether)
    ok = not bad and len(hyper) == 2 and len(noether) == 2
    _announce("8 hyperelliptic resolved curve and cusp-curve Max Noether (n=2,3)", ok, elapsed)
    assert len(hyper) == 2 and len(noether) == 2
    assert not bad


def test_criterion_9_corpus_determinism(tmp_path):
    t0 = time.perf_counter()
    paths = [tmp_path / "run1.jsonl", tmp_path / "run2.jsonl"]
    for path in paths:
        code = main(
            [
                "verify",
                "corpus",
                "--suite",
                "blowup",
                "--max-genus",
                "7",
                "--out",
                str(path),
            ]
        )
        assert code == 0
    identical = paths[0].read_bytes() == paths[1].read_bytes()
    elapsed = time.perf_counter() - t0
    _announce("9 byte-identical corpus reruns", identical, elapsed)
    assert identical
