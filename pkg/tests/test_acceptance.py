"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s -v`` to see the summary lines.
Tolerances are pinned here; they are not parameters.
"""

import time
from itertools import product

import pytest

from inar1 import validation as va
from inar1.cli import main
from inar1.innovations import Bernoulli, Binomial, Logarithmic
from inar1.marginal import StationaryModel
from inar1.presets import ALPHA_GRID, FAMILIES, P_GRID, PRESETS, family_grid

pytestmark = pytest.mark.acceptance

# collected verdict lines, repeated in the terminal summary by conftest.py
SUMMARY: list[str] = []


def verdict(n, what, reports, extra=""):
    failed = [r for r in reports if not r.passed]
    worst = max((r.max_abs_error / r.tolerance if r.tolerance else r.max_abs_error for r in reports), default=0.0)
    status = "PASS" if not failed and reports else "FAIL"
    line = f"{status} criterion {n}: {what} ({len(reports)} checks, worst error/tolerance {worst:.3g}{extra})"
    print("\n" + line)
    SUMMARY.append(line)
    for r in failed[:5]:
        print(f"    failed: {r.name}: {r.max_abs_error:.3e} > {r.tolerance:.1e}")
    return not failed and bool(reports)


def test_criterion_01_functional_equation():
    t0 = time.perf_counter()
    reports = [va.functional_equation_residual(m, va.Z_GRID, 1e-8) for f in FAMILIES for m in family_grid(f)]
    elapsed = time.perf_counter() - t0
    ok = verdict(1, "functional-equation residual < 1e-8, six families, preset grid", reports, f", {elapsed:.1f} s")
    assert ok and elapsed < 30


def test_criterion_02_bernoulli_series_and_tail():
    reports = []
    for p, a in product(P_GRID, ALPHA_GRID):
        reports.append(va.bernoulli_oracle_check(p, a, depth=40, rmax=15, tol=1e-8))
        reports.append(va.bernoulli_tail_check(p, a, rmax=15, tol=1e-10))
    assert verdict(2, "Bernoulli pmf vs convolution oracle < 1e-8 (r <= 15), tail < 1e-10", reports)


def test_criterion_03_family_constructions():
    reports = [
        va.closed_form_vs_oracle(m, 1e-8)
        for f in ("binomial", "poissonian_binomial", "heine", "logarithmic")
        for m in family_grid(f)
    ]
    assert verdict(3, "binomial / Poissonian binomial / Heine / logarithmic vs oracle < 1e-8", reports)


def test_criterion_04_moment_pipeline():
    reports = []
    for p, a in product(P_GRID, ALPHA_GRID):
        reports.append(va.bernoulli_cumulant_display_check(p, a, tol=1e-10))
        reports.append(va.factorial_moment_check(StationaryModel(Bernoulli(p), a), R=5, tol=1e-8))
    assert verdict(4, "Bernoulli cumulants 2-4 < 1e-10, factorial moments r <= 5 relative < 1e-8", reports)


def test_criterion_05_mean_variance_transfer():
    models = [m for f in FAMILIES for m in family_grid(f)]
    models += [StationaryModel(Logarithmic(p), a) for p, a in product(va.LOG_DISPERSION_P, ALPHA_GRID)]
    models += [PRESETS[n] for n in ("poisson_logarithmic", "pl1", "plm", "poisson_heine")]
    reports = [va.moment_transfer_check(m, tol=1e-7) for m in models]
    assert verdict(5, "pmf mean/variance vs transfer formulas, relative < 1e-7", reports)


def test_criterion_06_underdispersion_equivalence():
    models = [m for f in FAMILIES for m in family_grid(f)]
    models += [StationaryModel(Logarithmic(p), a) for p, a in product((0.55, 0.7), ALPHA_GRID)]
    reports = [va.dispersion_equivalence_check(m) for m in models]
    di = {r.name: dict(r.details)["innovation"] for r in reports if "logarithmic" in r.name.lower()}
    assert verdict(6, "marginal underdispersed iff innovation is (incl. logarithmic p = 0.55, 0.7)", reports)
    # both sides of the logarithmic threshold are actually exercised
    assert any(v < 1 for v in di.values()) and any(v > 1 for v in di.values())


def test_criterion_07_pcpd():
    reports = []
    for p, m, a in product((0.15, 0.3), (1, 3), ALPHA_GRID):
        spec = Bernoulli(p) if m == 1 else Binomial(m, p)
        reports += va.pcpd_check(StationaryModel(spec, a), zs=(0.0, 0.5))
    assert verdict(7, "PCPD weights sum 1 +- 1e-9, pgf < 1e-8 at z in {0, 0.5}", reports)


def test_criterion_08_transitions():
    models = [m for f in ("bernoulli", "binomial", "poissonian_binomial") for m in family_grid(f)]
    models += [PRESETS[n] for n in ("heine", "logarithmic", "poisson", "plm")]
    reports = [r for m in models for r in va.transition_checks(m, size=21)]
    assert verdict(8, "fast kernels vs generic < 1e-12 (l, k <= 20), rows 1 +- 1e-9, 2-step CK < 1e-8", reports)


def test_criterion_09_monte_carlo():
    t0 = time.perf_counter()
    reports = [
        va.monte_carlo_check(model, T=1_000_000, seeds=(seed,), name=name)
        for seed, (name, model) in enumerate(PRESETS.items())
    ]
    elapsed = time.perf_counter() - t0
    ok = verdict(9, "T = 1e6 paths: mean/variance within 4 SE, TV < 0.01, every preset", reports, f", {elapsed:.1f} s")
    assert ok and elapsed < 60


def test_criterion_10_combinatorial_identities():
    reports = [va.subset_sum_identity_check(n, a, seed=n) for n, a in product(range(2, 9), ALPHA_GRID)]
    reports += [va.poissonian_binomial_pgf_identity(m, q, c) for m, q, c in product(range(1, 9), (0.4, 0.7), P_GRID)]
    assert verdict(10, "subset-sum identities n <= 8 and Poissonian binomial triple identity m <= 8, < 1e-12", reports)


def test_criterion_11_determinism_and_validation(tmp_path, capsys):
    same, codes = True, []
    for name in ("heine", "poissonian_binomial"):
        a, b = tmp_path / f"{name}_a.csv", tmp_path / f"{name}_b.csv"
        for path in (a, b):
            codes.append(main(["simulate", "--preset", name, "--steps", "10000", "--seed", "42", "--out", str(path)]))
        same = same and a.read_bytes() == b.read_bytes()
    report_file = tmp_path / "validate.jsonl"
    code = main(["validate", "--suite", "all", "--out", str(report_file)])
    capsys.readouterr()
    n = len(report_file.read_text().splitlines())
    ok = same and codes == [0, 0, 0, 0] and code == 0
    line = f"{'PASS' if ok else 'FAIL'} criterion 11: simulate byte-identical across runs, validate --suite all exit code {code} ({n} reports)"
    SUMMARY.append(line)
    with capsys.disabled():
        print("\n" + line)
    assert ok
