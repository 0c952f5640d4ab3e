import json
import math

import numpy as np
import pytest

from inar1 import marginal as mg
from inar1 import validation as v
from inar1.errors import DomainError
from inar1.innovations import Bernoulli, Binomial, Heine, Logarithmic, Poisson
from inar1.marginal import StationaryModel
from inar1.pmf import DiscretePmf


def test_report_invariant():
    r = v.CheckReport("x", 1e-9, 1e-8, [(0.5, 1e-9)])
    assert r.passed
    assert not v.CheckReport("x", 2e-8, 1e-8).passed
    assert not v.CheckReport("x", math.nan, 1.0).passed
    line = json.loads(r.to_json())
    assert line == {"name": "x", "max_abs_error": 1e-9, "tolerance": 1e-8, "passed": True, "details": [[0.5, 1e-9]]}


def test_functional_equation_examples():
    for model in (StationaryModel(Heine(1.0, 0.5), 0.9), StationaryModel(Logarithmic(0.7), 0.6)):
        assert v.functional_equation_residual(model, v.Z_GRID, 1e-8).passed
    rep = v.functional_equation_residual(StationaryModel(Bernoulli(0.3), 0.5), [1.0], 1e-8)
    assert rep.max_abs_error == 0.0
    poisson = StationaryModel(Poisson(1.5), 0.7)
    assert v.functional_equation_residual(poisson, v.Z_GRID, 1e-10).max_abs_error < 1e-10
    # the analytic Poisson marginal satisfies the equation exactly
    lam, a = 1.5, 0.7
    phi = lambda z: math.exp(lam * (z - 1) / (1 - a))
    assert max(abs(phi(z) - phi(1 - a + a * z) * math.exp(lam * (z - 1))) for z in v.Z_GRID) < 1e-15
    with pytest.raises(DomainError):
        v.functional_equation_residual(poisson, [1.5])


def test_oracle_marginal_examples():
    model = StationaryModel(Bernoulli(0.2), 0.5)
    oracle = v.oracle_marginal(model, 40, 1e-15)
    series, _ = mg.bernoulli_series_probs(0.2, 0.5)
    assert max(abs(oracle[r] - series[r]) for r in range(16)) < 1e-8
    with pytest.raises(DomainError):
        v.oracle_marginal(model, 0)


@pytest.mark.parametrize("model", [StationaryModel(Heine(1.0, 0.5), 0.5), StationaryModel(Logarithmic(0.4), 0.7)], ids=str)
def test_oracle_depth_increments(model):
    mu = model.innovation.mean
    for d in (3, 8, 15):
        lo = v.oracle_marginal(model, d, 1e-15).mean()
        hi = v.oracle_marginal(model, d + 1, 1e-15).mean()
        assert hi - lo <= mu * model.alpha**d * (1 + 1e-8)
        assert hi - lo == pytest.approx(mu * model.alpha**d, rel=1e-6)


def test_heine_oracle_matches_limit_construction():
    assert v.closed_form_vs_oracle(StationaryModel(Heine(1.0, 0.5), 0.5)).passed


def test_factorial_moment_oracle_examples():
    zero = v.factorial_moment_oracle(DiscretePmf([1.0]), 4)
    assert zero.as_array().tolist() == [0.0] * 4
    d = mg.marginal_pmf(StationaryModel(Bernoulli(0.2), 0.5), 1e-15).pmf
    assert v.factorial_moment_oracle(d, 2)[2] == pytest.approx(0.106667, abs=1e-6)
    model = StationaryModel(Binomial(2, 0.3), 0.4)
    fm = v.factorial_moment_oracle(mg.marginal_pmf(model, 1e-30).pmf, 5)
    closed = mg.closed_form_factorial_moments(model, 5)
    assert np.allclose(fm.as_array(), closed.as_array(), rtol=1e-8, atol=0)
    with pytest.raises(DomainError):
        v.factorial_moment_oracle(d, 0)


def test_subset_sum_examples():
    rep = v.subset_sum_identity_check(5, 0.5)
    assert rep.passed and rep.max_abs_error < 1e-12
    names = [x for x, _ in rep.details]
    assert names[0] == "product_expansion" and "k=1" in names and "k=5" in names
    for n in (2, 12):
        assert v.subset_sum_identity_check(n, 0.9).passed
    with pytest.raises(DomainError):
        v.subset_sum_identity_check(13, 0.5)
    with pytest.raises(DomainError):
        v.subset_sum_identity_check(1, 0.5)


def test_subset_sum_trivial_cases():
    # k = 1 is a geometric sum and k = n forces j_l = l - 1
    n, a = 6, 0.3
    from itertools import combinations

    assert math.fsum(a ** sum(c) for c in combinations(range(n), 1)) == pytest.approx((1 - a**n) / (1 - a))
    assert math.fsum(a ** sum(c) for c in combinations(range(n), n)) == pytest.approx(a ** math.comb(n, 2))


def test_poissonian_binomial_identity_examples():
    rep = v.poissonian_binomial_pgf_identity(1, 0.5, 0.3)
    assert rep.passed
    assert v.poissonian_binomial_pgf_identity(3, 0.5, 0.4).max_abs_error < 1e-12
    rep = v.poissonian_binomial_pgf_identity(12, 0.9, 0.95)
    assert rep.passed
    assert dict(rep.details)["normalization"] < 1e-12
    with pytest.raises(DomainError):
        v.poissonian_binomial_pgf_identity(13, 0.5, 0.5)


def test_log_mixture_identity():
    for k in (1, 2, 3, 6):
        assert v.log_mixture_identity_check(0.5, 0.6, k).passed


def test_thinned_cumulant_sum():
    for model in (StationaryModel(Logarithmic(0.6), 0.5), StationaryModel(Poisson(2.0), 0.3), StationaryModel(Heine(1.0, 0.5), 0.8)):
        assert v.thinned_cumulant_sum_check(model).passed


def test_monte_carlo_examples():
    rep = v.monte_carlo_check(StationaryModel(Bernoulli(0.2), 0.5), 1_000_000, seeds=(7,))
    d = dict(rep.details)
    assert rep.passed
    assert d["mean_analytic"] == pytest.approx(0.4)
    assert d["variance_analytic"] == pytest.approx(0.346667, abs=1e-6)
    assert d["dispersion_estimate"] < 1
    rep = v.monte_carlo_check(StationaryModel(Heine(1.0, 0.5), 0.5), 1_000_000, seeds=(8,))
    assert rep.passed and dict(rep.details)["mean_analytic"] == pytest.approx(2.5290, abs=1e-4)
    with pytest.raises(DomainError):
        v.monte_carlo_check(StationaryModel(Bernoulli(0.2), 0.5), 1000)


def test_monte_carlo_pools_seeds_deterministically():
    m = StationaryModel(Poisson(1.0), 0.5)
    a = v.monte_carlo_check(m, 100_000, seeds=(1, 2))
    b = v.monte_carlo_check(m, 100_000, seeds=(1, 2))
    assert a.to_json() == b.to_json()


def test_monte_carlo_detects_a_wrong_model():
    # simulate one model, compare with another: the check must fail
    right = StationaryModel(Bernoulli(0.2), 0.5)
    wrong = StationaryModel(Bernoulli(0.21), 0.5)
    import inar1.validation as val

    original = val.process.simulate
    try:
        val.process.simulate = lambda model, T, seed=None: original(wrong, T, seed=seed)
        assert not val.monte_carlo_check(right, 1_000_000, seeds=(0,)).passed
    finally:
        val.process.simulate = original


def test_checks_catch_a_broken_closed_form(monkeypatch):
    # perturb the Bernoulli series: oracle comparisons must flag it
    good = mg.bernoulli_series_probs

    def broken(p, alpha):
        probs, err = good(p, alpha)
        probs[1] += 1e-7
        return probs, err

    monkeypatch.setattr(mg, "bernoulli_series_probs", broken)
    assert not v.bernoulli_oracle_check(0.2, 0.5).passed


def test_run_suite_validation():
    with pytest.raises(DomainError):
        list(v.run_suite("nope"))
    with pytest.raises(DomainError):
        list(v.run_suite("lemma2", tol=1e-3))
    reports = list(v.run_suite("lemma2"))
    assert reports and all(r.passed for r in reports)
