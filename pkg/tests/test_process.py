import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats

from inar1 import innovations as inn
from inar1 import marginal as mg
from inar1 import process
from inar1.errors import DomainError
from inar1.innovations import Bernoulli, Binomial
from inar1.marginal import StationaryModel
from inar1.presets import PRESETS, family_grid
from inar1.validation import batch_means_se

FAST = [m for fam in ("bernoulli", "binomial", "poissonian_binomial") for m in family_grid(fam)]


def brute_transition(model, l, k):
    """P(k | l) by summing over survivors with scipy pmfs."""
    f = inn.pmf(model.innovation, 1e-16)
    return math.fsum(stats.binom.pmf(j, l, model.alpha) * f[k - j] for j in range(min(l, k) + 1))


# --------------------------------------------------------------------------
# transition probabilities


def test_bernoulli_transition_examples():
    p, a = 0.3, 0.6
    m = StationaryModel(Bernoulli(p), a)
    for l in range(10):
        assert process.transition_prob(m, l, l + 1) == pytest.approx(p * a**l, rel=1e-14)
        for k in range(l + 2, l + 6):
            assert process.transition_prob(m, l, k) == 0.0


@pytest.mark.parametrize("model", list(PRESETS.values()), ids=list(PRESETS))
def test_row_zero_is_innovation_pmf(model):
    row = process.transition_row(model, 0, 1e-12).probs
    f = inn.pmf(model.innovation, 1e-12)
    n = max(len(row), len(f))
    # identical up to where each was cut (both drop a tail of mass <= tol)
    assert np.abs(row.padded(n) - f.padded(n)).max() <= 1e-12


@pytest.mark.parametrize("model", FAST, ids=str)
def test_fast_paths_equal_generic(model):
    fast = process.transition_matrix(model, 21, "auto")
    generic = process.transition_matrix(model, 21, "generic")
    assert np.abs(fast - generic).max() < 1e-12


@pytest.mark.parametrize("model", FAST[::3] + [PRESETS["heine"], PRESETS["logarithmic"]], ids=str)
def test_generic_against_scipy(model):
    for l in (0, 3, 12):
        for k in (0, 1, 4, 15):
            assert process.transition_prob(model, l, k, "generic") == pytest.approx(brute_transition(model, l, k), abs=1e-15)


@pytest.mark.parametrize("model", list(PRESETS.values()), ids=list(PRESETS))
def test_rows_sum_to_one(model):
    for l in range(0, 21, 4):
        row = process.transition_row(model, l, 1e-12)
        assert row.probs.total() + row.probs.tail_bound == pytest.approx(1.0, abs=1e-9)
        assert row.probs.total() == pytest.approx(1.0, abs=1e-9)


def test_transition_validation():
    m = PRESETS["bernoulli"]
    with pytest.raises(DomainError):
        process.transition_prob(m, -1, 0)
    with pytest.raises(DomainError):
        process.transition_prob(m, 0, 0, method="fast")


def test_stationary_law_is_invariant():
    # marginal @ P = marginal, on a support large enough to hold the mass
    model = StationaryModel(Binomial(2, 0.3), 0.7)
    pi = mg.marginal_pmf(model, 1e-14).pmf.padded(40)
    P = process.transition_matrix(model, 40)
    assert np.abs(pi @ P - pi).max() < 1e-12


# --------------------------------------------------------------------------
# k-step laws


@pytest.mark.parametrize("model", list(PRESETS.values()), ids=list(PRESETS))
def test_one_step_law_is_transition_row(model):
    for x in (0, 2, 6):
        a = process.k_step_conditional(model, x, 1, 1e-12)
        b = process.transition_row(model, x, 1e-12).probs
        n = max(len(a), len(b))
        assert np.abs(a.padded(n) - b.padded(n)).max() < 1e-10


@pytest.mark.parametrize("model", [PRESETS["bernoulli"], PRESETS["heine"], PRESETS["poisson_logarithmic"]], ids=str)
def test_chapman_kolmogorov(model):
    for x in (0, 3):
        two = process.k_step_conditional(model, x, 2, 1e-13)
        first = process.transition_row(model, x, 1e-14).probs
        ck = np.zeros(80)
        for l, w in enumerate(first.probs):
            row = process.transition_row(model, l, 1e-14).probs
            ck[: len(row)] += w * row.probs[:80]
        assert np.abs(two.padded(80) - ck).max() < 1e-8


def test_k_step_bernoulli_structure():
    # Binomial(x, alpha^k) convolved with prod_{i<k} Bernoulli(p alpha^i): explicit product
    p, a, x, k = 0.4, 0.6, 5, 4
    model = StationaryModel(Bernoulli(p), a)
    out = stats.binom.pmf(np.arange(x + 1), x, a**k)
    for i in range(k):
        out = np.convolve(out, [1 - p * a**i, p * a**i])
    got = process.k_step_conditional(model, x, k, 1e-14)
    assert np.abs(got.padded(out.size) - out).max() < 1e-14


@pytest.mark.parametrize("model", family_grid("bernoulli"), ids=str)
def test_k_step_converges_to_marginal(model):
    k = math.ceil(math.log(0.001) / math.log(model.alpha))
    law = process.k_step_conditional(model, 10, min(k, process.MAX_K_STEP), 1e-12)
    target = mg.marginal_pmf(model, 1e-12).pmf
    n = max(len(law), len(target))
    assert 0.5 * np.abs(law.padded(n) - target.padded(n)).sum() < 0.01


def test_k_step_validation():
    m = PRESETS["bernoulli"]
    with pytest.raises(DomainError):
        process.k_step_conditional(m, 0, 0)
    with pytest.raises(DomainError):
        process.k_step_conditional(m, 0, process.MAX_K_STEP + 1)
    with pytest.raises(DomainError):
        process.k_step_conditional(m, -2, 1)


@given(st.integers(0, 15), st.integers(1, 12), st.floats(0.05, 0.95), st.floats(0.05, 0.95))
def test_k_step_mean(x, k, p, a):
    # E[X_{t+k} | X_t = x] = alpha^k x + mu_eps (1 - alpha^k) / (1 - alpha)
    model = StationaryModel(Bernoulli(p), a)
    law = process.k_step_conditional(model, x, k, 1e-12)
    assert law.mean() == pytest.approx(a**k * x + p * (1 - a**k) / (1 - a), abs=1e-9)


# --------------------------------------------------------------------------
# simulation


def test_parse_init():
    assert process.parse_init("stationary") == "stationary"
    assert process.parse_init("fixed:7") == 7
    assert process.parse_init(3) == 3
    for bad in ("fixed:-1", "fixed:x", "random", -1, True):
        with pytest.raises(DomainError):
            process.parse_init(bad)


def test_simulation_is_deterministic():
    m = PRESETS["heine"]
    a = process.simulate(m, 5000, seed=123)
    b = process.simulate(m, 5000, seed=123)
    c = process.simulate(m, 5000, seed=124)
    assert np.array_equal(a.values, b.values)
    assert not np.array_equal(a.values, c.values)
    assert len(a) == 5000 and a.seed == 123 and a.init == "stationary"


def test_fixed_zero_start_first_value_is_innovation():
    m = PRESETS["logarithmic"]
    path = process.simulate(m, 10, seed=3, init="fixed:0")
    # with X_0 = 0 the thinned part is empty; replay the innovation draw
    rng = np.random.default_rng(3)
    eps = inn.sample(m.innovation, rng, 10)
    assert path.values[0] == eps[0]
    assert (path.values >= 0).all()


def test_zero_state_has_no_survivors():
    # Bernoulli innovations from X_0 = 0: X_t <= t
    path = process.simulate(PRESETS["bernoulli"], 200, seed=0, init=0)
    assert all(x <= t + 1 for t, x in enumerate(path.values))


def test_bernoulli_simulation_moments_and_acf():
    model = PRESETS["bernoulli"]
    x = process.simulate(model, 1_000_000, seed=2024).values.astype(float)
    assert abs(x.mean() - 0.4) < 4 * batch_means_se(x)
    # lag-1 autocorrelation ~ alpha; batch-means SE of the lag products
    xc = x - x.mean()
    prod = xc[1:] * xc[:-1] / x.var()
    acf1 = prod.mean()
    assert abs(acf1 - model.alpha) < 4 * batch_means_se(prod)


def test_simulate_validation():
    with pytest.raises(DomainError):
        process.simulate(PRESETS["bernoulli"], 0, seed=1)


def test_simulation_speed():
    import time

    t0 = time.perf_counter()
    process.simulate(PRESETS["bernoulli"], 1_000_000, seed=1)
    assert time.perf_counter() - t0 < 10.0
