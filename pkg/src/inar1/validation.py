"""Brute-force oracles and identity checks for the closed-form constructions.

Every check produces a :class:`CheckReport`; ``run_suite`` strings them
together into the named suites exposed by the command line. The oracles are
deliberately naive: explicit-depth convolutions, binomial thinning through a
full kernel matrix, falling-factorial summation and tuple enumeration.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Callable, Iterable, Iterator

import numpy as np
from scipy import stats

from . import innovations as inn
from . import marginal as mg
from . import process
from .combinatorics import (
    MomentVector,
    cumulants_from_moments,
    factorial_cumulants_from_cumulants,
    moments_from_factorial_moments,
)
from .errors import DomainError
from .innovations import Bernoulli, Binomial, Logarithmic, PoissonianBinomial
from .marginal import StationaryModel
from .pmf import DiscretePmf, trim_tail
from .presets import ALPHA_GRID, FAMILIES, M_GRID, P_GRID, PRESETS, Q_GRID, family_grid

__all__ = [
    "CheckReport",
    "Z_GRID",
    "SUITES",
    "functional_equation_residual",
    "oracle_marginal",
    "factorial_moment_oracle",
    "subset_sum_identity_check",
    "poissonian_binomial_pgf_identity",
    "log_mixture_identity_check",
    "monte_carlo_check",
    "closed_form_vs_oracle",
    "bernoulli_tail_check",
    "moment_transfer_check",
    "bernoulli_cumulant_display_check",
    "factorial_moment_check",
    "factorial_cumulant_check",
    "thinned_cumulant_sum_check",
    "dispersion_equivalence_check",
    "pcpd_check",
    "transition_checks",
    "oracle_depth_check",
    "run_suite",
    "batch_means_se",
]

Z_GRID = tuple(round(0.1 * i, 1) for i in range(11))
SUITES = ("all", "functional-eq", "oracles", "lemma2", "monte-carlo")

# extra logarithmic parameters on either side of the dispersion threshold 1 - 1/e
LOG_DISPERSION_P = (0.55, 0.7)


@dataclass
class CheckReport:
    """Outcome of one check; ``passed`` is ``max_abs_error <= tolerance``."""

    name: str
    max_abs_error: float
    tolerance: float
    details: list = field(default_factory=list)
    passed: bool = field(init=False)

    def __post_init__(self):
        self.max_abs_error = float(self.max_abs_error)
        self.tolerance = float(self.tolerance)
        # NaN never passes
        self.passed = bool(self.max_abs_error <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "max_abs_error": self.max_abs_error,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "details": [[_jsonable(x), float(e)] for x, e in self.details],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_errors(cls, name: str, pairs: Iterable[tuple], tolerance: float) -> "CheckReport":
        pairs = [(x, float(e)) for x, e in pairs]
        worst = max((e for _, e in pairs), default=0.0)
        if any(math.isnan(e) for _, e in pairs):
            worst = math.nan
        return cls(name, worst, tolerance, pairs)


def _jsonable(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    return x


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


# --------------------------------------------------------------------------
# oracles


def functional_equation_residual(model: StationaryModel, grid=Z_GRID, tol: float = 1e-8) -> CheckReport:
    """max_z |phi(z) - phi(1 - alpha + alpha z) Psi(z)| with phi from ``marginal_pgf``.

    The product is built ten times finer than ``tol`` so that the residual,
    which is pure truncation error, sits well inside the tolerance.
    """
    build = min(tol, 1e-6) * 0.1
    a = model.alpha
    pairs = []
    for z in grid:
        z = float(z)
        if not 0.0 <= z <= 1.0:
            raise DomainError(f"grid point {z} outside [0, 1]")
        lhs = mg.marginal_pgf(model, z, build)
        rhs = mg.marginal_pgf(model, 1.0 - a + a * z, build) * inn.pgf(model.innovation, z)
        pairs.append((z, abs(lhs - rhs)))
    return CheckReport.from_errors(f"functional_eq[{model.label()}]", pairs, tol)


def _thin_by_kernel(probs: np.ndarray, a: float) -> np.ndarray:
    # sum_n f_n Binomial(n, a)_r, with the kernel laid out explicitly
    n = np.arange(probs.size)
    out = np.zeros(probs.size)
    for k in range(probs.size):
        if probs[k] > 0.0:
            out[: k + 1] += probs[k] * stats.binom.pmf(n[: k + 1], k, a)
    return out


def oracle_marginal(model: StationaryModel, depth: int, tol: float = 1e-12) -> DiscretePmf:
    """Explicit ``depth``-factor convolution f^(0) * ... * f^(depth-1).

    Each f^(i) is obtained by thinning the raw innovation pmf (truncated at
    ``tol``) with a Binomial(n, alpha^i) kernel; no family closed form is
    used and nothing adapts the depth. Only a final tail of mass <= tol is
    trimmed from each partial convolution.
    """
    if depth < 1:
        raise DomainError("depth must be >= 1")
    f = inn.pmf(model.innovation, tol).probs
    out = np.array([1.0])
    for i in range(depth):
        f_i = _thin_by_kernel(f, model.alpha**i)
        out = trim_tail(np.convolve(out, f_i), tol / depth)
    return DiscretePmf(np.clip(out, 0.0, None), origin=f"oracle depth {depth} of {model.label()}")


def factorial_moment_oracle(pmf: DiscretePmf, R: int) -> MomentVector:
    """mu_[r] = sum_k k (k-1) ... (k-r+1) p_k for r = 1..R."""
    if R < 1:
        raise DomainError("R must be >= 1")
    k = np.arange(pmf.K + 1, dtype=float)
    falling = np.ones_like(k)
    vals = []
    for r in range(R):
        falling = falling * (k - r)
        vals.append(math.fsum(falling * pmf.probs))
    return MomentVector("factorial_moments", vals)


def _oracle_for(model: StationaryModel, tol: float) -> DiscretePmf:
    fine = tol * 1e-3
    return oracle_marginal(model, mg.product_depth(model, fine), fine)


def _entrywise(a: np.ndarray, b: np.ndarray) -> tuple[int, float]:
    n = max(a.size, b.size)
    d = np.abs(np.pad(a, (0, n - a.size)) - np.pad(b, (0, n - b.size)))
    k = int(np.argmax(d))
    return k, float(d[k])


def closed_form_vs_oracle(model: StationaryModel, tol: float = 1e-8) -> CheckReport:
    """Family construction from ``marginal_pmf`` against the naive convolution oracle."""
    built = mg.marginal_pmf(model, tol * 1e-3)
    oracle = _oracle_for(model, tol)
    k, err = _entrywise(built.probs, oracle.probs)
    return CheckReport(f"closed_vs_oracle[{built.method}; {model.label()}]", err, tol, [(k, err)])


def generic_vs_oracle(model: StationaryModel, tol: float = 1e-8) -> CheckReport:
    built = mg.marginal_pmf_generic(model, tol * 1e-3)
    oracle = _oracle_for(model, tol)
    k, err = _entrywise(built.probs, oracle.probs)
    return CheckReport(f"generic_vs_oracle[{model.label()}]", err, tol, [(k, err)])


def factorization_check(model: StationaryModel, tol: float = 1e-8) -> CheckReport:
    """Marginal of a convolution innovation equals the convolution of part marginals."""
    a = mg.marginal_pmf(model, tol * 1e-3)
    b = mg.marginal_pmf_generic(model, tol * 1e-3)
    k, err = _entrywise(a.probs, b.probs)
    return CheckReport(f"factorization[{model.label()}]", err, tol, [(k, err)])


def oracle_depth_check(model: StationaryModel, depths=(5, 10, 20)) -> CheckReport:
    """Mean of depth d+1 minus depth d equals Psi'(1) alpha^d (reported relative)."""
    mu = model.innovation.mean
    pairs = []
    for d in depths:
        lo = oracle_marginal(model, d, 1e-15).mean()
        hi = oracle_marginal(model, d + 1, 1e-15).mean()
        bound = mu * model.alpha**d
        pairs.append((d, max(0.0, (hi - lo) - bound) / bound))
    return CheckReport.from_errors(f"oracle_depth[{model.label()}]", pairs, 1e-8)


def bernoulli_tail_check(p: float, alpha: float, rmax: int = 15, tol: float = 1e-10) -> CheckReport:
    probs = mg.marginal_pmf_bernoulli(p, alpha, 1e-15).probs
    pairs = []
    for r in range(1, rmax + 1):
        complement = 1.0 - math.fsum(probs[:r])
        pairs.append((r, abs(mg.tail_bernoulli(p, alpha, r) - complement)))
    return CheckReport.from_errors(f"bernoulli_tail[p={p}, alpha={alpha}]", pairs, tol)


def bernoulli_oracle_check(p: float, alpha: float, depth: int = 40, rmax: int = 15, tol: float = 1e-8) -> CheckReport:
    """The alternating Bernoulli series against the convolution oracle for r <= rmax.

    The oracle depth is ``depth`` or the truncation depth needed for ``tol``,
    whichever is larger: a fixed depth of 40 leaves a truncation error of
    order p alpha^40 / (1 - alpha), which exceeds ``tol`` when alpha is close to one.
    The series is tested directly, without the library's product fallback.
    """
    model = StationaryModel(Bernoulli(p), alpha)
    d = max(depth, mg.product_depth(model, tol * 1e-3))
    oracle = oracle_marginal(model, d, 1e-15)
    series, bound = mg.bernoulli_series_probs(p, alpha)
    pairs = [(r, abs((series[r] if r < series.size else 0.0) - oracle[r])) for r in range(rmax + 1)]
    pairs.append(("rounding_bound", bound))
    return CheckReport.from_errors(f"bernoulli_series_vs_oracle[p={p}, alpha={alpha}, depth={d}]", pairs, tol)


# --------------------------------------------------------------------------
# moments


def moment_transfer_check(model: StationaryModel, tol: float = 1e-7) -> CheckReport:
    """pmf-summed mean/variance of the marginal vs mu/(1-a) and (sigma^2 + a mu)/(1-a^2)."""
    probs = mg.marginal_pmf(model, 1e-14).pmf
    mu, var, _ = inn.mean_var_dispersion(model.innovation)
    a = model.alpha
    pairs = [
        ("mean", _rel(probs.mean(), mu / (1 - a))),
        ("variance", _rel(probs.variance(), (var + a * mu) / (1 - a * a))),
    ]
    return CheckReport.from_errors(f"moment_transfer[{model.label()}]", pairs, tol)


def bernoulli_cumulant_display_check(p: float, alpha: float, tol: float = 1e-10) -> CheckReport:
    """kappa_2..kappa_4 from the moment pipeline against the explicit displays."""
    rep = mg.marginal_moments(StationaryModel(Bernoulli(p), alpha), 4)
    u = [p**r / (1 - alpha**r) for r in range(1, 5)]
    display = {
        1: u[0],
        2: -u[1] + u[0],
        3: 2 * u[2] - 3 * u[1] + u[0],
        4: -6 * u[3] + 12 * u[2] - 7 * u[1] + u[0],
    }
    pairs = [(f"kappa_{r}", abs(rep.cumulants[r] - display[r])) for r in range(1, 5)]
    return CheckReport.from_errors(f"bernoulli_cumulants[p={p}, alpha={alpha}]", pairs, tol)


def factorial_moment_check(model: StationaryModel, R: int = 5, tol: float = 1e-8) -> CheckReport:
    """Closed-form factorial moments vs falling-factorial summation (relative error)."""
    closed = mg.closed_form_factorial_moments(model, R)
    # high orders weigh the far tail by k^R, so the pmf is kept essentially untruncated
    oracle = factorial_moment_oracle(mg.marginal_pmf(model, 1e-30).pmf, R)
    pairs = [(r, _rel(oracle[r], closed[r])) for r in range(1, R + 1)]
    return CheckReport.from_errors(f"factorial_moments[{model.label()}]", pairs, tol)


def factorial_cumulant_check(model: StationaryModel, R: int = 5, tol: float = 1e-8) -> CheckReport:
    """Closed-form factorial cumulants vs the transfer pipeline (relative error)."""
    closed = mg.closed_form_factorial_cumulants(model, R)
    piped = mg.marginal_moments(model, R).factorial_cumulants
    pairs = [(r, _rel(piped[r], closed[r])) for r in range(1, R + 1)]
    return CheckReport.from_errors(f"factorial_cumulants[{model.label()}]", pairs, tol)


def _pmf_factorial_cumulants(probs: DiscretePmf, R: int) -> MomentVector:
    fm = factorial_moment_oracle(probs, R)
    return factorial_cumulants_from_cumulants(cumulants_from_moments(moments_from_factorial_moments(fm)))


def thinned_cumulant_sum_check(model: StationaryModel, R: int = 4, tol: float = 1e-8) -> CheckReport:
    """kappa_[r] of the marginal as the sum over i of kappa_[r] of the thinned pmfs.

    The thinned pmfs come from the kernel-matrix oracle; the sum runs until
    the terms (which scale like alpha^(i r)) fall below 1e-16.
    """
    base = inn.pmf(model.innovation, 1e-16).probs
    target = mg.marginal_moments(model, R).factorial_cumulants
    depth = mg.product_depth(model, 1e-16)
    sums = np.zeros(R)
    for i in range(depth):
        f_i = DiscretePmf(_thin_by_kernel(base, model.alpha**i))
        sums += _pmf_factorial_cumulants(f_i, R).as_array()
    # relative where kappa_[r] is sizeable, absolute where it vanishes (Poisson r >= 2)
    pairs = [(r, abs(sums[r - 1] - target[r]) / max(abs(target[r]), 1.0)) for r in range(1, R + 1)]
    return CheckReport.from_errors(f"thinned_cumulant_sum[{model.label()}]", pairs, tol)


def dispersion_equivalence_check(model: StationaryModel) -> CheckReport:
    """Marginal is underdispersed exactly when the innovation is (error 1 on mismatch)."""
    _, _, di_f = inn.mean_var_dispersion(model.innovation)
    di_p = mg.marginal_moments(model, 2).dispersion_index
    mismatch = (di_f < 1.0) != (di_p < 1.0)
    return CheckReport(
        f"dispersion_equivalence[{model.label()}]",
        1.0 if mismatch else 0.0,
        0.0,
        [("innovation", di_f), ("marginal", di_p)],
    )


def pcpd_check(model: StationaryModel, zs=(0.0, 0.5)) -> list[CheckReport]:
    rep = mg.pcpd_representation(model)
    total = math.fsum(rep.weights)
    out = [CheckReport(f"pcpd_weights[{model.label()}]", abs(total - 1.0), 1e-9, [("sum", total)])]
    pairs = [(z, abs(rep.pgf(z) - mg.marginal_pgf(model, z, 1e-14))) for z in zs]
    out.append(CheckReport.from_errors(f"pcpd_pgf[{model.label()}]", pairs, 1e-8))
    return out


# --------------------------------------------------------------------------
# transitions


def transition_checks(model: StationaryModel, size: int = 21) -> list[CheckReport]:
    """Fast paths vs the generic sum, row sums, and two-step Chapman-Kolmogorov."""
    out = []
    spec = model.innovation
    if isinstance(spec, (Bernoulli, Binomial, PoissonianBinomial)):
        fast = process.transition_matrix(model, size, "auto")
        slow = process.transition_matrix(model, size, "generic")
        d = np.abs(fast - slow)
        l, k = np.unravel_index(int(np.argmax(d)), d.shape)
        out.append(CheckReport(f"transition_fast_vs_generic[{model.label()}]", d[l, k], 1e-12, [((int(l), int(k)), d[l, k])]))

    pairs = [(l, abs(process.transition_row(model, l, 1e-14).probs.total() - 1.0)) for l in range(size)]
    out.append(CheckReport.from_errors(f"transition_row_sums[{model.label()}]", pairs, 1e-9))

    pairs = []
    for x in (0, 1, 3, 7):
        two = process.k_step_conditional(model, x, 2, 1e-14).probs
        first = process.transition_row(model, x, 1e-15).probs.probs
        ck = np.zeros(1)
        for l, w in enumerate(first):
            row = process.transition_row(model, l, 1e-15).probs.probs
            if row.size > ck.size:
                ck = np.pad(ck, (0, row.size - ck.size))
            ck[: row.size] += w * row
        pairs.append((x, _entrywise(two, ck)[1]))
    out.append(CheckReport.from_errors(f"chapman_kolmogorov[{model.label()}]", pairs, 1e-8))
    return out


# --------------------------------------------------------------------------
# combinatorial identities


def subset_sum_identity_check(n: int, alpha: float, seed: int = 0) -> CheckReport:
    """Product expansion over elementary symmetric functions, and the q-binomial tuple sum.

    (1) prod_i (1 - a_i) = 1 + sum_k (-1)^k e_k(a) for random a_i in (0, 1);
    (2) sum over j_1 < ... < j_k in {0..n-1} of alpha^(j_1+...+j_k)
        = alpha^C(k,2) prod_{l<k} (1 - alpha^(n-l)) / (1 - alpha^(l+1)) for every k <= n.
    """
    if not 2 <= n <= 12:
        raise DomainError("n must lie in 2..12")
    rng = np.random.default_rng(seed)
    a = rng.uniform(0.01, 0.99, n)
    lhs = float(np.prod(1.0 - a))
    esum = [(-1) ** k * math.fsum(math.prod(c) for c in combinations(a, k)) for k in range(1, n + 1)]
    pairs = [("product_expansion", abs(lhs - (1.0 + math.fsum(esum))))]
    for k in range(1, n + 1):
        brute = math.fsum(alpha ** sum(c) for c in combinations(range(n), k))
        closed = alpha ** comb(k, 2) * math.prod(
            (1 - alpha ** (n - l)) / (1 - alpha ** (l + 1)) for l in range(k)
        )
        pairs.append((f"k={k}", abs(brute - closed)))
    return CheckReport.from_errors(f"subset_sum[n={n}, alpha={alpha}]", pairs, 1e-12)


def _poly_from_factors(m: int, q: float, c: float) -> np.ndarray:
    # coefficients of prod_j (1 - c q^j + c q^j z), lowest degree first
    coef = np.array([1.0])
    for j in range(m):
        b = c * q**j
        coef = np.convolve(coef, [1.0 - b, b])
    return coef


def _poly_from_finite_sum(m: int, q: float, c: float) -> np.ndarray:
    # 1 + sum_k c^k (z-1)^k q^C(k,2) prod_{l<k} (1 - q^(m-l)) / (1 - q^(l+1)), expanded in z
    coef = np.zeros(m + 1)
    coef[0] = 1.0
    for k in range(1, m + 1):
        w = c**k * q ** comb(k, 2) * math.prod((1 - q ** (m - l)) / (1 - q ** (l + 1)) for l in range(k))
        for r in range(k + 1):
            coef[r] += w * comb(k, r) * (-1) ** (k - r)
    return coef


def poissonian_binomial_pgf_identity(m: int, q: float, c: float, grid=Z_GRID) -> CheckReport:
    """Product pgf, finite q-binomial sum and closed-form pmf describe one law.

    Compares the three pgfs on ``grid`` and the three coefficient vectors
    (pmfs) entrywise; also records |sum of pmf - 1|.
    """
    if not 1 <= m <= 12:
        raise DomainError("m must lie in 1..12")
    pmf = inn.poissonian_binomial_pmf(m, q, c)
    prod_coef = _poly_from_factors(m, q, c)
    sum_coef = _poly_from_finite_sum(m, q, c)
    pairs = []
    for z in grid:
        p_prod = math.prod(1 - c * q**j * (1 - z) for j in range(m))
        p_sum = float(np.polynomial.polynomial.polyval(z, sum_coef))
        p_pmf = float(np.polynomial.polynomial.polyval(z, pmf))
        pairs.append((f"pgf z={z}", max(abs(p_prod - p_sum), abs(p_prod - p_pmf))))
    for r in range(m + 1):
        pairs.append((f"pmf r={r}", max(abs(pmf[r] - prod_coef[r]), abs(pmf[r] - sum_coef[r]))))
    pairs.append(("normalization", abs(math.fsum(pmf) - 1.0)))
    return CheckReport.from_errors(f"po_bin_identity[m={m}, q={q}, c={c}]", pairs, 1e-12)


def log_mixture_identity_check(p: float, alpha: float, k: int, rmax: int = 30) -> CheckReport:
    """f^(0) * ... * f^(k-1) as the finite mixture of logarithmic convolutions.

    The left side thins the logarithmic pmf by kernel matrix; the right side
    enumerates the subsets j of {1..k-1} with weights
    prod_{i not in j} b_i prod_{i in j} (1 - b_i).
    """
    if not 1 <= k <= 10:
        raise DomainError("k must lie in 1..10")
    spec = Logarithmic(p)
    tol = 1e-16
    base = inn.pmf(spec, tol).probs
    lhs = np.array([1.0])
    for i in range(k):
        lhs = np.convolve(lhs, _thin_by_kernel(base, alpha**i))
    qb = [spec.thinning_mixture(alpha**i) for i in range(k)]
    g = [inn.pmf(Logarithmic(qi), tol).probs for qi, _ in qb]
    rhs = np.zeros(1)
    for size in range(k):
        for subset in combinations(range(1, k), size):
            weight = math.prod(qb[i][1] for i in range(1, k) if i not in subset) * math.prod(
                1.0 - qb[i][1] for i in subset
            )
            conv = g[0]
            for i in subset:
                conv = np.convolve(conv, g[i])
            if conv.size > rhs.size:
                rhs = np.pad(rhs, (0, conv.size - rhs.size))
            rhs[: conv.size] += weight * conv
    n = rmax + 1
    lhs, rhs = np.pad(lhs, (0, max(0, n - lhs.size)))[:n], np.pad(rhs, (0, max(0, n - rhs.size)))[:n]
    pairs = [(r, abs(lhs[r] - rhs[r])) for r in range(n)]
    return CheckReport.from_errors(f"log_mixture[p={p}, alpha={alpha}, k={k}]", pairs, 1e-12)


# --------------------------------------------------------------------------
# Monte Carlo


def batch_means_se(x: np.ndarray, n_batches: int = 100) -> float:
    """Standard error of the mean of a correlated series by non-overlapping batch means."""
    x = np.asarray(x, dtype=float)
    b = x.size // n_batches
    means = x[: b * n_batches].reshape(n_batches, b).mean(axis=1)
    return float(means.std(ddof=1) / math.sqrt(n_batches))


def monte_carlo_check(model: StationaryModel, T: int = 1_000_000, seeds=(0,), name: str | None = None) -> CheckReport:
    """Sample mean/variance within 4 batch-means standard errors, and TV distance < 0.01.

    The reported error is normalised so that the tolerance is 1: it is the
    largest of |mean gap| / (4 SE), |variance gap| / (4 SE) and TV / 0.01.
    Pooling over several seeds averages the per-seed statistics.
    """
    if T < 100_000:
        raise DomainError("T must be >= 1e5")
    rep = mg.marginal_moments(model, 2)
    target = mg.marginal_pmf(model, 1e-12).probs
    paths = [process.simulate(model, T, seed=s).values for s in seeds]
    x = np.concatenate(paths).astype(float)
    mean = x.mean()
    dev2 = (x - rep.mean) ** 2
    var = dev2.mean()
    se_mean = math.sqrt(sum(batch_means_se(p) ** 2 for p in paths)) / len(paths)
    se_var = math.sqrt(sum(batch_means_se((p - rep.mean) ** 2) ** 2 for p in paths)) / len(paths)
    counts = np.bincount(x.astype(np.int64))
    emp = counts / x.size
    n = max(emp.size, target.size)
    tv = 0.5 * float(np.abs(np.pad(emp, (0, n - emp.size)) - np.pad(target, (0, n - target.size))).sum())
    details = [
        ("mean", mean),
        ("mean_analytic", rep.mean),
        ("mean_se", se_mean),
        ("variance", var),
        ("variance_analytic", rep.variance),
        ("variance_se", se_var),
        ("tv", tv),
        ("dispersion_estimate", x.var() / mean),
    ]
    score = max(abs(mean - rep.mean) / (4 * se_mean), abs(var - rep.variance) / (4 * se_var), tv / 0.01)
    label = name or model.label()
    return CheckReport(f"monte_carlo[{label}; T={T}; seeds={list(seeds)}]", score, 1.0, details)


def _mc_dispersion(report: CheckReport, model: StationaryModel) -> CheckReport | None:
    _, _, di = inn.mean_var_dispersion(model.innovation)
    if di >= 1.0:
        return None
    est = dict(report.details)["dispersion_estimate"]
    return CheckReport(
        report.name.replace("monte_carlo", "monte_carlo_underdispersion"),
        max(0.0, est - 1.0),
        0.0,
        [("dispersion_estimate", est)],
    )


# --------------------------------------------------------------------------
# suites


def _functional_eq_suite(tol: float) -> Iterator[CheckReport]:
    for family in FAMILIES:
        for model in family_grid(family):
            yield functional_equation_residual(model, Z_GRID, tol)
    for p, a in product(LOG_DISPERSION_P, ALPHA_GRID):
        yield functional_equation_residual(StationaryModel(Logarithmic(p), a), Z_GRID, tol)
    for name in ("poisson_logarithmic", "pl1", "plm", "poisson_heine"):
        yield functional_equation_residual(PRESETS[name], Z_GRID, tol)


def _oracle_suite(tol: float) -> Iterator[CheckReport]:
    # the Bernoulli series and its tail
    for p, a in product(P_GRID, ALPHA_GRID):
        yield bernoulli_oracle_check(p, a, tol=tol)
        yield bernoulli_tail_check(p, a)
        yield bernoulli_cumulant_display_check(p, a)
    # every family-specific construction against the naive oracle
    for family in FAMILIES:
        for model in family_grid(family):
            yield closed_form_vs_oracle(model, tol)
    for name in ("poisson_logarithmic", "pl1", "plm", "poisson_heine"):
        yield generic_vs_oracle(PRESETS[name], tol)
        yield factorization_check(PRESETS[name], tol)
    # moments
    for family in FAMILIES:
        for model in family_grid(family):
            yield moment_transfer_check(model)
            yield dispersion_equivalence_check(model)
            if family in ("bernoulli", "binomial", "poissonian_binomial"):
                yield factorial_moment_check(model)
            if family in ("bernoulli", "binomial", "poissonian_binomial", "heine"):
                yield factorial_cumulant_check(model)
    for p, a in product(LOG_DISPERSION_P, ALPHA_GRID):
        model = StationaryModel(Logarithmic(p), a)
        yield moment_transfer_check(model)
        yield dispersion_equivalence_check(model)
    for name in ("logarithmic", "poisson", "heine", "poisson_logarithmic"):
        yield thinned_cumulant_sum_check(PRESETS[name])
        yield oracle_depth_check(PRESETS[name])
    # pseudo compound Poisson form
    for p, m, a in product((0.15, 0.3), M_GRID, ALPHA_GRID):
        spec = Bernoulli(p) if m == 1 else Binomial(m, p)
        yield from pcpd_check(StationaryModel(spec, a))
    # logarithmic finite mixture
    for p, a, k in product((0.3, 0.7), (0.3, 0.9), (2, 3, 5)):
        yield log_mixture_identity_check(p, a, k)
    # transition kernels
    for family in ("bernoulli", "binomial", "poissonian_binomial"):
        for model in family_grid(family)[::4]:
            yield from transition_checks(model)
    for name in ("heine", "logarithmic", "poisson", "plm"):
        yield from transition_checks(PRESETS[name])


def _identity_suite(tol: float) -> Iterator[CheckReport]:
    for n, a in product(range(2, 9), ALPHA_GRID):
        yield subset_sum_identity_check(n, a, seed=n)
    for m, q, c in product(range(1, 9), Q_GRID, P_GRID):
        yield poissonian_binomial_pgf_identity(m, q, c)


def _monte_carlo_suite(tol: float) -> Iterator[CheckReport]:
    for seed, (name, model) in enumerate(PRESETS.items()):
        rep = monte_carlo_check(model, 1_000_000, seeds=(seed,), name=name)
        yield rep
        extra = _mc_dispersion(rep, model)
        if extra is not None:
            yield extra


_SUITE_FUNCS: dict[str, Callable[[float], Iterator[CheckReport]]] = {
    "functional-eq": _functional_eq_suite,
    "oracles": _oracle_suite,
    "lemma2": _identity_suite,
    "monte-carlo": _monte_carlo_suite,
}


def run_suite(name: str = "all", tol: float = 1e-8) -> Iterator[CheckReport]:
    """Yield the reports of a named suite in a fixed order."""
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if not 0.0 < tol <= 1e-6:
        raise DomainError(f"tol must lie in (0, 1e-6], got {tol!r}")
    names = list(_SUITE_FUNCS) if name == "all" else [name]
    for n in names:
        yield from _SUITE_FUNCS[n](tol)
