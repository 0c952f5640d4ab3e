"""Stationary marginal law of an INAR(1) process built from its innovations.

Given an innovation pgf Psi and thinning coefficient alpha, the stationary
marginal pgf is the infinite product

    phi(z) = prod_{i >= 0} Psi(1 - alpha^i + alpha^i z),

whose i-th factor is the pgf of the innovation after i rounds of binomial
thinning. This module evaluates that product, turns it into pmfs (generic
convolution and the family-specific closed forms), and transfers moments
and cumulants from the innovation to the marginal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import comb, log

import numpy as np

from . import innovations as inn
from .combinatorics import (
    MomentVector,
    cumulants_from_factorial_cumulants,
    cumulants_from_moments,
    factorial_cumulants_from_cumulants,
    factorial_moments_from_moments,
    moments_from_cumulants,
    moments_from_factorial_moments,
)
from .errors import DomainError
from .innovations import (
    Bernoulli,
    Binomial,
    Convolution,
    Heine,
    InnovationSpec,
    Logarithmic,
    Poisson,
    PoissonianBinomial,
)
from .pmf import DiscretePmf, convolve, trim_tail

__all__ = [
    "StationaryModel",
    "MarginalDistribution",
    "MomentReport",
    "PcpdRepresentation",
    "METHODS",
    "product_depth",
    "marginal_pgf",
    "marginal_pmf",
    "marginal_pmf_generic",
    "marginal_pmf_bernoulli",
    "tail_bernoulli",
    "bernoulli_series_probs",
    "marginal_pmf_binomial",
    "marginal_pmf_poissonian_binomial",
    "marginal_pmf_heine",
    "marginal_pmf_logarithmic",
    "marginal_moments",
    "closed_form_factorial_moments",
    "closed_form_factorial_cumulants",
    "heine_power_sums",
    "pcpd_representation",
    "bernoulli_pgf_series",
    "log_pgf_series",
]

METHODS = (
    "generic_convolution",
    "bernoulli_series",
    "binomial_convolution",
    "po_bin_convolution",
    "heine_limit",
    "log_mixture",
    "poisson_closed_form",
    "component_convolution",
)


@dataclass(frozen=True)
class StationaryModel:
    innovation: InnovationSpec
    alpha: float

    def __post_init__(self):
        if not isinstance(self.innovation, InnovationSpec):
            raise DomainError(f"innovation must be an InnovationSpec, got {self.innovation!r}")
        a = float(self.alpha)
        if not 0.0 < a < 1.0:
            raise DomainError(f"alpha must lie strictly inside (0, 1), got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)

    def to_dict(self) -> dict:
        return {"innovation": self.innovation.to_dict(), "alpha": self.alpha}

    @classmethod
    def from_dict(cls, d: dict) -> "StationaryModel":
        if not isinstance(d, dict):
            raise DomainError("model config must be a JSON object")
        extra = set(d) - {"innovation", "alpha"}
        if extra:
            raise DomainError(f"model config: unexpected field(s) {sorted(extra)}")
        if "innovation" not in d:
            raise DomainError("model config: field 'innovation' is missing")
        if "alpha" not in d:
            raise DomainError("model config: field 'alpha' is missing")
        alpha = d["alpha"]
        if isinstance(alpha, bool) or not isinstance(alpha, (int, float)):
            raise DomainError(f"alpha: expected a number, got {alpha!r}")
        spec = inn.from_dict(d["innovation"])
        try:
            return cls(spec, alpha)
        except DomainError as exc:
            raise DomainError(f"alpha: {exc}") from None

    def label(self) -> str:
        return f"{self.innovation.label()}, alpha={self.alpha}"


@dataclass(frozen=True, eq=False)
class MarginalDistribution:
    pmf: DiscretePmf
    model: StationaryModel
    product_depth: int
    method: str

    @property
    def probs(self) -> np.ndarray:
        return self.pmf.probs

    def __getitem__(self, k: int) -> float:
        return self.pmf[k]

    def __len__(self) -> int:
        return len(self.pmf)

    def mean(self) -> float:
        return self.pmf.mean()

    def variance(self) -> float:
        return self.pmf.variance()

    def pgf(self, z):
        return self.pmf.pgf(z)


@dataclass(frozen=True)
class MomentReport:
    mean: float
    variance: float
    dispersion_index: float
    moments: MomentVector
    factorial_moments: MomentVector
    cumulants: MomentVector
    factorial_cumulants: MomentVector

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "variance": self.variance,
            "dispersion_index": self.dispersion_index,
            "moments": list(self.moments.values),
            "factorial_moments": list(self.factorial_moments.values),
            "cumulants": list(self.cumulants.values),
            "factorial_cumulants": list(self.factorial_cumulants.values),
        }


@dataclass(frozen=True, eq=False)
class PcpdRepresentation:
    """pgf exp(lam * (sum_k a_k z^k - 1)) with signed weights a_1, a_2, ..."""

    lam: float
    weights: np.ndarray
    tail_bound: float

    def pgf(self, z: float) -> float:
        k = np.arange(1, self.weights.size + 1)
        return math.exp(self.lam * (math.fsum(self.weights * z**k) - 1.0))


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not 0.0 < tol <= 1e-6:
        raise DomainError(f"tol must lie in (0, 1e-6], got {tol!r}")
    return tol


def product_depth(model: StationaryModel, tol: float) -> int:
    """Number of factors N so the omitted part of the log-product is at most ``tol``.

    1 - Psi(1 - a^i + a^i z) <= Psi'(1) a^i, so the omitted factors i >= N
    contribute at most Psi'(1) a^N / (1 - a).
    """
    a = model.alpha
    mean = model.innovation.mean
    n = math.ceil(log(tol * (1.0 - a) / mean) / log(a))
    return max(8, n)


def marginal_pgf(model: StationaryModel, z: float, tol: float = 1e-12) -> float:
    """Truncated infinite product prod_{i<N} Psi(1 - alpha^i + alpha^i z)."""
    z = float(z)
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"z must lie in [0, 1], got {z!r}")
    if z == 1.0:
        return 1.0
    n = product_depth(model, tol)
    a = model.alpha
    spec = model.innovation
    factors = [inn.pgf(spec, 1.0 - a**i * (1.0 - z)) for i in range(n)]
    if min(factors) <= 0.0:
        return 0.0  # e.g. logarithmic innovations at z = 0, where Psi(0) = 0
    return math.exp(math.fsum(math.log(f) for f in factors))


def _finish(probs: np.ndarray, tol: float, model, depth, method, origin) -> MarginalDistribution:
    probs = trim_tail(probs, tol)
    return MarginalDistribution(DiscretePmf(probs, origin=origin), model, depth, method)


def marginal_pmf_generic(model: StationaryModel, tol: float = 1e-12) -> MarginalDistribution:
    """Convolution f^(0) * f^(1) * ... * f^(N-1) of the thinned innovation pmfs."""
    tol = _check_tol(tol)
    n = product_depth(model, tol)
    share = tol / (2 * n)
    out = np.array([1.0])
    for i in range(n):
        f_i = inn.thinned_pmf(model.innovation, i, model.alpha, share)
        out = convolve(out, f_i.probs, share)
    return _finish(out, tol, model, n, "generic_convolution", f"generic marginal of {model.label()}")


# --------------------------------------------------------------------------
# Bernoulli innovations


_EPS = np.finfo(float).eps


def _bernoulli_terms_with_error(p: float, alpha: float, floor: float = 1e-40) -> tuple[np.ndarray, np.ndarray]:
    """t_k = p^k alpha^C(k,2) / prod_{l=1..k} (1 - alpha^l), until t_k 2^k < floor.

    Also returns a bound on the relative rounding error of each t_k, which
    is computed as exp of a sum of logs whose magnitudes are tracked.
    """
    logs = [0.0]
    mags = [0.0]
    k = 0
    lp, la = log(p), log(alpha)
    acc = acc_mag = 0.0
    while True:
        k += 1
        step = math.log1p(-(alpha**k))
        acc += step
        acc_mag += abs(step)
        lt = k * lp + k * (k - 1) / 2 * la - acc
        logs.append(lt)
        mags.append(k * abs(lp) + k * (k - 1) / 2 * abs(la) + acc_mag)
        if lt + k * math.log(2.0) < math.log(floor):
            break
    rel = _EPS * (np.array(mags) + 4.0)
    return np.exp(np.array(logs)), rel


def _bernoulli_terms(p: float, alpha: float, floor: float = 1e-40) -> np.ndarray:
    return _bernoulli_terms_with_error(p, alpha, floor)[0]


@lru_cache(maxsize=1024)
def _bernoulli_series(p: float, alpha: float) -> tuple[np.ndarray, float]:
    # p_r = sum_{k >= r} (-1)^(k-r) C(k, r) t_k, plus a bound on the rounding error
    t, rel = _bernoulli_terms_with_error(p, alpha)
    kmax = t.size - 1
    out = np.empty(kmax + 1)
    err = 0.0
    for r in range(kmax + 1):
        terms = [comb(k, r) * t[k] for k in range(r, kmax + 1)]
        out[r] = math.fsum(x if (k - r) % 2 == 0 else -x for k, x in zip(range(r, kmax + 1), terms))
        err = max(err, math.fsum(x * e for x, e in zip(terms, rel[r:])))
    out.setflags(write=False)
    return out, err


@lru_cache(maxsize=1024)
def _bernoulli_product(p: float, alpha: float, tol: float) -> np.ndarray:
    # prod_i (1 - p alpha^i + p alpha^i z) expanded by two-point convolutions
    n = product_depth(StationaryModel(Bernoulli(p), alpha), tol)
    out = np.array([1.0])
    for i in range(n):
        b = p * alpha**i
        out = convolve(out, np.array([1.0 - b, b]), tol / (2 * n))
    out.setflags(write=False)
    return out


def bernoulli_series_probs(p: float, alpha: float) -> tuple[np.ndarray, float]:
    """The alternating series for all r up to where the terms vanish, with a
    bound on its accumulated rounding error (no fallback)."""
    StationaryModel(Bernoulli(p), alpha)
    probs, err = _bernoulli_series(float(p), float(alpha))
    return probs.copy(), err


def _bernoulli_probs(p: float, alpha: float, tol: float) -> tuple[np.ndarray, bool]:
    """Bernoulli-innovation marginal; (probs, True) from the alternating series when
    its rounding-error bound is within ``tol``, else (probs, False) from the product.

    The series cancels badly once alpha is close to one (terms grow like
    1 / prod (1 - alpha^l) before alpha^C(k,2) takes over).
    """
    probs, err = _bernoulli_series(p, alpha)
    if err <= tol:
        return probs, True
    return _bernoulli_product(p, alpha, tol), False


def marginal_pmf_bernoulli(p: float, alpha: float, tol: float = 1e-12) -> MarginalDistribution:
    """Stationary marginal for Bernoulli(p) innovations via the alternating series.

    Falls back to expanding the product pgf (method ``generic_convolution``)
    when the series' rounding-error bound exceeds ``tol``.
    """
    tol = _check_tol(tol)
    model = StationaryModel(Bernoulli(p), alpha)
    probs, series = _bernoulli_probs(float(p), float(alpha), tol * 0.5)
    method = "bernoulli_series" if series else "generic_convolution"
    return _finish(probs.copy(), tol, model, 0, method, f"bernoulli marginal, p={p}, alpha={alpha}")


def tail_bernoulli(p: float, alpha: float, r: int, tol: float = 1e-12) -> float:
    """P(X >= r) = sum_{k >= r} (-1)^(k-r) C(k-1, r-1) t_k for r >= 1.

    If the rounding-error bound of the series exceeds ``tol`` the
    complement of the product-expanded pmf is returned instead.
    """
    if r < 1:
        raise DomainError("tail_bernoulli needs r >= 1")
    StationaryModel(Bernoulli(p), alpha)
    t, rel = _bernoulli_terms_with_error(float(p), float(alpha), min(1e-40, tol * 1e-20))
    if r >= t.size:
        return 0.0
    terms = [comb(k - 1, r - 1) * t[k] for k in range(r, t.size)]
    err = math.fsum(x * e for x, e in zip(terms, rel[r:]))
    if err > tol:
        probs = _bernoulli_product(float(p), float(alpha), min(tol, 1e-6) * 0.1)
        return min(1.0, max(0.0, 1.0 - math.fsum(probs[:r])))
    total = math.fsum((-1) ** (k - r) * x for k, x in zip(range(r, t.size), terms))
    return min(1.0, max(0.0, total))


def bernoulli_pgf_series(p: float, alpha: float, z: float) -> float:
    """1 + sum_n p^n (z-1)^n alpha^C(n,2) / prod_{l<=n} (1 - alpha^l)."""
    t = _bernoulli_terms(float(p), float(alpha))
    n = np.arange(t.size)
    return math.fsum(t * (z - 1.0) ** n)


def marginal_pmf_binomial(m: int, p: float, alpha: float, tol: float = 1e-12) -> MarginalDistribution:
    """m-fold self-convolution of the Bernoulli-innovation marginal."""
    tol = _check_tol(tol)
    model = StationaryModel(Binomial(m, p), alpha)
    share = tol / (2 * model.innovation.m)
    base = _bernoulli_probs(float(p), float(alpha), share)[0]
    out = np.array([1.0])
    for _ in range(model.innovation.m):
        out = convolve(out, base, share)
    return _finish(out, tol, model, 0, "binomial_convolution", f"binomial marginal, m={m}, p={p}, alpha={alpha}")


def marginal_pmf_poissonian_binomial(
    m: int, q: float, c: float, alpha: float, tol: float = 1e-12
) -> MarginalDistribution:
    """Convolution over j < m of Bernoulli-innovation marginals with parameter c q^j."""
    tol = _check_tol(tol)
    spec = PoissonianBinomial(m, q, c)
    model = StationaryModel(spec, alpha)
    share = tol / (2 * spec.m)
    out = np.array([1.0])
    for beta in spec.success_probs():
        out = convolve(out, _bernoulli_probs(float(beta), model.alpha, share)[0], share)
    return _finish(out, tol, model, 0, "po_bin_convolution", f"poissonian binomial marginal of {model.label()}")


def marginal_pmf_heine(lam: float, q: float, alpha: float, tol: float = 1e-12) -> MarginalDistribution:
    """Limit convolution over j of Bernoulli-innovation marginals with parameter beta_j.

    Factors j >= J are dropped once their total marginal mean
    sum_{j >= J} beta_j / (1 - alpha) is below ``tol``.
    """
    tol = _check_tol(tol)
    spec = Heine(lam, q)
    model = StationaryModel(spec, alpha)
    betas = inn.heine_betas(spec.lam, spec.q, tol * (1.0 - model.alpha))
    share = tol / (2 * betas.size)
    out = np.array([1.0])
    for beta in betas:
        out = convolve(out, _bernoulli_probs(float(beta), model.alpha, share)[0], share)
    return _finish(out, tol, model, betas.size, "heine_limit", f"heine marginal of {model.label()}")


def marginal_pmf_logarithmic(p: float, alpha: float, tol: float = 1e-12) -> MarginalDistribution:
    """Convolution of the two-point mixtures b_i delta_0 + (1 - b_i) Logarithmic(q_i)."""
    tol = _check_tol(tol)
    spec = Logarithmic(p)
    model = StationaryModel(spec, alpha)
    n = product_depth(model, tol)
    share = tol / (2 * n)
    out = np.array([1.0])
    for i in range(n):
        f_i = spec._thin(model.alpha**i, share)
        out = convolve(out, f_i.probs, share)
    return _finish(out, tol, model, n, "log_mixture", f"logarithmic marginal of {model.label()}")


def log_pgf_series(p: float, alpha: float, z: float, tol: float = 1e-12) -> float:
    """prod_i [1 - ln((1 - q_i) / (1 - q_i z)) / ln(1 - p)] truncated at the product depth."""
    spec = Logarithmic(p)
    model = StationaryModel(spec, alpha)
    lp = math.log1p(-spec.p)
    logs = []
    for i in range(product_depth(model, tol)):
        q_i, _ = spec.thinning_mixture(model.alpha**i)
        logs.append(math.log(1.0 - (math.log1p(-q_i) - math.log1p(-q_i * z)) / lp))
    return math.exp(math.fsum(logs))


def _poisson_marginal(model: StationaryModel, tol: float) -> MarginalDistribution:
    lam = model.innovation.lam / (1.0 - model.alpha)
    probs = inn._poisson_probs(lam, tol)
    return MarginalDistribution(
        DiscretePmf(probs, origin=f"poisson({lam:.6g})"), model, 0, "poisson_closed_form"
    )


def marginal_pmf(model: StationaryModel, tol: float = 1e-12) -> MarginalDistribution:
    """Stationary marginal pmf, using the family-specific construction when one exists.

    Convolution innovations factor into the convolution of the marginals of
    their parts; families without a dedicated path fall back to
    :func:`marginal_pmf_generic`.
    """
    tol = _check_tol(tol)
    spec, a = model.innovation, model.alpha
    if isinstance(spec, Bernoulli):
        return marginal_pmf_bernoulli(spec.p, a, tol)
    if isinstance(spec, Binomial):
        return marginal_pmf_binomial(spec.m, spec.p, a, tol)
    if isinstance(spec, PoissonianBinomial):
        return marginal_pmf_poissonian_binomial(spec.m, spec.q, spec.c, a, tol)
    if isinstance(spec, Heine):
        return marginal_pmf_heine(spec.lam, spec.q, a, tol)
    if isinstance(spec, Logarithmic):
        return marginal_pmf_logarithmic(spec.p, a, tol)
    if isinstance(spec, Poisson):
        return _poisson_marginal(model, tol)
    if isinstance(spec, Convolution):
        share = tol / (2 * len(spec.parts))
        out = np.array([1.0])
        for part in spec.parts:
            sub = marginal_pmf(StationaryModel(part, a), share)
            out = convolve(out, sub.probs, share)
        return _finish(out, tol, model, 0, "component_convolution", f"marginal of {model.label()}")
    return marginal_pmf_generic(model, tol)


# --------------------------------------------------------------------------
# moments


def marginal_moments(model: StationaryModel, R: int = 4) -> MomentReport:
    """Moment report of the stationary marginal via factorial-cumulant transfer.

    Innovation factorial moments -> moments -> cumulants -> factorial
    cumulants; then kappa_[r] of the marginal is kappa_[r] / (1 - alpha^r),
    and the remaining sequences follow by the standard conversions. Mean and
    variance are reported from the exact transfer
    mu / (1 - alpha) and (sigma^2 + alpha mu) / (1 - alpha^2).
    """
    if R < 1:
        raise DomainError("R must be >= 1")
    a = model.alpha
    order = max(R, 2)
    fm_f = inn.factorial_moments(model.innovation, order)
    fc_f = factorial_cumulants_from_cumulants(cumulants_from_moments(moments_from_factorial_moments(fm_f)))
    fc_p = MomentVector(
        "factorial_cumulants", [v / (1.0 - a ** (r + 1)) for r, v in enumerate(fc_f.values)]
    )
    c_p = cumulants_from_factorial_cumulants(fc_p)
    m_p = moments_from_cumulants(c_p)
    fm_p = factorial_moments_from_moments(m_p)

    mean_f, var_f, _ = inn.mean_var_dispersion(model.innovation)
    mean = mean_f / (1.0 - a)
    var = (var_f + a * mean_f) / (1.0 - a * a)

    def cut(v: MomentVector) -> MomentVector:
        return MomentVector(v.kind, v.values[:R])

    return MomentReport(mean, var, var / mean, cut(m_p), cut(fm_p), cut(c_p), cut(fc_p))


def heine_power_sums(lam: float, q: float, R: int, eps: float = 1e-14) -> list[float]:
    """B_n = sum_j beta_j^n for n = 1..R, each truncated with omitted tail below ``eps``."""
    betas = inn.heine_betas(float(lam), float(q), eps)
    return [math.fsum(betas**n) for n in range(1, R + 1)]


def _phi_derivs_at_one(spec: InnovationSpec, alpha: float, R: int) -> list[float]:
    # r-th derivative at z=1 of -ln phi(z) per unit of the recursion multiplier
    out = []
    for r in range(1, R + 1):
        base = (-1) ** r * math.factorial(r - 1) / (1.0 - alpha**r)
        if isinstance(spec, (Bernoulli, Binomial)):
            out.append(base * spec.p**r)
        else:
            q, c, m = spec.q, spec.c, spec.m
            out.append(base * (1.0 - q ** (m * r)) * c**r / (1.0 - q**r))
    return out


def closed_form_factorial_moments(model: StationaryModel, R: int) -> MomentVector:
    """Factorial moments from the family closed forms.

    Bernoulli: r! p^r alpha^C(r,2) / prod_{i<=r} (1 - alpha^i).
    Binomial and Poissonian Binomial: the forward recursion
    mu_[r] = -M sum_{j<r} C(r-1, j) mu_[j] phi^(r-j)(1) with M = m or 1.
    """
    if R < 1:
        raise DomainError("R must be >= 1")
    spec, a = model.innovation, model.alpha
    if isinstance(spec, Bernoulli):
        vals = []
        denom = 1.0
        for r in range(1, R + 1):
            denom *= 1.0 - a**r
            vals.append(math.factorial(r) * spec.p**r * a ** (r * (r - 1) // 2) / denom)
        return MomentVector("factorial_moments", vals)
    if isinstance(spec, (Binomial, PoissonianBinomial)):
        mult = spec.m if isinstance(spec, Binomial) else 1
        d = _phi_derivs_at_one(spec, a, R)
        mu = [1.0]
        for r in range(1, R + 1):
            mu.append(-mult * math.fsum(comb(r - 1, j) * mu[j] * d[r - j - 1] for j in range(r)))
        return MomentVector("factorial_moments", mu[1:])
    raise DomainError(
        f"no closed-form factorial moments for {spec.family!r}; use marginal_moments instead"
    )


def closed_form_factorial_cumulants(model: StationaryModel, R: int) -> MomentVector:
    """(-1)^(r+1) (r-1)! G_r / (1 - alpha^r) with G_r = p^r, m p^r, the q-weighted c^r, or B_r."""
    if R < 1:
        raise DomainError("R must be >= 1")
    spec, a = model.innovation, model.alpha
    if isinstance(spec, Bernoulli):
        g = [spec.p**r for r in range(1, R + 1)]
    elif isinstance(spec, Binomial):
        g = [spec.m * spec.p**r for r in range(1, R + 1)]
    elif isinstance(spec, PoissonianBinomial):
        q, c, m = spec.q, spec.c, spec.m
        g = [(1.0 - q ** (m * r)) * c**r / (1.0 - q**r) for r in range(1, R + 1)]
    elif isinstance(spec, Heine):
        g = heine_power_sums(spec.lam, spec.q, R)
    else:
        raise DomainError(
            f"no closed-form factorial cumulants for {spec.family!r}; use marginal_moments instead"
        )
    vals = [(-1) ** (r + 1) * math.factorial(r - 1) * g[r - 1] / (1.0 - a**r) for r in range(1, R + 1)]
    return MomentVector("factorial_cumulants", vals)


# --------------------------------------------------------------------------
# pseudo compound Poisson form


def pcpd_representation(model: StationaryModel, tol: float = 1e-14) -> PcpdRepresentation:
    """Pseudo compound Poisson form of the Bernoulli / Binomial marginal (needs p < 1/2).

    With c_n = p^n / (n (1 - alpha^n)) and phi0 = sum_n c_n, the marginal pgf is
    exp(lam (sum_k a_k z^k - 1)) where lam = m phi0 and
    a_k = (-1)^(k+1) / phi0 * sum_{j >= k} C(j, k) c_j.
    """
    spec, a = model.innovation, model.alpha
    if not isinstance(spec, (Bernoulli, Binomial)):
        raise DomainError("the pseudo compound Poisson form is available for Bernoulli and Binomial innovations")
    p = spec.p
    if p >= 0.5:
        raise DomainError(f"the pseudo compound Poisson form needs p < 1/2, got p={p}")
    m = spec.m if isinstance(spec, Binomial) else 1

    # sum_{n > J} |a_n| <= (2p)^(J+1) / ((J+1)(1-alpha)(1-2p) phi0)
    phi0_lower = p / (1.0 - a)
    J = 1
    while (2 * p) ** (J + 1) / ((J + 1) * (1.0 - a) * (1.0 - 2 * p) * phi0_lower) > tol:
        J += 1
    j = np.arange(1, J + 1)
    c = p**j / (j * (1.0 - a**j))
    phi0 = math.fsum(c)
    weights = np.empty(J)
    for k in range(1, J + 1):
        inner = math.fsum(comb(jj, k) * c[jj - 1] for jj in range(k, J + 1))
        weights[k - 1] = (-1) ** (k + 1) * inner / phi0
    bound = (2 * p) ** (J + 1) / ((J + 1) * (1.0 - a) * (1.0 - 2 * p) * phi0)
    return PcpdRepresentation(m * phi0, weights, bound)
