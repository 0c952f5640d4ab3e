"""The INAR(1) chain: simulation, one-step kernels and k-step conditional laws."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Union

import numpy as np
from scipy import stats

from . import innovations as inn
from .errors import DomainError
from .innovations import Bernoulli, Binomial, PoissonianBinomial
from .marginal import StationaryModel, marginal_pmf
from .pmf import DiscretePmf, convolve, trim_tail

__all__ = [
    "SamplePath",
    "TransitionRow",
    "simulate",
    "parse_init",
    "transition_prob",
    "transition_row",
    "transition_matrix",
    "k_step_conditional",
    "MAX_K_STEP",
]

MAX_K_STEP = 64
# tolerance of the innovation pmf used inside transition probabilities
_KERNEL_TOL = 1e-16
_INIT_TOL = 1e-12

Init = Union[str, int]


@dataclass(frozen=True, eq=False)
class SamplePath:
    """X_1, ..., X_T together with what produced it.

    ``init`` is ``"stationary"`` or the fixed starting value X_0.
    """

    values: np.ndarray
    seed: int | None
    model: StationaryModel
    init: Init

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True, eq=False)
class TransitionRow:
    from_state: int
    probs: DiscretePmf


def parse_init(init) -> Init:
    """Accept ``"stationary"``, an int, or the CLI form ``"fixed:<n>"``."""
    if isinstance(init, (int, np.integer)) and not isinstance(init, bool):
        if init < 0:
            raise DomainError("a fixed initial state must be >= 0")
        return int(init)
    if init == "stationary":
        return "stationary"
    if isinstance(init, str) and init.startswith("fixed:"):
        try:
            return parse_init(int(init.split(":", 1)[1]))
        except ValueError:
            pass
    raise DomainError(f"init must be 'stationary' or 'fixed:<n>' with n >= 0, got {init!r}")


@lru_cache(maxsize=64)
def _stationary_cdf(model: StationaryModel) -> np.ndarray:
    cdf = marginal_pmf(model, _INIT_TOL).pmf.cdf()
    cdf[-1] = 1.0  # residual mass goes to the largest tabulated state
    cdf.setflags(write=False)
    return cdf


def simulate(
    model: StationaryModel,
    T: int,
    seed: int | None = None,
    init: Init = "stationary",
    rng: np.random.Generator | None = None,
) -> SamplePath:
    """Simulate X_t = alpha (.) X_{t-1} + eps_t for t = 1..T.

    The innovations eps_1..eps_T are drawn first as one block; then each
    thinning alpha (.) X_{t-1} is a single Binomial(X_{t-1}, alpha) draw.
    With ``init="stationary"`` X_0 comes from the marginal by inverse CDF.
    Output is a deterministic function of (model, T, seed, init).
    """
    if T < 1:
        raise DomainError("T must be >= 1")
    init = parse_init(init)
    if rng is None:
        rng = np.random.default_rng(seed)
    if init == "stationary":
        x = int(np.searchsorted(_stationary_cdf(model), rng.random(), side="right"))
    else:
        x = init
    eps = inn.sample(model.innovation, rng, T).tolist()
    a = model.alpha
    binom = rng.binomial
    out = [0] * T
    for t in range(T):
        x = (binom(x, a) if x else 0) + eps[t]
        out[t] = x
    return SamplePath(np.asarray(out, dtype=np.int64), seed, model, init)


@lru_cache(maxsize=128)
def _innovation_probs(spec) -> np.ndarray:
    probs = inn.pmf(spec, _KERNEL_TOL).probs
    return probs


def _eps(spec, n: int) -> float:
    probs = _innovation_probs(spec)
    return float(probs[n]) if 0 <= n < probs.size else 0.0


def _generic_transition(model: StationaryModel, l: int, k: int) -> float:
    a = model.alpha
    total = 0.0
    for j in range(min(l, k) + 1):
        total += comb(l, j) * a**j * (1.0 - a) ** (l - j) * _eps(model.innovation, k - j)
    return total


def _bernoulli_transition(p: float, a: float, l: int, k: int) -> float:
    if k > l + 1:
        return 0.0
    if k == l + 1:
        return p * a ** (k - 1)
    # alpha^(k-1) abar^(l-k) {p C(l, k-1) abar + pbar C(l, k) alpha}, with the k = 0 case expanded
    first = p * comb(l, k - 1) * a ** (k - 1) * (1.0 - a) ** (l - k + 1) if k >= 1 else 0.0
    second = (1.0 - p) * comb(l, k) * a**k * (1.0 - a) ** (l - k)
    return first + second


def _binomial_transition(m: int, p: float, a: float, l: int, k: int) -> float:
    lo, hi = max(k - m, 0), min(l, k)
    if lo > hi:
        return 0.0
    ratio = a * (1.0 - p) / (p * (1.0 - a))
    s = sum(comb(l, j) * comb(m, k - j) * ratio**j for j in range(lo, hi + 1))
    return p**k * (1.0 - p) ** (m - k) * (1.0 - a) ** l * s


def _po_bin_transition(spec: PoissonianBinomial, a: float, l: int, k: int) -> float:
    q = inn.poissonian_binomial_pmf(spec.m, spec.q, spec.c)
    lo, hi = max(k - spec.m, 0), min(l, k)
    return sum(comb(l, j) * a**j * (1.0 - a) ** (l - j) * q[k - j] for j in range(lo, hi + 1))


def transition_prob(model: StationaryModel, l: int, k: int, method: str = "auto") -> float:
    """P(X_t = k | X_{t-1} = l).

    ``method="generic"`` always uses the binomial-thinning sum against the
    innovation pmf; ``"auto"`` uses the family closed form for Bernoulli,
    Binomial and Poissonian Binomial innovations.
    """
    if l < 0 or k < 0:
        raise DomainError("states must be >= 0")
    if method not in ("auto", "generic"):
        raise DomainError(f"unknown method {method!r}")
    spec, a = model.innovation, model.alpha
    if method == "auto":
        if isinstance(spec, Bernoulli):
            return _bernoulli_transition(spec.p, a, l, k)
        if isinstance(spec, Binomial):
            return _binomial_transition(spec.m, spec.p, a, l, k)
        if isinstance(spec, PoissonianBinomial):
            return _po_bin_transition(spec, a, l, k)
    return _generic_transition(model, l, k)


def transition_row(model: StationaryModel, l: int, tol: float = 1e-12) -> TransitionRow:
    """Law of X_t given X_{t-1} = l: Binomial(l, alpha) convolved with the innovation pmf."""
    if l < 0:
        raise DomainError("states must be >= 0")
    survivors = stats.binom.pmf(np.arange(l + 1), l, model.alpha)
    row = convolve(survivors, inn.pmf(model.innovation, tol).probs)
    row = trim_tail(row, tol)
    return TransitionRow(l, DiscretePmf(row, origin=f"row {l} of {model.label()}"))


def transition_matrix(model: StationaryModel, size: int, method: str = "auto") -> np.ndarray:
    """P[l, k] for 0 <= l, k < size (rows are truncated, not renormalised)."""
    P = np.empty((size, size))
    for l in range(size):
        for k in range(size):
            P[l, k] = transition_prob(model, l, k, method)
    return P


def k_step_conditional(model: StationaryModel, x_t: int, k: int, tol: float = 1e-12) -> DiscretePmf:
    """Law of X_{t+k} given X_t = x_t.

    Binomial(x_t, alpha^k) convolved with the thinned innovation pmfs for
    i = 0..k-1; each of the k factors is truncated at tol / k.
    """
    if x_t < 0:
        raise DomainError("x_t must be >= 0")
    if not 1 <= k <= MAX_K_STEP:
        raise DomainError(f"k must lie in 1..{MAX_K_STEP}")
    if not 0.0 < tol <= 1e-6:
        raise DomainError("tol must lie in (0, 1e-6]")
    share = tol / k
    out = stats.binom.pmf(np.arange(x_t + 1), x_t, model.alpha**k)
    for i in range(k):
        f_i = inn.thinned_pmf(model.innovation, i, model.alpha, share / 2)
        out = convolve(out, f_i.probs, share / 2)
    return DiscretePmf(out, origin=f"{k}-step law from {x_t} under {model.label()}")
