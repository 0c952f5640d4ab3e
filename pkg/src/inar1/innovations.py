"""Innovation distributions for INAR(1) models.

Each family is a frozen dataclass. The module-level functions (``pmf``,
``pgf``, ``mean_var_dispersion``, ``factorial_moments``, ``thinned_pmf``,
``sample``) are the public entry points and accept any family, including
finite convolutions of families.

JSON encoding uses the lower-case family name and the parameter names
``p``, ``m``, ``q``, ``c``, ``lambda`` and ``parts``::

    {"family": "heine", "lambda": 1.0, "q": 0.5}
    {"family": "convolution",
     "parts": [{"family": "poisson", "lambda": 2.0},
               {"family": "bernoulli", "p": 0.3}]}
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import comb, log, log1p
from typing import ClassVar

import numpy as np
from scipy import stats

from .combinatorics import MomentVector
from .errors import DomainError
from .pmf import DiscretePmf, binomial_thin, convolve

__all__ = [
    "InnovationSpec",
    "Logarithmic",
    "Bernoulli",
    "Binomial",
    "PoissonianBinomial",
    "Heine",
    "Poisson",
    "Convolution",
    "DiscretePmf",
    "pmf",
    "pgf",
    "mean_var_dispersion",
    "factorial_moments",
    "thinned_pmf",
    "sample",
    "from_dict",
    "to_dict",
    "poissonian_binomial_pmf",
    "FAMILY_NAMES",
]

MAX_TOL = 1e-6
# tolerance for the pmf tables behind pmf-summation moments and samplers
_MOMENT_TOL = 1e-18
_SAMPLER_TOL = 1e-12


def _unit_open(name: str, v) -> float:
    v = float(v)
    if not 0.0 < v < 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {v!r}")
    return v


def _positive(name: str, v) -> float:
    v = float(v)
    if not (v > 0.0 and math.isfinite(v)):
        raise DomainError(f"{name} must be a positive finite number, got {v!r}")
    return v


def _count(name: str, v) -> int:
    if isinstance(v, bool) or not float(v).is_integer() or int(v) < 1:
        raise DomainError(f"{name} must be a positive integer, got {v!r}")
    return int(v)


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not 0.0 < tol <= MAX_TOL:
        raise DomainError(f"tol must lie in (0, {MAX_TOL:g}], got {tol!r}")
    return tol


@dataclass(frozen=True)
class InnovationSpec:
    """Base class of the innovation families."""

    family: ClassVar[str] = ""

    # family hooks ---------------------------------------------------------
    def _pgf(self, z: float) -> float:
        raise NotImplementedError

    def _probs(self, tol: float) -> np.ndarray:
        raise NotImplementedError

    def _mean_var(self) -> tuple[float, float]:
        raise NotImplementedError

    def _thin(self, a: float, tol: float) -> DiscretePmf:
        return DiscretePmf(binomial_thin(self._probs(tol), a), origin=f"thinned {self.label()} a={a:.6g}")

    def _draw(self, rng: np.random.Generator, size):
        table = _cdf_table(self)
        u = rng.random(size)
        return np.searchsorted(table, u, side="right")

    # shared ---------------------------------------------------------------
    @property
    def mean(self) -> float:
        """Psi'(1)."""
        return self._mean_var()[0]

    def label(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self._params().items())
        return f"{self.family}({params})"

    def _params(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        return {"family": self.family, **self._params()}


@dataclass(frozen=True)
class Logarithmic(InnovationSpec):
    """Logarithmic(p): f_r = p^r / (-r ln(1-p)), r >= 1."""

    p: float
    family: ClassVar[str] = "logarithmic"

    def __post_init__(self):
        object.__setattr__(self, "p", _unit_open("p", self.p))

    def _params(self):
        return {"p": self.p}

    def _pgf(self, z):
        return log1p(-self.p * z) / log1p(-self.p)

    def _probs(self, tol):
        return _log_probs(self.p, tol)

    def _mean_var(self):
        p = self.p
        lq = log1p(-p)
        mean = -p / ((1 - p) * lq)
        var = -p * (p + lq) / ((1 - p) * lq) ** 2
        return mean, var

    def factorial_moments_closed(self, R: int) -> list[float]:
        p = self.p
        lq = log1p(-p)
        return [-(p**r) * math.factorial(r - 1) / ((1 - p) ** r * lq) for r in range(1, R + 1)]

    def thinning_mixture(self, a: float) -> tuple[float, float]:
        """(q, b) such that the a-thinned law is b * delta_0 + (1 - b) * Logarithmic(q)."""
        p = self.p
        q = p * a / (1.0 - p * (1.0 - a))
        b = 1.0 - log1p(-q) / log1p(-p)
        return q, b

    def _thin(self, a, tol):
        if a == 1.0:
            return DiscretePmf(self._probs(tol), origin=self.label())
        q, b = self.thinning_mixture(a)
        probs = (1.0 - b) * _log_probs(q, tol)
        probs[0] = b
        return DiscretePmf(probs, origin=f"thinned {self.label()} a={a:.6g} (two-point mixture)")


@dataclass(frozen=True)
class Bernoulli(InnovationSpec):
    p: float
    family: ClassVar[str] = "bernoulli"

    def __post_init__(self):
        object.__setattr__(self, "p", _unit_open("p", self.p))

    def _params(self):
        return {"p": self.p}

    def _pgf(self, z):
        return 1.0 - self.p + self.p * z

    def _probs(self, tol):
        return np.array([1.0 - self.p, self.p])

    def _mean_var(self):
        return self.p, self.p * (1.0 - self.p)

    def _draw(self, rng, size):
        return rng.binomial(1, self.p, size)


@dataclass(frozen=True)
class Binomial(InnovationSpec):
    m: int
    p: float
    family: ClassVar[str] = "binomial"

    def __post_init__(self):
        object.__setattr__(self, "m", _count("m", self.m))
        object.__setattr__(self, "p", _unit_open("p", self.p))

    def _params(self):
        return {"m": self.m, "p": self.p}

    def _pgf(self, z):
        return (1.0 - self.p + self.p * z) ** self.m

    def _probs(self, tol):
        return stats.binom.pmf(np.arange(self.m + 1), self.m, self.p)

    def _mean_var(self):
        return self.m * self.p, self.m * self.p * (1.0 - self.p)

    def _draw(self, rng, size):
        return rng.binomial(self.m, self.p, size)


@dataclass(frozen=True)
class PoissonianBinomial(InnovationSpec):
    """Sum of m independent Bernoulli(c q^j), j = 0..m-1."""

    m: int
    q: float
    c: float
    family: ClassVar[str] = "poissonian_binomial"

    def __post_init__(self):
        object.__setattr__(self, "m", _count("m", self.m))
        object.__setattr__(self, "q", _unit_open("q", self.q))
        object.__setattr__(self, "c", _unit_open("c", self.c))

    def _params(self):
        return {"m": self.m, "q": self.q, "c": self.c}

    def success_probs(self) -> np.ndarray:
        return self.c * self.q ** np.arange(self.m)

    def _pgf(self, z):
        return float(np.prod(1.0 - self.success_probs() * (1.0 - z)))

    def _probs(self, tol):
        return poissonian_binomial_pmf(self.m, self.q, self.c)

    def _mean_var(self):
        m, q, c = self.m, self.q, self.c
        mean = (1.0 - q**m) * c / (1.0 - q)
        var = mean - (1.0 - q ** (2 * m)) * c**2 / (1.0 - q**2)
        return mean, var


@dataclass(frozen=True)
class Heine(InnovationSpec):
    """Heine(lambda, q): infinite convolution of Bernoulli(beta_j), beta_j = lam q^j / (1 + lam q^j)."""

    lam: float
    q: float
    family: ClassVar[str] = "heine"

    def __post_init__(self):
        object.__setattr__(self, "lam", _positive("lambda", self.lam))
        object.__setattr__(self, "q", _unit_open("q", self.q))

    def _params(self):
        return {"lambda": self.lam, "q": self.q}

    def label(self):
        return f"heine(lambda={self.lam}, q={self.q})"

    def betas(self, eps: float = 1e-17) -> np.ndarray:
        """beta_j for j = 0..J-1, with the omitted sum of beta_j below ``eps``."""
        return heine_betas(self.lam, self.q, eps)

    def _pgf(self, z):
        x = self.betas(1e-17) * (1.0 - z)
        return math.exp(np.sum(np.log1p(-x)))

    def _probs(self, tol):
        return _heine_probs(self.lam, self.q, tol)

    def _mean_var(self):
        b = self.betas(1e-16)
        return float(math.fsum(b)), float(math.fsum(b * (1.0 - b)))


@dataclass(frozen=True)
class Poisson(InnovationSpec):
    lam: float
    family: ClassVar[str] = "poisson"

    def __post_init__(self):
        object.__setattr__(self, "lam", _positive("lambda", self.lam))

    def _params(self):
        return {"lambda": self.lam}

    def label(self):
        return f"poisson(lambda={self.lam})"

    def _pgf(self, z):
        return math.exp(self.lam * (z - 1.0))

    def _probs(self, tol):
        return _poisson_probs(self.lam, tol)

    def _mean_var(self):
        return self.lam, self.lam

    def _draw(self, rng, size):
        return rng.poisson(self.lam, size)


@dataclass(frozen=True)
class Convolution(InnovationSpec):
    """Independent sum of the component innovations."""

    parts: tuple[InnovationSpec, ...]
    family: ClassVar[str] = "convolution"

    def __post_init__(self):
        parts = tuple(self.parts)
        if len(parts) < 1:
            raise DomainError("a convolution needs at least one part")
        for part in parts:
            if not isinstance(part, InnovationSpec):
                raise DomainError(f"convolution parts must be innovation specs, got {part!r}")
        object.__setattr__(self, "parts", parts)

    def label(self):
        return " * ".join(p.label() for p in self.parts)

    def to_dict(self):
        return {"family": self.family, "parts": [p.to_dict() for p in self.parts]}

    def _pgf(self, z):
        return math.prod(p._pgf(z) for p in self.parts)

    def _probs(self, tol):
        share = tol / (2 * len(self.parts))
        out = np.array([1.0])
        for part in self.parts:
            out = convolve(out, part._probs(share), share)
        return out

    def _mean_var(self):
        mv = [p._mean_var() for p in self.parts]
        return math.fsum(m for m, _ in mv), math.fsum(v for _, v in mv)

    def _thin(self, a, tol):
        share = tol / (2 * len(self.parts))
        out = np.array([1.0])
        for part in self.parts:
            out = convolve(out, part._thin(a, share).probs, share)
        return DiscretePmf(out, origin=f"thinned {self.label()} a={a:.6g}")

    def _draw(self, rng, size):
        return sum(p._draw(rng, size) for p in self.parts)


# --------------------------------------------------------------------------
# family pmf kernels


def _log_probs(p: float, tol: float) -> np.ndarray:
    # f_{r+1}/f_r <= p, so the tail past K is at most f_{K+1} / (1 - p)
    lq = -log1p(-p)
    lp = log(p)
    K = 1
    while (K + 1) * lp - log(K + 1) - log(lq) - log1p(-p) > log(tol):
        K += 1
    ks = np.arange(1, K + 1)
    probs = np.zeros(K + 1)
    probs[1:] = np.exp(ks * lp - np.log(ks) - log(lq))
    return probs


def heine_betas(lam: float, q: float, eps: float) -> np.ndarray:
    # sum_{j >= J} beta_j <= lam q^J / (1 - q)
    J = 1
    while lam * q**J / (1.0 - q) > eps:
        J += 1
    lq = lam * q ** np.arange(J)
    return lq / (1.0 + lq)


def _heine_probs(lam: float, q: float, tol: float) -> np.ndarray:
    # f_0 = prod_j (1 + lam q^j)^{-1}; f_r / f_{r-1} = lam q^{r-1} / (1 - q^r)
    J = 1
    while lam * q**J > 1e-18:
        J += 1
    log_f0 = -float(np.sum(np.log1p(lam * q ** np.arange(J))))
    logs = [log_f0]
    r = 0
    while True:
        ratio_next = lam * q ** (r + 1) / (1.0 - q ** (r + 2))
        log_next = logs[-1] + log(lam) + r * log(q) - log1p(-(q ** (r + 1)))
        # ratios decrease, so tail past r is <= f_{r+1} / (1 - ratio_{r+1})
        if ratio_next < 1.0 and log_next - log1p(-ratio_next) <= log(tol):
            break
        logs.append(log_next)
        r += 1
    return np.exp(np.array(logs))


def _poisson_probs(lam: float, tol: float) -> np.ndarray:
    K = max(1, int(math.ceil(lam)))
    while True:
        nxt = stats.poisson.pmf(K + 1, lam)
        if nxt / (1.0 - lam / (K + 2)) <= tol:
            break
        K += 1
    return stats.poisson.pmf(np.arange(K + 1), lam)


def poissonian_binomial_pmf(m: int, q: float, c: float) -> np.ndarray:
    """Closed-form Poissonian Binomial pmf on 0..m.

    q_r = sum_{k=r..m} (-1)^(k-r) C(k, r) c^k q^C(k,2) prod_{l<k} (1 - q^(m-l)) / (1 - q^(l+1))
    """
    w = [1.0]
    for k in range(1, m + 1):
        l = k - 1
        w.append(w[-1] * c * q**l * (1.0 - q ** (m - l)) / (1.0 - q ** (l + 1)))
    out = np.empty(m + 1)
    for r in range(m + 1):
        out[r] = math.fsum((-1) ** (k - r) * comb(k, r) * w[k] for k in range(r, m + 1))
    return out


@lru_cache(maxsize=256)
def _cdf_table(spec: InnovationSpec) -> np.ndarray:
    cdf = np.cumsum(spec._probs(_SAMPLER_TOL))
    cdf[-1] = 1.0  # residual tail folded into the top bucket
    cdf.setflags(write=False)
    return cdf


# --------------------------------------------------------------------------
# public operations


def pmf(spec: InnovationSpec, tol: float = 1e-12) -> DiscretePmf:
    """Truncated pmf of ``spec`` with at most ``tol`` mass beyond the last entry."""
    tol = _check_tol(tol)
    return DiscretePmf(spec._probs(tol), origin=spec.label())


def pgf(spec: InnovationSpec, z: float) -> float:
    """Psi(z) for z in [0, 1]."""
    z = float(z)
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"pgf argument must lie in [0, 1], got {z!r}")
    if z == 1.0:
        return 1.0
    return float(spec._pgf(z))


def mean_var_dispersion(spec: InnovationSpec) -> tuple[float, float, float]:
    mean, var = spec._mean_var()
    return mean, var, var / mean


def factorial_moments(spec: InnovationSpec, R: int) -> MomentVector:
    """Factorial moments of orders 1..R.

    Closed form for the logarithmic family; otherwise falling-factorial sums
    over a pmf table truncated far enough out that the omitted tail is
    negligible at order R.
    """
    if R < 1:
        raise DomainError("R must be >= 1")
    if isinstance(spec, Logarithmic):
        return MomentVector("factorial_moments", spec.factorial_moments_closed(R))
    probs = spec._probs(_MOMENT_TOL)
    k = np.arange(probs.size, dtype=float)
    vals = []
    ff = np.ones_like(k)
    for r in range(1, R + 1):
        ff = ff * (k - (r - 1))
        vals.append(math.fsum(ff * probs))
    return MomentVector("factorial_moments", vals)


def thinned_pmf(
    spec: InnovationSpec, i: int, alpha: float, tol: float = 1e-12, method: str = "auto"
) -> DiscretePmf:
    """pmf with pgf Psi(1 - alpha^i + alpha^i z).

    ``method="series"`` forces the generic binomial-thinning sum over the
    truncated pmf even where a closed form exists (logarithmic family).
    """
    tol = _check_tol(tol)
    if i < 0:
        raise DomainError("thinning index i must be >= 0")
    alpha = _unit_open("alpha", alpha)
    if i == 0:
        return pmf(spec, tol)
    a = alpha**i
    if method == "series":
        return InnovationSpec._thin(spec, a, tol)
    if method != "auto":
        raise DomainError(f"unknown method {method!r}")
    return spec._thin(a, tol)


def sample(spec: InnovationSpec, rng: np.random.Generator, size=None):
    """Draw from ``spec``; returns an int for ``size=None`` else an int64 array."""
    out = spec._draw(rng, size)
    if size is None:
        return int(out)
    return np.asarray(out, dtype=np.int64)


# --------------------------------------------------------------------------
# JSON encoding

_FIELDS = {
    "logarithmic": (Logarithmic, ("p",)),
    "bernoulli": (Bernoulli, ("p",)),
    "binomial": (Binomial, ("m", "p")),
    "poissonian_binomial": (PoissonianBinomial, ("m", "q", "c")),
    "heine": (Heine, ("lambda", "q")),
    "poisson": (Poisson, ("lambda",)),
}
FAMILY_NAMES = (*_FIELDS, "convolution")


def from_dict(d: dict, where: str = "innovation") -> InnovationSpec:
    """Parse the JSON encoding; errors name the offending field path."""
    if not isinstance(d, dict):
        raise DomainError(f"{where}: expected an object, got {type(d).__name__}")
    family = d.get("family")
    if family == "convolution":
        extra = set(d) - {"family", "parts"}
        if extra:
            raise DomainError(f"{where}: unexpected field(s) {sorted(extra)}")
        parts = d.get("parts")
        if not isinstance(parts, list) or not parts:
            raise DomainError(f"{where}.parts: expected a non-empty list")
        return Convolution(tuple(from_dict(p, f"{where}.parts[{i}]") for i, p in enumerate(parts)))
    if family not in _FIELDS:
        raise DomainError(f"{where}.family: unknown family {family!r}")
    cls, names = _FIELDS[family]
    extra = set(d) - {"family", *names}
    if extra:
        raise DomainError(f"{where}: unexpected field(s) {sorted(extra)} for family {family!r}")
    args = []
    for name in names:
        if name not in d:
            raise DomainError(f"{where}.{name}: missing")
        v = d[name]
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise DomainError(f"{where}.{name}: expected a number, got {v!r}")
        args.append(v)
    try:
        return cls(*args)
    except DomainError as exc:
        raise DomainError(f"{where}: {exc}") from None


def to_dict(spec: InnovationSpec) -> dict:
    return spec.to_dict()
