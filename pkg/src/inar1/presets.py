"""Named models and the default parameter grid used by the validation suite."""

from __future__ import annotations

from itertools import product

from .innovations import (
    Bernoulli,
    Binomial,
    Convolution,
    Heine,
    Logarithmic,
    Poisson,
    PoissonianBinomial,
)
from .marginal import StationaryModel

__all__ = [
    "P_GRID",
    "ALPHA_GRID",
    "M_GRID",
    "Q_GRID",
    "LAMBDA_GRID",
    "FAMILIES",
    "family_grid",
    "full_grid",
    "poisson_logarithmic",
    "power_law_first_kind",
    "power_law_order_m",
    "poisson_heine",
    "PRESETS",
]

P_GRID = (0.15, 0.3, 0.45)
ALPHA_GRID = (0.3, 0.6, 0.9)
M_GRID = (1, 3)
Q_GRID = (0.4, 0.7)
LAMBDA_GRID = (0.5, 1.5)

FAMILIES = ("logarithmic", "bernoulli", "binomial", "poissonian_binomial", "heine", "poisson")


def family_grid(family: str) -> list[StationaryModel]:
    if family == "bernoulli":
        specs = [Bernoulli(p) for p in P_GRID]
    elif family == "binomial":
        specs = [Binomial(m, p) for m, p in product(M_GRID, P_GRID)]
    elif family == "poissonian_binomial":
        specs = [PoissonianBinomial(m, q, c) for m, q, c in product(M_GRID, Q_GRID, P_GRID)]
    elif family == "heine":
        specs = [Heine(lam, q) for lam, q in product(LAMBDA_GRID, Q_GRID)]
    elif family == "logarithmic":
        specs = [Logarithmic(p) for p in P_GRID]
    elif family == "poisson":
        specs = [Poisson(lam) for lam in LAMBDA_GRID]
    else:
        raise KeyError(family)
    return [StationaryModel(s, a) for s, a in product(specs, ALPHA_GRID)]


def full_grid() -> dict[str, list[StationaryModel]]:
    return {f: family_grid(f) for f in FAMILIES}


def poisson_logarithmic(lam: float, p: float) -> Convolution:
    """Poisson(lam) * Logarithmic(p)."""
    return Convolution((Poisson(lam), Logarithmic(p)))


def power_law_first_kind(lam: float, p: float) -> Convolution:
    """PL_1(lam, p) = Poisson(lam) * Bernoulli(p)."""
    return Convolution((Poisson(lam), Bernoulli(p)))


def power_law_order_m(lam: float, m: int, p: float) -> Convolution:
    """PL*_m(lam, p) = Poisson(lam) * Binomial(m, p)."""
    return Convolution((Poisson(lam), Binomial(m, p)))


def poisson_heine(lam1: float, lam: float, q: float) -> Convolution:
    """Poisson(lam1) * Heine(lam, q)."""
    return Convolution((Poisson(lam1), Heine(lam, q)))


# desk-scale models used for simulation checks and the CLI --preset flag
PRESETS: dict[str, StationaryModel] = {
    "bernoulli": StationaryModel(Bernoulli(0.2), 0.5),
    "binomial": StationaryModel(Binomial(3, 0.3), 0.5),
    "poissonian_binomial": StationaryModel(PoissonianBinomial(4, 0.6, 0.5), 0.5),
    "heine": StationaryModel(Heine(1.0, 0.5), 0.5),
    "logarithmic": StationaryModel(Logarithmic(0.5), 0.5),
    "poisson": StationaryModel(Poisson(1.0), 0.5),
    "poisson_logarithmic": StationaryModel(poisson_logarithmic(1.0, 0.5), 0.5),
    "pl1": StationaryModel(power_law_first_kind(1.0, 0.3), 0.5),
    "plm": StationaryModel(power_law_order_m(1.0, 3, 0.3), 0.5),
    "poisson_heine": StationaryModel(poisson_heine(0.5, 1.0, 0.5), 0.5),
}
