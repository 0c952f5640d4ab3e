"""Stationary INAR(1) count time series built backwards from the innovation law.

The modules are layered: ``innovations`` (innovation families), ``marginal``
(stationary marginal pmf/pgf/moments), ``process`` (simulation and
transition kernels), ``combinatorics`` (Stirling numbers and moment
conversions) and ``validation`` (oracles and check suites).
"""

from .combinatorics import MomentVector, convert, stirling_first_signed, stirling_second
from .errors import DomainError, NumericalError
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
from .marginal import (
    MarginalDistribution,
    MomentReport,
    StationaryModel,
    marginal_moments,
    marginal_pgf,
    marginal_pmf,
    pcpd_representation,
)
from .pmf import DiscretePmf
from .process import k_step_conditional, simulate, transition_prob, transition_row

__version__ = "0.1.0"

__all__ = [
    "MomentVector",
    "convert",
    "stirling_first_signed",
    "stirling_second",
    "DomainError",
    "NumericalError",
    "InnovationSpec",
    "Logarithmic",
    "Bernoulli",
    "Binomial",
    "PoissonianBinomial",
    "Heine",
    "Poisson",
    "Convolution",
    "StationaryModel",
    "MarginalDistribution",
    "MomentReport",
    "marginal_pgf",
    "marginal_pmf",
    "marginal_moments",
    "pcpd_representation",
    "DiscretePmf",
    "simulate",
    "transition_prob",
    "transition_row",
    "k_step_conditional",
]
