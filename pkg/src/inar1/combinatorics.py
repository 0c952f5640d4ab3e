"""Stirling numbers and conversions between moment-type sequences.

Four representations of the low-order structure of a count distribution
are used throughout the package:

* ``moments``             mu_r    = E[X^r]
* ``factorial_moments``   mu_[r]  = E[X (X-1) ... (X-r+1)]
* ``cumulants``           kappa_r,   coefficients of t^r/r! in ln E[e^{tX}]
* ``factorial_cumulants`` kappa_[r], coefficients of t^r/r! in ln E[(1+t)^X]

Vectors are dense and start at order 1; the order-0 values (mu_0 = 1,
kappa_0 = 0) are implicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Literal

import numpy as np

from .errors import DomainError

__all__ = [
    "R_MAX",
    "MomentVector",
    "stirling_second",
    "stirling_second_sum",
    "stirling_first_signed",
    "stirling_table",
    "cumulants_from_factorial_cumulants",
    "factorial_cumulants_from_cumulants",
    "moments_from_factorial_moments",
    "factorial_moments_from_moments",
    "cumulants_from_moments",
    "moments_from_cumulants",
    "convert",
]

R_MAX = 25

MomentKind = Literal["moments", "factorial_moments", "cumulants", "factorial_cumulants"]
KINDS = ("moments", "factorial_moments", "cumulants", "factorial_cumulants")


@dataclass(frozen=True)
class MomentVector:
    """Orders 1..R of one moment-type sequence."""

    kind: MomentKind
    values: tuple[float, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown moment kind {self.kind!r}")
        vals = tuple(float(v) for v in self.values)
        if len(vals) < 1:
            raise DomainError("a moment vector needs at least order 1")
        if not all(np.isfinite(vals)):
            raise DomainError(f"non-finite entry in {self.kind}: {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def order(self) -> int:
        return len(self.values)

    def __getitem__(self, r: int) -> float:
        """Value of order ``r`` (1-based, matching the usual notation)."""
        if not 1 <= r <= len(self.values):
            raise IndexError(f"order {r} outside 1..{len(self.values)}")
        return self.values[r - 1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


@lru_cache(maxsize=None)
def _tables() -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    # exact integer triangles, rows 0..R_MAX
    second = [[0] * (R_MAX + 1) for _ in range(R_MAX + 1)]
    first = [[0] * (R_MAX + 1) for _ in range(R_MAX + 1)]
    second[0][0] = 1
    first[0][0] = 1
    for r in range(R_MAX):
        for j in range(1, r + 2):
            second[r + 1][j] = j * second[r][j] + second[r][j - 1]
            first[r + 1][j] = first[r][j - 1] - r * first[r][j]
    return tuple(map(tuple, second)), tuple(map(tuple, first))


def _check_indices(r: int, j: int) -> None:
    if not (isinstance(r, (int, np.integer)) and isinstance(j, (int, np.integer))):
        raise DomainError(f"Stirling indices must be integers, got ({r!r}, {j!r})")
    if not 0 <= j <= r <= R_MAX:
        raise DomainError(f"Stirling indices need 0 <= j <= r <= {R_MAX}, got ({r}, {j})")


def stirling_second(r: int, j: int) -> int:
    """Stirling number of the second kind S(r, j)."""
    _check_indices(r, j)
    return _tables()[0][r][j]


def stirling_second_sum(r: int, j: int) -> int:
    """S(r, j) from the explicit alternating sum (1/j!) sum_k (-1)^(j-k) C(j,k) k^r.

    Exact integer arithmetic; used to cross-check the recurrence table.
    """
    _check_indices(r, j)
    if r == 0 and j == 0:
        return 1
    if j == 0:
        return 0
    total = sum((-1) ** (j - k) * comb(j, k) * k**r for k in range(j + 1))
    fact = 1
    for i in range(2, j + 1):
        fact *= i
    q, rem = divmod(total, fact)
    assert rem == 0
    return q


def stirling_first_signed(r: int, j: int) -> int:
    """Signed Stirling number of the first kind s(r, j).

    Built from s(r+1, j) = s(r, j-1) - r s(r, j) with s(r, 0) = 0 for r >= 1
    and s(1, 1) = 1.
    """
    _check_indices(r, j)
    return _tables()[1][r][j]


def stirling_table(kind: Literal["second", "first_signed"], rmax: int) -> np.ndarray:
    """Triangular table ``T[r, j]`` for 0 <= j <= r <= rmax as an object array of ints."""
    if not 0 <= rmax <= R_MAX:
        raise DomainError(f"rmax must lie in 0..{R_MAX}")
    if kind not in ("second", "first_signed"):
        raise DomainError(f"unknown Stirling kind {kind!r}")
    src = _tables()[0 if kind == "second" else 1]
    out = np.zeros((rmax + 1, rmax + 1), dtype=object)
    for r in range(rmax + 1):
        for j in range(r + 1):
            out[r, j] = src[r][j]
    return out


def _expect(vec: MomentVector, kind: str) -> list[float]:
    if not isinstance(vec, MomentVector):
        raise DomainError(f"expected a MomentVector of kind {kind!r}")
    if vec.kind != kind:
        raise DomainError(f"expected {kind}, got {vec.kind}")
    if vec.order > R_MAX:
        raise DomainError(f"orders above {R_MAX} are not supported")
    return list(vec.values)


def _apply_triangle(values: list[float], table) -> list[float]:
    # out_r = sum_{j=1..r} T(r, j) * v_j ; the j = 0 column multiplies an implicit 0
    out = []
    for r in range(1, len(values) + 1):
        row = table[r]
        out.append(float(sum(float(row[j]) * values[j - 1] for j in range(1, r + 1))))
    return out


def cumulants_from_factorial_cumulants(fc: MomentVector) -> MomentVector:
    """kappa_r = sum_j S(r, j) kappa_[j]."""
    vals = _expect(fc, "factorial_cumulants")
    return MomentVector("cumulants", _apply_triangle(vals, _tables()[0]))


def factorial_cumulants_from_cumulants(c: MomentVector) -> MomentVector:
    """kappa_[r] = sum_j s(r, j) kappa_j, with kappa_0 = 0."""
    vals = _expect(c, "cumulants")
    return MomentVector("factorial_cumulants", _apply_triangle(vals, _tables()[1]))


def moments_from_factorial_moments(fm: MomentVector) -> MomentVector:
    """mu_r = sum_j S(r, j) mu_[j]."""
    vals = _expect(fm, "factorial_moments")
    return MomentVector("moments", _apply_triangle(vals, _tables()[0]))


def factorial_moments_from_moments(m: MomentVector) -> MomentVector:
    """mu_[r] = sum_{j=0..r} s(r, j) mu_j.

    The j = 0 term vanishes for r >= 1 because s(r, 0) = 0, so mu_0 = 1 never
    contributes.
    """
    vals = _expect(m, "moments")
    return MomentVector("factorial_moments", _apply_triangle(vals, _tables()[1]))


def cumulants_from_moments(m: MomentVector) -> MomentVector:
    """Recursive raw-moment to cumulant conversion.

    kappa_r = mu_r - sum_{i=1..r-1} C(r-1, i) kappa_{r-i} mu_i
    """
    mu = _expect(m, "moments")
    kappa: list[float] = []
    for r in range(1, len(mu) + 1):
        acc = mu[r - 1]
        for i in range(1, r):
            acc -= comb(r - 1, i) * kappa[r - i - 1] * mu[i - 1]
        kappa.append(acc)
    return MomentVector("cumulants", kappa)


def moments_from_cumulants(c: MomentVector) -> MomentVector:
    """mu_r = sum_{j=0..r-1} C(r-1, j) kappa_{r-j} mu_j with mu_0 = 1."""
    kappa = _expect(c, "cumulants")
    mu = [1.0]
    for r in range(1, len(kappa) + 1):
        mu.append(sum(comb(r - 1, j) * kappa[r - j - 1] * mu[j] for j in range(r)))
    return MomentVector("moments", mu[1:])


# kind -> kind single-step conversions; every pair is reachable through these
_EDGES = {
    ("factorial_moments", "moments"): moments_from_factorial_moments,
    ("moments", "factorial_moments"): factorial_moments_from_moments,
    ("moments", "cumulants"): cumulants_from_moments,
    ("cumulants", "moments"): moments_from_cumulants,
    ("cumulants", "factorial_cumulants"): factorial_cumulants_from_cumulants,
    ("factorial_cumulants", "cumulants"): cumulants_from_factorial_cumulants,
}

_ROUTES = {
    ("factorial_moments", "cumulants"): ("moments",),
    ("factorial_moments", "factorial_cumulants"): ("moments", "cumulants"),
    ("moments", "factorial_cumulants"): ("cumulants",),
    ("cumulants", "factorial_moments"): ("moments",),
    ("factorial_cumulants", "moments"): ("cumulants",),
    ("factorial_cumulants", "factorial_moments"): ("cumulants", "moments"),
}


def _hop(vec: MomentVector, to: str) -> MomentVector:
    out = vec
    for step in (*_ROUTES.get((vec.kind, to), ()), to):
        if out.kind != step:
            out = _EDGES[(out.kind, step)](out)
    return out


def convert(vec: MomentVector, to: MomentKind, via: Iterable[MomentKind] | None = None) -> MomentVector:
    """Convert ``vec`` to kind ``to``, optionally passing through the kinds in ``via``.

    Each hop between non-adjacent kinds follows the default route
    (factorial moments - moments - cumulants - factorial cumulants).
    """
    for kind in (*(via or ()), to):
        if kind not in KINDS:
            raise DomainError(f"unknown moment kind {kind!r}")
    out = vec
    for step in (*(via or ()), to):
        out = _hop(out, step)
    return out
