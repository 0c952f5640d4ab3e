"""Finite probability vectors and the array operations shared by all modules."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .errors import DomainError, NumericalError

__all__ = ["DiscretePmf", "trim_tail", "convolve", "binomial_thin", "clean_probs"]

NEG_GUARD = 1e-12


def clean_probs(probs) -> np.ndarray:
    """Clamp round-off negatives in ``[-1e-12, 0)`` to zero; reject anything worse."""
    arr = np.array(probs, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("a pmf must be a non-empty 1-d sequence")
    if not np.all(np.isfinite(arr)):
        raise NumericalError("non-finite probability")
    bad = arr < -NEG_GUARD
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        raise NumericalError(f"probability at k={k} is {arr[k]:.3e}; round-off exceeded the guard")
    np.clip(arr, 0.0, None, out=arr)
    over = arr > 1.0 + NEG_GUARD
    if over.any():
        k = int(np.flatnonzero(over)[0])
        raise NumericalError(f"probability at k={k} exceeds one: {arr[k]!r}")
    np.clip(arr, None, 1.0, out=arr)
    return arr


def trim_tail(probs: np.ndarray, eps: float) -> np.ndarray:
    """Drop the longest suffix whose total mass is at most ``eps`` (index 0 is always kept)."""
    probs = np.asarray(probs, dtype=float)
    if probs.size <= 1:
        return probs
    suffix = np.cumsum(probs[::-1])[::-1]
    small = np.flatnonzero(suffix[1:] <= eps)
    if small.size == 0:
        return probs
    return probs[: small[0] + 1]


def convolve(a: np.ndarray, b: np.ndarray, eps: float = 0.0) -> np.ndarray:
    """Convolution of two probability vectors, optionally trimming a tail of mass <= eps."""
    out = np.convolve(a, b)
    np.clip(out, 0.0, None, out=out)
    return trim_tail(out, eps) if eps > 0 else out


def binomial_thin(probs: np.ndarray, a: float) -> np.ndarray:
    """pmf of ``a (.) X`` when X has pmf ``probs``: sum_n probs[n] * Binomial(n, a).

    The result has the same support length and the same total mass as the input.
    """
    probs = np.asarray(probs, dtype=float)
    if a == 1.0:
        return probs.copy()
    n = np.arange(probs.size)
    kernel = stats.binom.pmf(n[None, :], n[:, None], a)
    return probs @ kernel


@dataclass(frozen=True, eq=False)
class DiscretePmf:
    """Probabilities on {0, ..., K} plus the mass left unrepresented beyond K.

    ``tail_bound`` is the complement ``1 - sum(probs)`` (never negative), so
    that probabilities and tail together account for the full unit mass.
    """

    probs: np.ndarray
    tail_bound: float = field(default=-1.0)
    origin: str = ""

    def __post_init__(self):
        arr = clean_probs(self.probs)
        arr.setflags(write=False)
        object.__setattr__(self, "probs", arr)
        total = math.fsum(arr)
        if total > 1.0 + 1e-9:
            raise NumericalError(f"pmf '{self.origin}' has total mass {total!r} > 1")
        tail = self.tail_bound
        if tail < 0:
            tail = max(0.0, 1.0 - total)
        object.__setattr__(self, "tail_bound", float(tail))

    @property
    def K(self) -> int:
        """Largest represented value."""
        return self.probs.size - 1

    def __len__(self) -> int:
        return self.probs.size

    def __getitem__(self, k: int) -> float:
        return float(self.probs[k]) if 0 <= k < self.probs.size else 0.0

    def total(self) -> float:
        return math.fsum(self.probs)

    def support(self) -> np.ndarray:
        return np.arange(self.probs.size)

    def mean(self) -> float:
        return math.fsum(self.support() * self.probs)

    def variance(self) -> float:
        k = self.support()
        m = self.mean()
        return math.fsum((k - m) ** 2 * self.probs)

    def dispersion_index(self) -> float:
        return self.variance() / self.mean()

    def pgf(self, z):
        """sum_k p_k z^k, evaluated by Horner's rule (vectorised over ``z``)."""
        z = np.asarray(z, dtype=float)
        acc = np.zeros_like(z)
        for p in self.probs[::-1]:
            acc = acc * z + p
        return acc if acc.ndim else float(acc)

    def cdf(self) -> np.ndarray:
        return np.cumsum(self.probs)

    def padded(self, size: int) -> np.ndarray:
        """Probabilities on {0, ..., size-1}, zero-filled or cut as needed."""
        out = np.zeros(size)
        n = min(size, self.probs.size)
        out[:n] = self.probs[:n]
        return out

    def __repr__(self) -> str:
        head = ", ".join(f"{p:.6g}" for p in self.probs[:6])
        more = ", ..." if self.probs.size > 6 else ""
        return f"DiscretePmf([{head}{more}], K={self.K}, tail_bound={self.tail_bound:.2e}, origin={self.origin!r})"
