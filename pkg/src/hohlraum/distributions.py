"""Occupation and energy distributions of a thermal mode.

The geometric (Planck-Bose) occupation law with its characteristic function,
entropy and exact counting origin, the Poisson and two-valued component laws,
the exponential energy law of a classical mode, seeded samplers for all of
them, and the thermodynamic variance route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy.special import gammaln

__all__ = [
    "BinaryDist",
    "BinomialPoissonComparison",
    "BoseGeometric",
    "EnsembleStats",
    "ExponentialEnergy",
    "PoissonDist",
    "binomial_to_poisson_check",
    "bose_cf",
    "bose_entropy",
    "bose_pmf",
    "bose_variance",
    "ensemble_stats",
    "exponential_energy_fluct",
    "planck_bose_from_counting",
    "sample_binary",
    "sample_bose",
    "sample_exponential",
    "sample_poisson",
    "thermo_variance",
]

_DEFAULT_K = 1.381e-16  # erg/grad, matches spectral.CGS.k


# ---------------------------------------------------------------------------
# distribution values
# ---------------------------------------------------------------------------

def bose_pmf(n, n_bar: float):
    """P(occupation = n) = (1-b) b^n with b = n_bar/(1+n_bar).

    Evaluated in log space so large n does not underflow prematurely.
    Accepts scalars or integer arrays.
    """
    if n_bar <= 0:
        raise ValueError("n_bar must be positive")
    n_arr = np.asarray(n)
    if np.any(n_arr < 0):
        raise ValueError("occupation numbers are non-negative")
    log_b = math.log(n_bar) - math.log1p(n_bar)
    log_one_minus_b = -math.log1p(n_bar)
    out = np.exp(log_one_minus_b + n_arr * log_b)
    return float(out) if np.isscalar(n) else out


def bose_variance(n_bar: float) -> float:
    """Occupation variance n_bar + n_bar^2 of the geometric law."""
    return n_bar + n_bar * n_bar


def bose_cf(t, b: float):
    """Characteristic function (1-b) / (1 - b e^{it}) of the geometric law."""
    if not 0.0 < b < 1.0:
        raise ValueError("b must lie in (0, 1)")
    t_arr = np.asarray(t, dtype=float)
    out = (1.0 - b) / (1.0 - b * np.exp(1j * t_arr))
    return complex(out) if np.isscalar(t) else out


def bose_entropy(n_bar: float) -> float:
    """Mode entropy (1+n)log(1+n) - n log(n) in units of k."""
    if n_bar <= 0:
        raise ValueError("n_bar must be positive")
    return (1.0 + n_bar) * math.log1p(n_bar) - n_bar * math.log(n_bar)


def exponential_energy_fluct(mean: float) -> float:
    """Energy variance of an exponentially distributed mode energy: mean^2."""
    if mean < 0:
        raise ValueError("mean energy must be non-negative")
    return mean * mean


def thermo_variance(
    energy_of_T: Callable[[float], float], T: float, k: float = _DEFAULT_K
) -> float:
    """Energy variance k T^2 dE/dT from the temperature dependence alone.

    The derivative is a central difference with step T*1e-5, which balances
    truncation against round-off for double precision.
    """
    if T <= 0:
        raise ValueError("T must be positive")
    dT = T * 1e-5
    hi = energy_of_T(T + dT)
    lo = energy_of_T(T - dT)
    if not (math.isfinite(hi) and math.isfinite(lo)):
        raise ValueError("energy_of_T returned a non-finite value near T")
    return k * T * T * (hi - lo) / (2.0 * dT)


# ---------------------------------------------------------------------------
# distribution objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoseGeometric:
    """Geometric occupation law with parameter b in (0, 1)."""

    b: float

    def __post_init__(self):
        if not 0.0 < self.b < 1.0:
            raise ValueError("b must lie in (0, 1)")

    @classmethod
    def from_n_bar(cls, n_bar: float) -> "BoseGeometric":
        return cls(b=n_bar / (1.0 + n_bar))

    @property
    def n_bar(self) -> float:
        return self.b / (1.0 - self.b)

    def pmf(self, n):
        return bose_pmf(n, self.n_bar)

    def cf(self, t):
        return bose_cf(t, self.b)

    def entropy(self) -> float:
        return bose_entropy(self.n_bar)

    @property
    def mean(self) -> float:
        return self.n_bar

    @property
    def variance(self) -> float:
        return bose_variance(self.n_bar)

    def sample(self, rng: np.random.Generator, size=None):
        return sample_bose(self.n_bar, rng, size)


@dataclass(frozen=True)
class PoissonDist:
    """Poisson law with rate lam >= 0."""

    lam: float

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError("lam must be non-negative")

    def pmf(self, n):
        n_arr = np.asarray(n)
        if self.lam == 0.0:
            out = np.where(n_arr == 0, 1.0, 0.0)
        else:
            out = np.exp(n_arr * math.log(self.lam) - self.lam - gammaln(n_arr + 1.0))
        return float(out) if np.isscalar(n) else out

    mean = property(lambda self: self.lam)
    variance = property(lambda self: self.lam)

    def sample(self, rng: np.random.Generator, size=None):
        return sample_poisson(self.lam, rng, size)


@dataclass(frozen=True)
class BinaryDist:
    """Two-valued law on {0, weight} with P(weight) = p1."""

    p1: float
    weight: int

    def __post_init__(self):
        if not 0.0 <= self.p1 <= 1.0:
            raise ValueError("p1 must lie in [0, 1]")
        if self.weight < 1:
            raise ValueError("weight must be a positive integer")

    @property
    def mean(self) -> float:
        return self.weight * self.p1

    @property
    def variance(self) -> float:
        return self.weight**2 * self.p1 * (1.0 - self.p1)

    def entropy(self) -> float:
        """Shannon entropy in units of k."""
        p = self.p1
        if p in (0.0, 1.0):
            return 0.0
        return -(p * math.log(p) + (1.0 - p) * math.log1p(-p))

    def sample(self, rng: np.random.Generator, size=None):
        return sample_binary(self.p1, self.weight, rng, size)


@dataclass(frozen=True)
class ExponentialEnergy:
    """Exponential energy law of a classical thermal mode."""

    mean_energy: float

    def __post_init__(self):
        if self.mean_energy <= 0:
            raise ValueError("mean energy must be positive")

    def pdf(self, e):
        e_arr = np.asarray(e, dtype=float)
        out = np.exp(-e_arr / self.mean_energy) / self.mean_energy
        return float(out) if np.isscalar(e) else out

    mean = property(lambda self: self.mean_energy)
    variance = property(lambda self: self.mean_energy**2)

    def sample(self, rng: np.random.Generator, size=None):
        return sample_exponential(self.mean_energy, rng, size)


# ---------------------------------------------------------------------------
# samplers (single deterministic uniform stream per generator)
# ---------------------------------------------------------------------------

def sample_bose(n_bar: float, rng: np.random.Generator, size=None):
    """Geometric occupation draw(s) by inverting one uniform per sample."""
    if n_bar <= 0:
        raise ValueError("n_bar must be positive")
    log_b = math.log(n_bar) - math.log1p(n_bar)
    u = rng.random(size)
    # P(n >= k) = b^k, so n = floor(log u / log b); u in (0,1) keeps log finite
    n = np.floor(np.log1p(-u) / log_b)
    if size is None:
        return int(n)
    return n.astype(np.int64)


def _poisson_inversion(lam: float, rng: np.random.Generator, count: int) -> np.ndarray:
    """Vectorized inversion-by-search, adequate for lam < 10."""
    u = rng.random(count)
    p = np.full(count, math.exp(-lam))
    cdf = p.copy()
    k = np.zeros(count, dtype=np.int64)
    active = u > cdf
    while np.any(active):
        k[active] += 1
        p[active] *= lam / k[active]
        cdf[active] += p[active]
        active = u > cdf
    return k


def _poisson_ptrs(lam: float, rng: np.random.Generator, count: int) -> np.ndarray:
    """Transformed-rejection sampler for lam >= 10, batched over rejections."""
    b = 0.931 + 2.53 * math.sqrt(lam)
    a = -0.059 + 0.02483 * b
    inv_alpha = 1.1239 + 1.1328 / (b - 3.4)
    v_r = 0.9277 - 3.6224 / (b - 2.0)
    log_lam = math.log(lam)

    out = np.empty(count, dtype=np.int64)
    filled = 0
    while filled < count:
        todo = count - filled
        u = rng.random(todo) - 0.5
        v = rng.random(todo)
        us = 0.5 - np.abs(u)
        k = np.floor((2.0 * a / us + b) * u + lam + 0.43)

        accept = (us >= 0.07) & (v <= v_r)
        maybe = ~accept & (k >= 0) & ~((us < 0.013) & (v > us))
        if np.any(maybe):
            km = k[maybe]
            lhs = np.log(v[maybe] * inv_alpha / (a / us[maybe] ** 2 + b))
            rhs = km * log_lam - lam - gammaln(km + 1.0)
            accept_m = lhs <= rhs
            idx = np.flatnonzero(maybe)[accept_m]
            sel = np.zeros(todo, dtype=bool)
            sel[idx] = True
            accept |= sel
        taken = k[accept].astype(np.int64)
        out[filled : filled + taken.size] = taken
        filled += taken.size
    return out


def sample_poisson(lam: float, rng: np.random.Generator, size=None):
    """Poisson draw(s): inversion below lam = 10, transformed rejection above."""
    if lam < 0:
        raise ValueError("lam must be non-negative")
    count = 1 if size is None else int(np.prod(size))
    if lam == 0.0:
        n = np.zeros(count, dtype=np.int64)
    elif lam < 10.0:
        n = _poisson_inversion(lam, rng, count)
    else:
        n = _poisson_ptrs(lam, rng, count)
    if size is None:
        return int(n[0])
    return n.reshape(size)


def sample_binary(p1: float, weight: int, rng: np.random.Generator, size=None):
    """Draw(s) from {0, weight} with a single uniform compare per sample."""
    if not 0.0 <= p1 <= 1.0:
        raise ValueError("p1 must lie in [0, 1]")
    u = rng.random(size)
    n = np.where(u < p1, weight, 0)
    if size is None:
        return int(n)
    return n.astype(np.int64)


def sample_exponential(mean: float, rng: np.random.Generator, size=None):
    """Exponential energy draw(s) via -mean * log(u)."""
    if mean <= 0:
        raise ValueError("mean must be positive")
    u = rng.random(size)
    e = -mean * np.log1p(-u)
    if size is None:
        return float(e)
    return e


# ---------------------------------------------------------------------------
# sample statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnsembleStats:
    """First two sample moments with their own standard errors."""

    n_samples: int
    mean: float
    variance: float
    std_error_mean: float
    std_error_variance: float
    seed: int

    def __post_init__(self):
        if self.n_samples < 2:
            raise ValueError("need at least two samples")
        if self.variance < 0:
            raise ValueError("variance cannot be negative")


def ensemble_stats(samples: np.ndarray, seed: int) -> EnsembleStats:
    """Summarize samples; the variance error uses the fourth central moment."""
    x = np.asarray(samples, dtype=float)
    n = x.size
    mean = float(x.mean())
    d = x - mean
    var = float(np.dot(d, d) / (n - 1))
    m4 = float(np.mean(d**4))
    # var(s^2) ~ (m4 - var^2)/n for large n
    se_var = math.sqrt(max(m4 - var * var, 0.0) / n)
    return EnsembleStats(
        n_samples=n,
        mean=mean,
        variance=var,
        std_error_mean=math.sqrt(var / n),
        std_error_variance=se_var,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# limit checks and counting origin
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinomialPoissonComparison:
    """Exact total-variation distance between Binomial(N0, q) and Poisson(N0 q)."""

    n0: int
    ratio: float
    lam: float
    tv_distance: float


def binomial_to_poisson_check(n0: int, ratio: float) -> BinomialPoissonComparison:
    """Rare-occupancy limit: TV(Binomial(n0, ratio), Poisson(n0*ratio)).

    Both pmfs are evaluated exactly over the binomial support; the Poisson
    tail mass beyond n0 is charged to the distance in full.
    """
    if n0 < 1:
        raise ValueError("n0 must be at least 1")
    if not 0.0 < ratio < 1.0:
        raise ValueError("ratio must lie in (0, 1)")
    lam = n0 * ratio
    k = np.arange(n0 + 1, dtype=float)
    log_binom = (
        gammaln(n0 + 1.0)
        - gammaln(k + 1.0)
        - gammaln(n0 - k + 1.0)
        + k * math.log(ratio)
        + (n0 - k) * math.log1p(-ratio)
    )
    log_pois = k * math.log(lam) - lam - gammaln(k + 1.0)
    p = np.exp(log_binom)
    q = np.exp(log_pois)
    tail = max(0.0, 1.0 - float(q.sum()))
    tv = 0.5 * (float(np.abs(p - q).sum()) + tail)
    return BinomialPoissonComparison(n0=n0, ratio=ratio, lam=lam, tv_distance=tv)


def planck_bose_from_counting(N: int, P: int, n: int) -> Fraction:
    """Probability that one of N modes holds exactly n of P quanta.

    Exact rational ratio of the two combination-with-repetition counts; the
    oscillator count and the mode count are treated interchangeably.  For
    n > P the probability is zero (not an error).
    """
    if N < 2:
        raise ValueError("need at least two modes")
    if P < 0 or n < 0:
        raise ValueError("quanta counts are non-negative")
    if n > P:
        return Fraction(0)
    ways_rest = math.comb(N - 2 + P - n, P - n)
    ways_all = math.comb(N + P - 1, P)
    return Fraction(ways_rest, ways_all)
