"""Splitting the geometric mode variable into independent components.

Two exact factorizations of the thermal occupation law: a countable family
of Poisson components where component m carries m quanta per event, and a
dyadic family of two-valued (exclusion-type) components where component s
carries 2^s quanta.  Both reproduce the geometric law exactly -- pmf,
characteristic function, variance and entropy -- and each yields a sampler
whose output is indistinguishable from direct geometric sampling.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from hohlraum.distributions import bose_entropy, bose_pmf, bose_variance

__all__ = [
    "BinaryPhotonSet",
    "DecompositionReport",
    "PoissonMultipletSet",
    "binary_energy_variance",
    "binary_entropy",
    "binary_photon_params",
    "cf_factorization_check",
    "dyadic_expansion",
    "exact_binary_pmf",
    "multiplet_energy_variance",
    "multiplet_entropy",
    "poisson_multiplet_params",
    "sample_bose_via_binary",
    "sample_bose_via_multiplets",
    "thermo_identity_check",
    "volume_entropy_difference",
]

# components with log firing probability below the double-precision floor
# can never fire and are dropped outright
_LOG_FLOOR = -745.0


# ---------------------------------------------------------------------------
# parameter sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PoissonMultipletSet:
    """Poisson components: component m fires with rate b^m / m and adds m quanta.

    Multiplet indices run 1..cutoff_m; the cutoff is the smallest M whose
    next rate drops below tol*(1-b), so every tail sum is below tol.
    """

    b: float
    tol: float
    cutoff_m: int
    lambdas: np.ndarray

    @property
    def m_values(self) -> np.ndarray:
        return np.arange(1, self.cutoff_m + 1)

    @property
    def n_bar(self) -> float:
        return self.b / (1.0 - self.b)


@dataclass(frozen=True)
class BinaryPhotonSet:
    """Two-valued components: component s adds 2^s quanta with probability p1(s).

    p1(s) = b^(2^s) / (1 + b^(2^s)) < 1/2, strictly decreasing in s; the
    cutoff is the smallest S with b^(2^(S+1)) < tol.
    """

    b: float
    tol: float
    cutoff_s: int
    p1s: np.ndarray

    @property
    def s_values(self) -> np.ndarray:
        return np.arange(self.cutoff_s + 1)

    @property
    def weights(self) -> np.ndarray:
        return 2 ** self.s_values

    @property
    def n_bar(self) -> float:
        return self.b / (1.0 - self.b)


def _check_b(b: float) -> None:
    if not 0.0 < b < 1.0:
        raise ValueError(f"b must lie in (0, 1), got {b}")


def poisson_multiplet_params(b: float, tol: float = 1e-14) -> PoissonMultipletSet:
    """Rates b^m/m for m = 1..cutoff, cutoff chosen from the tail bound."""
    _check_b(b)
    if tol <= 0:
        raise ValueError("tol must be positive")
    log_b = math.log(b)
    threshold = tol * (1.0 - b)
    cutoff = 1
    while True:
        nxt = (cutoff + 1) * log_b - math.log(cutoff + 1)
        if nxt < _LOG_FLOOR or math.exp(nxt) < threshold:
            break
        cutoff += 1
    m = np.arange(1, cutoff + 1, dtype=float)
    lambdas = np.exp(m * log_b - np.log(m))
    return PoissonMultipletSet(b=b, tol=tol, cutoff_m=cutoff, lambdas=lambdas)


def binary_photon_params(b: float, tol: float = 1e-14) -> BinaryPhotonSet:
    """Firing probabilities p1(s) for s = 0..cutoff, cutoff from b^(2^(S+1)) < tol."""
    _check_b(b)
    if tol <= 0:
        raise ValueError("tol must be positive")
    log_b = math.log(b)
    cutoff = 0
    while True:
        nxt = 2.0 ** (cutoff + 1) * log_b
        if nxt < _LOG_FLOOR or math.exp(nxt) < tol:
            break
        cutoff += 1
    s = np.arange(cutoff + 1)
    log_bw = (2.0**s) * log_b
    # p1 = b^w / (1 + b^w), stable for tiny b^w
    p1s = np.exp(log_bw - np.log1p(np.exp(log_bw)))
    return BinaryPhotonSet(b=b, tol=tol, cutoff_s=cutoff, p1s=p1s)


# ---------------------------------------------------------------------------
# exact reconstruction checks
# ---------------------------------------------------------------------------

def dyadic_expansion(n: int) -> set[int]:
    """Bit positions of n: the unique set of component indices with sum 2^s = n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return {s for s in range(max(n.bit_length(), 1)) if n >> s & 1}


def exact_binary_pmf(n: int, b: float) -> float:
    """Reconstruct P(occupation = n) from the two-valued components alone.

    Product of p1(s) over set bits of n and p0(s) over the unset bits,
    truncated where b^(2^s) underflows; equals (1-b) b^n.
    """
    _check_b(b)
    if n < 0:
        raise ValueError("n must be non-negative")
    log_b = math.log(b)
    bits = dyadic_expansion(n)
    out = 1.0
    s = 0
    while True:
        log_bw = 2.0**s * log_b
        if log_bw < _LOG_FLOOR and s > max(bits, default=0):
            break
        bw = math.exp(log_bw)
        if s in bits:
            out *= bw / (1.0 + bw)
        else:
            out *= 1.0 / (1.0 + bw)
        s += 1
    return out


def cf_factorization_check(
    b: float, t_grid: Sequence[float], tol: float = 1e-14
) -> dict[str, float]:
    """Largest deviation of both component products from the geometric CF.

    Compares (1-b)/(1-b e^{it}) against prod_s of the two-valued factors and
    against prod_m exp(lambda_m (e^{imt}-1)) on the given grid.
    """
    _check_b(b)
    t = np.asarray(t_grid, dtype=float)
    target = (1.0 - b) / (1.0 - b * np.exp(1j * t))

    binary = binary_photon_params(b, tol)
    w = binary.weights[:, None]
    bw = b ** w.astype(float)
    binary_prod = np.prod((1.0 + bw * np.exp(1j * w * t[None, :])) / (1.0 + bw), axis=0)

    multi = poisson_multiplet_params(b, tol)
    m = multi.m_values[:, None].astype(float)
    lam = multi.lambdas[:, None]
    log_factors = lam * (np.exp(1j * m * t[None, :]) - 1.0)
    multiplet_prod = np.exp(log_factors.sum(axis=0))

    return {
        "binary_residual": float(np.max(np.abs(target - binary_prod))),
        "multiplet_residual": float(np.max(np.abs(target - multiplet_prod))),
    }


# ---------------------------------------------------------------------------
# samplers
# ---------------------------------------------------------------------------

def sample_bose_via_multiplets(
    mset: PoissonMultipletSet, rng: np.random.Generator, size=None
):
    """Occupation draw(s) as sum over m of m * Poisson(b^m/m) components.

    Components are drawn in ascending m so fixed seeds reproduce bitwise.
    All rates are below one, so vectorized inversion is exact and fast.
    """
    count = 1 if size is None else int(np.prod(size))
    total = np.zeros(count, dtype=np.int64)
    for m, lam in zip(mset.m_values, mset.lambdas):
        u = rng.random(count)
        p = math.exp(-lam)
        cdf = np.full(count, p)
        k = np.zeros(count, dtype=np.int64)
        active = u > cdf
        pk = np.full(count, p)
        while np.any(active):
            k[active] += 1
            pk[active] *= lam / k[active]
            cdf[active] += pk[active]
            active = u > cdf
        total += m * k
    if size is None:
        return int(total[0])
    return total.reshape(size)


def sample_bose_via_binary(
    bset: BinaryPhotonSet, rng: np.random.Generator, size=None
):
    """Occupation draw(s) as sum over s of 2^s * (two-valued component s)."""
    count = 1 if size is None else int(np.prod(size))
    total = np.zeros(count, dtype=np.int64)
    for s, p1 in zip(bset.s_values, bset.p1s):
        u = rng.random(count)
        total += (u < p1).astype(np.int64) << int(s)
    if size is None:
        return int(total[0])
    return total.reshape(size)


# ---------------------------------------------------------------------------
# energy, variance, entropy bookkeeping
# ---------------------------------------------------------------------------

def multiplet_energy_variance(
    mset: PoissonMultipletSet, h_nu: float = 1.0
) -> tuple[np.ndarray, np.ndarray]:
    """Per-component mean energies h*nu*b^m and variances m*h*nu*E_m.

    The component energies fluctuate in a purely particle-like way; their
    variances sum to the full (h*nu)^2 (n_bar + n_bar^2).
    """
    if h_nu <= 0:
        raise ValueError("h_nu must be positive")
    m = mset.m_values.astype(float)
    means = h_nu * mset.b**m
    variances = m * h_nu * means
    return means, variances


def binary_energy_variance(
    bset: BinaryPhotonSet, h_nu: float = 1.0
) -> tuple[np.ndarray, np.ndarray]:
    """Per-component mean energies 2^s h*nu n_s and variances 2^s h*nu E_s - E_s^2.

    n_s = 1/(e^(2^s x) + 1) is the zero-chemical-potential exclusion form; the
    quadratic term enters with a negative sign, yet the total still sums to
    the full two-term variance.
    """
    if h_nu <= 0:
        raise ValueError("h_nu must be positive")
    w = bset.weights.astype(float)
    means = w * h_nu * bset.p1s
    variances = w * h_nu * means - means**2
    return means, variances


def multiplet_entropy(mset: PoissonMultipletSet) -> tuple[np.ndarray, float]:
    """Component entropies (1/m)(x_m - x_m log x_m) with x_m = b^m, and their sum.

    The total converges from below to the mode entropy, so the components are
    thermodynamically independent.
    """
    m = mset.m_values.astype(float)
    x_m = mset.b**m
    s_m = (x_m - x_m * np.log(x_m)) / m
    return s_m, float(s_m.sum())


def binary_entropy(bset: BinaryPhotonSet) -> tuple[np.ndarray, float]:
    """Two-level component entropies -[(1-n)log(1-n) + n log n] and their sum."""
    n_s = bset.p1s
    s_s = -((1.0 - n_s) * np.log1p(-n_s) + n_s * np.log(n_s))
    return s_s, float(s_s.sum())


def thermo_identity_check(
    kind: str, x: float, indices: Sequence[int], h_nu: float = 1.0, k: float = 1.0
) -> float:
    """Max relative residual of dS/dE = 1/T over the given component indices.

    Differentiates the closed-form component entropy with respect to the
    component energy by central differences and compares against 1/T implied
    by x = h*nu/(k*T).  Works in the stated units, so 1/T = x*k/h_nu.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    b = math.exp(-x)
    inv_T = x * k / h_nu
    worst = 0.0
    for idx in indices:
        if kind == "poisson":
            if idx < 1:
                raise ValueError("multiplet indices start at 1")
            m = float(idx)
            energy = h_nu * b**m

            def entropy_of(e: float, m=m) -> float:
                r = e / (m * h_nu)
                return k * (r - r * math.log(e / h_nu))

        elif kind == "binary":
            if idx < 0:
                raise ValueError("component indices start at 0")
            w = 2.0 ** float(idx)
            energy = w * h_nu / (math.exp(w * x) + 1.0)

            def entropy_of(e: float, w=w) -> float:
                occ = e / (w * h_nu)
                return -k * ((1.0 - occ) * math.log1p(-occ) + occ * math.log(occ))

        else:
            raise ValueError(f"kind must be 'poisson' or 'binary', got {kind!r}")

        de = energy * 1e-6
        deriv = (entropy_of(energy + de) - entropy_of(energy - de)) / (2.0 * de)
        worst = max(worst, abs(deriv - inv_T) / inv_T)
    return worst


def volume_entropy_difference(
    m: int, E_total: float, V: float, V0: float, h_nu: float = 1.0
) -> float:
    """Entropy drop (units of k) when component-m radiation concentrates in V < V0.

    Equals (E_total/(m h*nu)) * log(V/V0): the log of the geometric
    probability (V/V0)^l for l independent carriers of m quanta each.
    """
    if m < 1:
        raise ValueError("multiplet index starts at 1")
    if E_total <= 0 or h_nu <= 0:
        raise ValueError("energies must be positive")
    if not 0.0 < V < V0:
        raise ValueError("need 0 < V < V0")
    carriers = E_total / (m * h_nu)
    return carriers * math.log(V / V0)


# ---------------------------------------------------------------------------
# reporting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecompositionReport:
    """Component bookkeeping plus residuals against the direct mode values.

    Energies are in units of h*nu (dimensionless) so the identities are free
    of constant-rounding noise; multiply by h*nu in erg when needed.
    """

    kind: str
    b: float
    tol: float
    component_means: tuple[float, ...]
    component_variances: tuple[float, ...]
    component_entropies: tuple[float, ...]
    totals: dict[str, float]
    residuals: dict[str, float]

    @classmethod
    def build(cls, kind: str, b: float, tol: float = 1e-14) -> "DecompositionReport":
        if kind == "poisson":
            pset = poisson_multiplet_params(b, tol)
            means, variances = multiplet_energy_variance(pset)
            entropies, s_total = multiplet_entropy(pset)
        elif kind == "binary":
            bset = binary_photon_params(b, tol)
            means, variances = binary_energy_variance(bset)
            entropies, s_total = binary_entropy(bset)
        else:
            raise ValueError(f"kind must be 'poisson' or 'binary', got {kind!r}")
        n_bar = b / (1.0 - b)
        totals = {
            "mean": float(means.sum()),
            "variance": float(variances.sum()),
            "entropy": s_total,
        }
        residuals = {
            "mean": abs(totals["mean"] - n_bar),
            "variance": abs(totals["variance"] - bose_variance(n_bar)),
            "entropy": abs(totals["entropy"] - bose_entropy(n_bar)),
        }
        return cls(
            kind=kind,
            b=b,
            tol=tol,
            component_means=tuple(float(v) for v in means),
            component_variances=tuple(float(v) for v in variances),
            component_entropies=tuple(float(v) for v in entropies),
            totals=totals,
            residuals=residuals,
        )

    def to_json(self, indent: int | None = 2) -> str:
        """Serialize with a stable field order."""
        payload = {
            "kind": self.kind,
            "b": self.b,
            "tol": self.tol,
            "component_means": list(self.component_means),
            "component_variances": list(self.component_variances),
            "component_entropies": list(self.component_entropies),
            "totals": {k: self.totals[k] for k in ("mean", "variance", "entropy")},
            "residuals": {k: self.residuals[k] for k in ("mean", "variance", "entropy")},
        }
        return json.dumps(payload, indent=indent)
