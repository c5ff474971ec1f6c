"""The two-term energy fluctuation of a narrow band, by several routes.

Closed-form particle + wave budget, the relative form, the entropy-expansion
route (Gaussian deviation statistics), a Monte Carlo particle-count route,
the moving-mirror momentum fluctuation with its friction-coefficient
cross-check, the rate-coefficient identity for the spontaneous/induced split,
and the sub-volume variant in which the particle term scales with the volume
fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hohlraum.distributions import EnsembleStats, ensemble_stats, sample_poisson
from hohlraum.spectral import (
    CGS,
    ModePoint,
    PhysicalConstants,
    SpectralBand,
    mean_occupation,
    mode_count,
    mode_density,
    planck_density,
)

__all__ = [
    "FluctuationBudget",
    "MirrorFluctuation",
    "MirrorSetup",
    "RateSplit",
    "ehrenfest_vs_einstein_forms",
    "einstein_budget",
    "entropy_expansion_variance",
    "mirror_momentum_fluct",
    "poisson_particle_variance",
    "relative_budget",
    "smekal_rate_decomposition",
]


@dataclass(frozen=True)
class FluctuationBudget:
    """Energy variance of a band, split into its particle and wave terms."""

    particle_term: float
    wave_term: float
    mean_energy: float
    mode_count: float

    def __post_init__(self):
        if self.particle_term < 0 or self.wave_term < 0:
            raise ValueError("both fluctuation terms are non-negative")

    @property
    def total(self) -> float:
        return self.particle_term + self.wave_term


def einstein_budget(
    band: SpectralBand, T: float, consts: PhysicalConstants = CGS
) -> FluctuationBudget:
    """Band-energy variance h*nu*E + E^2/M with E = M h*nu n_bar.

    The particle term dominates at large x = h*nu/kT, the wave term at small
    x, and the two cross over exactly at unit mean occupation.
    """
    point = ModePoint.from_nu_T(band.nu, T, consts)
    m_count = mode_count(band, consts)
    h_nu = consts.h * band.nu
    mean_energy = m_count * h_nu * point.n_bar
    return FluctuationBudget(
        particle_term=h_nu * mean_energy,
        wave_term=mean_energy**2 / m_count,
        mean_energy=mean_energy,
        mode_count=m_count,
    )


def relative_budget(
    band: SpectralBand, T: float, consts: PhysicalConstants = CGS
) -> tuple[float, float]:
    """Relative variance terms (1/(n_bar m), 1/m) of the band energy."""
    point = ModePoint.from_nu_T(band.nu, T, consts)
    m_count = mode_count(band, consts)
    return 1.0 / (point.n_bar * m_count), 1.0 / m_count


def entropy_expansion_variance(
    band: SpectralBand,
    T: float,
    consts: PhysicalConstants = CGS,
    wien_only: bool = False,
) -> float:
    """Variance from the curvature of the band entropy at its maximum.

    The entropy derivative is 1/T(eta) = (k/h nu) log(1 + h nu m / eta); one
    more numerical derivative at the equilibrium energy gives the Gaussian
    width -k / sigma''.  With wien_only the quadratic term of the underlying
    interpolation is dropped, and the wave contribution disappears with it.
    """
    point = ModePoint.from_nu_T(band.nu, T, consts)
    m_count = mode_count(band, consts)
    h_nu = consts.h * band.nu
    eta0 = m_count * h_nu * point.n_bar

    def dsigma_deta(eta: float) -> float:
        ratio = h_nu * m_count / eta
        if wien_only:
            return (consts.k / h_nu) * math.log(ratio)
        return (consts.k / h_nu) * math.log1p(ratio)

    d_eta = eta0 * 1e-5
    curvature = (dsigma_deta(eta0 + d_eta) - dsigma_deta(eta0 - d_eta)) / (2.0 * d_eta)
    if curvature >= 0:
        raise ValueError("entropy must be concave at the equilibrium energy")
    return -consts.k / curvature


def poisson_particle_variance(
    band: SpectralBand,
    T: float,
    rng: np.random.Generator,
    n_samples: int = 1_000_000,
    seed: int = 0,
    consts: PhysicalConstants = CGS,
) -> tuple[EnsembleStats, float]:
    """Monte Carlo energy variance of independently placed quanta in the band.

    Counts N ~ Poisson(E/h nu), energies h nu N; returns the sample statistics
    together with the analytic h nu * E.  This reproduces the particle term's
    form; its value matches the full budget only in the dilute limit.
    """
    point = ModePoint.from_nu_T(band.nu, T, consts)
    h_nu = consts.h * band.nu
    mean_energy = mode_count(band, consts) * h_nu * point.n_bar
    lam = mean_energy / h_nu
    counts = sample_poisson(lam, rng, size=n_samples)
    stats = ensemble_stats(counts * h_nu, seed=seed)
    return stats, h_nu * mean_energy


@dataclass(frozen=True)
class MirrorSetup:
    """A one-color mirror of area f riding in equilibrium radiation."""

    area_f: float
    tau: float
    band: SpectralBand
    T: float

    def __post_init__(self):
        if self.area_f <= 0 or self.tau <= 0 or self.T <= 0:
            raise ValueError("area, tau and T must be positive")


@dataclass(frozen=True)
class MirrorFluctuation:
    """Momentum fluctuation of the mirror by the two routes."""

    friction_route: float  # c^2 <Delta^2> from 2kT * friction * tau
    closed_form: float  # c^2 <Delta^2> from the two-term expression
    particle_term: float
    wave_term: float
    derivative_rel_err: float  # numerical vs closed-form density slope

    @property
    def rel_deviation(self) -> float:
        return abs(self.friction_route - self.closed_form) / self.closed_form

    @property
    def particle_wave_ratio(self) -> float:
        return self.particle_term / self.wave_term


def mirror_momentum_fluct(
    setup: MirrorSetup, consts: PhysicalConstants = CGS
) -> MirrorFluctuation:
    """Momentum variance accumulated by the mirror over tau, both ways.

    Friction route: P = (3/2c)[rho - (nu/3) d rho/d nu] f d nu with the slope
    taken numerically, then <Delta^2>/tau = 2kT P.  Closed form:
    c^2 <Delta^2> = [h nu rho + c^3 rho^2/(8 pi nu^2)] f c tau d nu.  For the
    equilibrium density the two agree identically.
    """
    nu, d_nu, T = setup.band.nu, setup.band.d_nu, setup.T
    rho = planck_density(nu, T, consts)

    h_step = nu * 1e-6
    drho = (planck_density(nu + h_step, T, consts) - planck_density(nu - h_step, T, consts)) / (
        2.0 * h_step
    )
    # closed-form slope for the equilibrium density, to bound the numerical error
    x = consts.h * nu / (consts.k * T)
    n_bar = mean_occupation(x)
    drho_exact = rho / nu * (3.0 - x * (1.0 + n_bar))
    deriv_rel_err = abs(drho - drho_exact) / abs(drho_exact)

    friction = (3.0 / (2.0 * consts.c)) * (rho - (nu / 3.0) * drho) * setup.area_f * d_nu
    friction_route = 2.0 * consts.k * T * friction * setup.tau * consts.c**2

    geom = setup.area_f * consts.c * setup.tau * d_nu
    particle = consts.h * nu * rho * geom
    wave = consts.c**3 * rho**2 / (8.0 * math.pi * nu**2) * geom
    return MirrorFluctuation(
        friction_route=friction_route,
        closed_form=particle + wave,
        particle_term=particle,
        wave_term=wave,
        derivative_rel_err=deriv_rel_err,
    )


@dataclass(frozen=True)
class RateSplit:
    """Product of absorption and emission rates, split and cross-checked."""

    spontaneous_product: float
    induced_product: float
    identity_residual: float
    A_coefficient: float


def smekal_rate_decomposition(
    u: float, nu: float, consts: PhysicalConstants = CGS, B: float = 1.0
) -> RateSplit:
    """Absorption-times-emission rate product B u (A + B u) and its band form.

    With A = (8 pi h nu^3/c^3) B the product equals
    B^2 Z_nu {h nu u + (c^3/8 pi nu^2) u^2}: the braces carry exactly the
    particle and wave densities of the band-energy variance.
    """
    if u < 0 or B <= 0 or nu <= 0:
        raise ValueError("need u >= 0, B > 0, nu > 0")
    A = 8.0 * math.pi * consts.h * nu**3 / consts.c**3 * B
    spontaneous = B * u * A
    induced = (B * u) ** 2
    z_nu = mode_density(nu, consts)
    braces = consts.h * nu * u + consts.c**3 / (8.0 * math.pi * nu**2) * u**2
    rhs = B**2 * z_nu * braces
    total = spontaneous + induced
    residual = abs(total - rhs) / rhs if rhs else 0.0
    return RateSplit(
        spontaneous_product=spontaneous,
        induced_product=induced,
        identity_residual=residual,
        A_coefficient=A,
    )


def ehrenfest_vs_einstein_forms(
    band: SpectralBand,
    T: float,
    V_ratio: float,
    consts: PhysicalConstants = CGS,
) -> tuple[FluctuationBudget, FluctuationBudget]:
    """(material-agent form, empty-sub-volume form) of the band variance.

    The first is the standard budget; the second scales the particle term by
    the sub-volume fraction v/V, so in an unbounded enclosure only the wave
    term survives.  Both share the identical wave term.
    """
    if not 0.0 < V_ratio <= 1.0:
        raise ValueError("V_ratio must lie in (0, 1]")
    einstein = einstein_budget(band, T, consts)
    ehrenfest = FluctuationBudget(
        particle_term=V_ratio * einstein.particle_term,
        wave_term=einstein.wave_term,
        mean_energy=einstein.mean_energy,
        mode_count=einstein.mode_count,
    )
    return einstein, ehrenfest
