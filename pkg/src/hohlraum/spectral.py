"""Spectral laws of cavity radiation in CGS units.

Planck energy density and its Wien / Rayleigh-Jeans limits, the
radiation-density constant (closed form plus quadrature cross-check), the
displacement-law root, and mode counting for narrow bands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.integrate import quad
from scipy.optimize import brentq

__all__ = [
    "CGS",
    "ModePoint",
    "NarrowBandError",
    "PhysicalConstants",
    "SpectralBand",
    "limit_densities",
    "mean_occupation",
    "mode_count",
    "mode_density",
    "planck_density",
    "radiation_constant_quadrature",
    "stefan_boltzmann",
    "wien_displacement_root",
    "wien_lambda_T",
]


class NarrowBandError(ValueError):
    """Band is too wide for the quasi-monochromatic approximation."""


@dataclass(frozen=True)
class PhysicalConstants:
    """CGS constants: h in erg*sec, k in erg/grad, c in cm/sec."""

    h: float = 6.626e-27
    k: float = 1.381e-16
    c: float = 2.998e10

    def __post_init__(self):
        if not (self.h > 0 and self.k > 0 and self.c > 0):
            raise ValueError("physical constants must be strictly positive")


CGS = PhysicalConstants()


def mean_occupation(x: float) -> float:
    """Mean quantum number of a mode at dimensionless energy x = h*nu/(k*T).

    Evaluates 1/(e^x - 1) with a Laurent series below x = 1e-6 and the bare
    exponential above x = 700 so the relative error stays below 1e-12 over
    the whole admissible range.
    """
    if x <= 0:
        raise ValueError(f"x must be positive, got {x}")
    if x < 1e-6:
        # 1/(e^x-1) = 1/x - 1/2 + x/12 - x^3/720 + O(x^5)
        return 1.0 / x - 0.5 + x / 12.0 - x**3 / 720.0
    if x > 700.0:
        return math.exp(-x)
    return 1.0 / math.expm1(x)


@dataclass(frozen=True)
class ModePoint:
    """A (frequency, temperature) working point with derived dimensionless data."""

    nu: float
    T: float
    x: float
    b: float
    n_bar: float

    @classmethod
    def from_nu_T(cls, nu: float, T: float, consts: PhysicalConstants = CGS) -> "ModePoint":
        if nu <= 0 or T <= 0:
            raise ValueError("nu and T must be positive")
        x = consts.h * nu / (consts.k * T)
        return cls(nu=nu, T=T, x=x, b=math.exp(-x), n_bar=mean_occupation(x))

    @classmethod
    def from_x(cls, x: float, nu: float = 1.0, consts: PhysicalConstants = CGS) -> "ModePoint":
        """Working point at given x, with the temperature solved from nu."""
        if x <= 0 or nu <= 0:
            raise ValueError("x and nu must be positive")
        T = consts.h * nu / (consts.k * x)
        return cls(nu=nu, T=T, x=x, b=math.exp(-x), n_bar=mean_occupation(x))

    def __post_init__(self):
        if not (0.0 < self.b < 1.0):
            raise ValueError(f"b must lie in (0, 1), got {self.b}")


@dataclass(frozen=True)
class SpectralBand:
    """Quasi-monochromatic band (nu, nu + d_nu) in a volume, with its mode count.

    The relative width is capped at 1 percent; everything downstream assumes
    the band is narrow, so wider bands are rejected outright.
    """

    nu: float
    d_nu: float
    volume: float
    mode_count: float = field(init=False)

    MAX_RELATIVE_WIDTH = 0.01

    def __post_init__(self):
        if self.nu <= 0 or self.d_nu <= 0 or self.volume <= 0:
            raise ValueError("nu, d_nu and volume must be positive")
        if self.d_nu / self.nu > self.MAX_RELATIVE_WIDTH:
            raise NarrowBandError(
                f"d_nu/nu = {self.d_nu / self.nu:.3g} exceeds "
                f"{self.MAX_RELATIVE_WIDTH}"
            )
        object.__setattr__(self, "mode_count", mode_count(self, CGS))


def mode_density(nu: float, consts: PhysicalConstants = CGS) -> float:
    """Mode density Z_nu = 8 pi nu^2 / c^3 (both polarizations)."""
    return 8.0 * math.pi * nu**2 / consts.c**3


def mode_count(band: SpectralBand, consts: PhysicalConstants = CGS) -> float:
    """Number of modes V * Z_nu * d_nu in the band.

    Returned as a real number: the density picture treats it as a continuum.
    Callers that need an integer count round half-up and record the rounding.
    """
    if band.d_nu / band.nu > SpectralBand.MAX_RELATIVE_WIDTH:
        raise NarrowBandError("band violates the narrow-band guard")
    return band.volume * mode_density(band.nu, consts) * band.d_nu


def planck_density(nu: float, T: float, consts: PhysicalConstants = CGS) -> float:
    """Equilibrium spectral energy density u_nu = Z_nu * n_bar * h*nu."""
    if nu <= 0 or T <= 0:
        raise ValueError("nu and T must be positive")
    x = consts.h * nu / (consts.k * T)
    return mode_density(nu, consts) * mean_occupation(x) * consts.h * nu


def limit_densities(nu: float, T: float, consts: PhysicalConstants = CGS) -> tuple[float, float]:
    """(Wien, Rayleigh-Jeans) limiting densities at the same working point.

    Wien: alpha nu^3 e^(-beta nu / T) with alpha = 8 pi h / c^3, beta = h/k.
    Rayleigh-Jeans: Z_nu * k * T.
    """
    alpha = 8.0 * math.pi * consts.h / consts.c**3
    beta = consts.h / consts.k
    wien = alpha * nu**3 * math.exp(-beta * nu / T)
    rayleigh_jeans = mode_density(nu, consts) * consts.k * T
    return wien, rayleigh_jeans


def stefan_boltzmann(consts: PhysicalConstants = CGS) -> float:
    """Radiation-density constant sigma = 8 pi^5 k^4 / (15 c^3 h^3).

    The total energy density is sigma * T^4; see
    :func:`radiation_constant_quadrature` for the independent quadrature route.
    """
    return 8.0 * math.pi**5 * consts.k**4 / (15.0 * consts.c**3 * consts.h**3)


def radiation_constant_quadrature(
    T: float, consts: PhysicalConstants = CGS, rel_tol: float = 1e-10
) -> float:
    """Integral of the equilibrium density over all frequencies, divided by T^4.

    Adaptive quadrature of u_nu on the dimensionless axis; serves as the
    independent check of the closed form.
    """
    if T <= 0:
        raise ValueError("T must be positive")
    scale = consts.k * T / consts.h  # frequency at x = 1

    def integrand(x: float) -> float:
        return planck_density(x * scale, T, consts)

    # epsabs = 0: the integrand is ~1e-16 in CGS, far below quad's default
    # absolute floor, so only the relative criterion may drive refinement
    total, _ = quad(integrand, 0.0, math.inf, epsabs=0.0, epsrel=rel_tol, limit=200)
    return total * scale / T**4


def wien_displacement_root(tol: float = 1e-14) -> float:
    """Root of e^(-b) + b/5 - 1 = 0 on (1, 10).

    Locates the maximum of the wavelength-density E(lambda, T); the implied
    universal constant is lambda_max * T = c h / (k * root).
    """
    f = lambda b: math.exp(-b) + b / 5.0 - 1.0
    return brentq(f, 1.0, 10.0, xtol=tol, rtol=8.9e-16)


def wien_lambda_T(consts: PhysicalConstants = CGS) -> float:
    """Universal constant lambda_max * T in cm*grad."""
    return consts.c * consts.h / (consts.k * wien_displacement_root())
