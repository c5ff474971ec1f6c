"""Verification laboratory for the statistics of cavity (black-body) radiation.

The package computes the classical spectral laws, the two-term energy
fluctuation of a narrow band by several independent routes, the exact
combinatorics behind the geometric occupation law, classical-wave and
quantized-field fluctuation models, matter-mediated equilibration kinetics,
and the decomposition of the geometric mode variable into Poisson
multi-quantum components and binary (fermion-like) components.  Everything
runs at desk scale and every result is cross-checked against at least one
independent route.
"""

from hohlraum.spectral import CGS, ModePoint, PhysicalConstants, SpectralBand

__all__ = ["CGS", "ModePoint", "PhysicalConstants", "SpectralBand"]

__version__ = "0.1.0"
