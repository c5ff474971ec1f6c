"""Classical stochastic-wave models of narrow-band radiation.

Gaussian quadrature ensembles with their exponential energy law, the
central-limit construction behind them, pulse-train fields with engineered
phase relations that produce a particle-like fluctuation from pure wave
interference, and string-segment ensembles where ensemble-first and
time-first averaging give different fluctuation laws.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.special import ndtr

from hohlraum.distributions import (
    EnsembleStats,
    bose_variance,
    ensemble_stats,
    sample_bose,
)

__all__ = [
    "EhrenfestResult",
    "PulseTrainConfig",
    "PulseTrainResult",
    "QuadratureEnsemble",
    "QuadratureEnergySample",
    "StringConfig",
    "central_limit_walk",
    "ehrenfest_ensemble",
    "fit_two_term_split",
    "gaussian_mode_entropy",
    "pulse_train_fluctuation",
    "quadrature_energy_stats",
    "segment_kernel_weights",
    "stationary_field_fluctuation",
]

SEPARATION_RATIO = 20.0


class SeparationError(ValueError):
    """Time-scale or geometry separations of the model are violated."""


# ---------------------------------------------------------------------------
# Gaussian quadrature ensemble
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureEnsemble:
    """Zero-mean Gaussian cosine/sine amplitudes with common std sigma."""

    sigma: float
    n_samples: int
    seed: int

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if self.n_samples < 2:
            raise ValueError("need at least two samples")


@dataclass(frozen=True)
class QuadratureEnergySample:
    """Sampled mode energies (a_c^2 + a_s^2)/(8 pi Z_nu) and phases."""

    stats: EnsembleStats
    analytic_mean: float
    phases: np.ndarray


def quadrature_energy_stats(
    ens: QuadratureEnsemble, Z_nu: float, rng: np.random.Generator
) -> QuadratureEnergySample:
    """Energy statistics of a mode with Gaussian quadratures.

    The energy (a_c^2 + a_s^2)/(8 pi Z_nu) is exponential with mean
    2 sigma^2 / (8 pi Z_nu), so its variance equals its squared mean, and the
    phase atan2(a_s, a_c) is uniform.  sigma is the per-quadrature std; the
    root-mean-square wave amplitude is sigma * sqrt(2).
    """
    if Z_nu <= 0:
        raise ValueError("Z_nu must be positive")
    a_c = rng.normal(0.0, ens.sigma, ens.n_samples)
    a_s = rng.normal(0.0, ens.sigma, ens.n_samples)
    energies = (a_c**2 + a_s**2) / (8.0 * math.pi * Z_nu)
    phases = np.arctan2(a_s, a_c)
    return QuadratureEnergySample(
        stats=ensemble_stats(energies, seed=ens.seed),
        analytic_mean=2.0 * ens.sigma**2 / (8.0 * math.pi * Z_nu),
        phases=phases,
    )


def central_limit_walk(
    step_sampler: Callable[[np.random.Generator, int], np.ndarray],
    n_steps: int,
    rng: np.random.Generator,
    step_mean: float,
    step_std: float,
    n_walkers: int = 20_000,
) -> float:
    """Sup-distance between the normalized n-step sum and the unit Gaussian.

    The caller declares the step law's mean and std (the law must have finite
    variance).  The distance decreases with n for any such law and sits at
    the sampling noise floor for Gaussian steps.
    """
    if n_steps < 1 or step_std <= 0:
        raise ValueError("need n_steps >= 1 and step_std > 0")
    sums = np.zeros(n_walkers)
    for _ in range(n_steps):
        sums += step_sampler(rng, n_walkers)
    normed = (sums - n_steps * step_mean) / (step_std * math.sqrt(n_steps))
    normed.sort()
    gauss_cdf = ndtr(normed)
    ecdf_hi = np.arange(1, n_walkers + 1) / n_walkers
    ecdf_lo = np.arange(0, n_walkers) / n_walkers
    return float(np.max(np.maximum(ecdf_hi - gauss_cdf, gauss_cdf - ecdf_lo)))


def gaussian_mode_entropy(
    Z_nu: float, mean_energy: float, alpha: float = 1.0
) -> tuple[float, float]:
    """(entropy in units of k, reference energy E0) of the Gaussian mode.

    Closed form of the double Gaussian integral: S/k = log(mean/E0) with
    E0 = alpha^2 / ((2 pi e) * 4 pi Z_nu); alpha only makes the log argument
    dimensionless and shifts the entropy by a constant.  dS/dE = k/E, so
    equilibrium at temperature T puts kT of energy in the mode.
    """
    if Z_nu <= 0 or mean_energy <= 0 or alpha <= 0:
        raise ValueError("inputs must be positive")
    e0 = alpha**2 / ((2.0 * math.pi * math.e) * (4.0 * math.pi * Z_nu))
    return math.log(mean_energy / e0), e0


# ---------------------------------------------------------------------------
# pulse trains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PulseTrainConfig:
    """Pulsed carrier field on a circular record of duration T_total.

    P_pulses sine pulses of duration tau start at uniform times; pulse i has
    integer order n_i = n0 +/- u with u uniform in bandwidth_orders.  The
    windowed square of the field is the slowly varying energy.  The time
    scales must satisfy the separation chain
        (T/n0) * R <= (u_min/n0) * tau,  (u_max/n0) * R <= 1,  tau * R <= T
    with R = 20; violations raise rather than degrade.
    """

    T_total: float
    tau: float
    P_pulses: int
    n0: int
    bandwidth_orders: tuple[int, int]
    C: float = 1.0
    K: float = 2.0
    window: float | None = None
    samples_per_period: int = 32
    seed: int = 0

    def __post_init__(self):
        if min(self.T_total, self.tau, self.C, self.K) <= 0:
            raise ValueError("time scales and amplitudes must be positive")
        if self.P_pulses < 1 or self.n0 < 1:
            raise ValueError("need at least one pulse and a positive order")
        u_min, u_max = self.bandwidth_orders
        if not 0 < u_min <= u_max:
            raise ValueError("bandwidth_orders must be an increasing positive pair")
        r = SEPARATION_RATIO
        if self.tau * r > self.T_total:
            raise SeparationError("pulse duration too close to the record length")
        if u_max * r > self.n0:
            raise SeparationError("band too wide for quasi-monochromaticity")
        # (T/n0) * r <= (u/n0) * tau reduces to u * tau >= r * T
        if u_min * self.tau < r * self.T_total:
            raise SeparationError("band too narrow to decorrelate within a pulse")

    @property
    def period(self) -> float:
        return self.T_total / self.n0

    @property
    def window_width(self) -> float:
        # a few carrier periods: kills the double-frequency ripple while
        # passing every beat of the admissible band
        return self.window if self.window is not None else 3.0 * self.period

    @property
    def quantum(self) -> float:
        """The engineered energy unit K C^2 / 2 of one pulse."""
        return self.K * self.C**2 / 2.0


def _circular_moving_average(values: np.ndarray, width: int) -> np.ndarray:
    """Moving average with periodic wrap, via cumulative sums."""
    n = values.size
    width = max(1, min(width, n))
    ext = np.concatenate([values, values[: width - 1]])
    csum = np.concatenate([[0.0], np.cumsum(ext)])
    out = (csum[width:] - csum[:-width]) / width
    return np.roll(out, width // 2)


@dataclass(frozen=True)
class PulseTrainResult:
    """Pooled slow-energy statistics of a pulse-train (or stationary) field."""

    e_bar: float
    q_total: float
    q_wave_part: float  # e_bar^2
    q_particle_part: float  # q_total - e_bar^2
    quantum: float
    n_realizations: int

    @property
    def gamma(self) -> float:
        """Linear-term coefficient when the quadratic one is pinned to one."""
        return self.q_particle_part / self.e_bar


def _slow_energy(cfg: PulseTrainConfig, a: np.ndarray) -> np.ndarray:
    dt = cfg.period / cfg.samples_per_period
    width = int(round(cfg.window_width / dt))
    return cfg.K * _circular_moving_average(a * a, width)


def _pulse_train_field(cfg: PulseTrainConfig, rng: np.random.Generator) -> np.ndarray:
    n_grid = cfg.n0 * cfg.samples_per_period
    dt = cfg.T_total / n_grid
    a = np.zeros(n_grid)
    pulse_len = int(round(cfg.tau / dt))
    u_min, u_max = cfg.bandwidth_orders
    t_local = np.arange(pulse_len) * dt

    starts = rng.random(cfg.P_pulses) * cfg.T_total
    offsets = rng.integers(u_min, u_max + 1, cfg.P_pulses)
    signs = np.where(rng.random(cfg.P_pulses) < 0.5, 1, -1)
    orders = cfg.n0 + signs * offsets

    for t_i, n_i in zip(starts, orders):
        start_idx = int(t_i / dt) % n_grid
        # keep the exact carrier phase of a pulse starting between grid points
        offset = start_idx * dt - t_i
        wave = cfg.C * np.sin(2.0 * math.pi * n_i / cfg.T_total * (t_local + offset))
        stop = start_idx + pulse_len
        if stop <= n_grid:
            a[start_idx:stop] += wave
        else:  # wrap around the circular record
            first = n_grid - start_idx
            a[start_idx:] += wave[:first]
            a[: stop - n_grid] += wave[first:]
    return a


def pulse_train_fluctuation(
    cfg: PulseTrainConfig, rng: np.random.Generator, n_realizations: int = 16
) -> PulseTrainResult:
    """Mean and variance of the slow energy of the pulsed field.

    Per-record time averages of E and E^2 are pooled over realizations (the
    circular record makes them unbiased), giving the two-term fluctuation
    with the pulse quantum K C^2/2 as the linear coefficient.
    """
    mean_e = 0.0
    mean_e2 = 0.0
    for _ in range(n_realizations):
        energy = _slow_energy(cfg, _pulse_train_field(cfg, rng))
        mean_e += energy.mean()
        mean_e2 += (energy * energy).mean()
    mean_e /= n_realizations
    mean_e2 /= n_realizations
    q = mean_e2 - mean_e**2
    return PulseTrainResult(
        e_bar=float(mean_e),
        q_total=float(q),
        q_wave_part=float(mean_e**2),
        q_particle_part=float(q - mean_e**2),
        quantum=cfg.quantum,
        n_realizations=n_realizations,
    )


def stationary_field_fluctuation(
    cfg: PulseTrainConfig,
    rng: np.random.Generator,
    n_modes: int = 64,
    amplitude: float | None = None,
    n_realizations: int = 16,
) -> PulseTrainResult:
    """Baseline without pulse structure: stationary modes with random phases.

    n_modes whole-record carriers with orders drawn from the configured band,
    constant amplitude, and independent uniform phases.  Only the wave-like
    fluctuation survives here.  The tones sit on integer grid orders, so the
    field is synthesized exactly through the inverse FFT.
    """
    c_amp = cfg.C if amplitude is None else amplitude
    n_grid = cfg.n0 * cfg.samples_per_period
    u_min, u_max = cfg.bandwidth_orders

    mean_e = 0.0
    mean_e2 = 0.0
    for _ in range(n_realizations):
        offsets = rng.integers(u_min, u_max + 1, n_modes)
        signs = np.where(rng.random(n_modes) < 0.5, 1, -1)
        orders = cfg.n0 + signs * offsets
        phases = rng.random(n_modes) * 2.0 * math.pi
        spectrum = np.zeros(n_grid // 2 + 1, dtype=complex)
        # sin(2 pi n t/T + phi) is the bin-n tone with coefficient phase phi - pi/2
        np.add.at(
            spectrum,
            orders,
            0.5 * n_grid * c_amp * np.exp(1j * (phases - 0.5 * math.pi)),
        )
        a = np.fft.irfft(spectrum, n_grid)
        energy = _slow_energy(cfg, a)
        mean_e += energy.mean()
        mean_e2 += (energy * energy).mean()
    mean_e /= n_realizations
    mean_e2 /= n_realizations
    q = mean_e2 - mean_e**2
    return PulseTrainResult(
        e_bar=float(mean_e),
        q_total=float(q),
        q_wave_part=float(mean_e**2),
        q_particle_part=float(q - mean_e**2),
        quantum=cfg.K * c_amp**2 / 2.0,
        n_realizations=n_realizations,
    )


def fit_two_term_split(e_bars: Sequence[float], q_totals: Sequence[float]) -> tuple[float, float]:
    """Least-squares (gamma, delta) for Q = gamma E + delta E^2.

    The fit is done on Q/E^2 against 1/E so every configuration carries
    comparable weight.
    """
    e = np.asarray(e_bars, dtype=float)
    q = np.asarray(q_totals, dtype=float)
    if e.size < 2:
        raise ValueError("need at least two configurations to split the terms")
    design = np.column_stack([1.0 / e, np.ones_like(e)])
    coeffs, *_ = np.linalg.lstsq(design, q / e**2, rcond=None)
    gamma, delta = float(coeffs[0]), float(coeffs[1])
    return gamma, delta


# ---------------------------------------------------------------------------
# string-segment ensembles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StringConfig:
    """Transverse modes of a clamped string, observed on a segment of length l.

    band = (n_lo, n_hi) selects Z = n_hi - n_lo + 1 harmonics; amplitude_law
    is "fixed" or "bose" (squared amplitudes carrying whole energy quanta with
    the thermal occupation law at n_bar).  The harmonics must be high and the
    band narrow; the segment must hold many wavelengths.
    """

    L: float
    l: float
    c: float
    band: tuple[int, int]
    amplitude_law: str = "bose"
    n_bar: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.l < self.L:
            raise ValueError("need 0 < l < L")
        if self.c <= 0:
            raise ValueError("wave speed must be positive")
        n_lo, n_hi = self.band
        if not 1 <= n_lo <= n_hi:
            raise ValueError("band must be an increasing pair of harmonic indices")
        if (n_hi - n_lo) / (n_hi + n_lo) > 0.01:
            raise SeparationError("band too wide relative to its centre")
        if self.l * n_lo < 20.0 * self.L:
            raise SeparationError("segment must hold many wavelengths")
        if self.amplitude_law not in ("fixed", "bose"):
            raise ValueError("amplitude_law must be 'fixed' or 'bose'")
        if self.amplitude_law == "bose" and self.n_bar <= 0:
            raise ValueError("n_bar must be positive for the bose law")

    @property
    def Z(self) -> int:
        return self.band[1] - self.band[0] + 1

    @property
    def z(self) -> float:
        return self.l / self.L * self.Z


def segment_kernel_weights(cfg: StringConfig) -> np.ndarray:
    """Overlap integrals (1/2) int_0^l cos(d k x) dx for d = 0..Z-1.

    Only the harmonic-index difference d enters; these are the exact
    trigonometric kernels, so small cases are exactly checkable.
    """
    d = np.arange(cfg.Z, dtype=float)
    out = np.empty(cfg.Z)
    out[0] = cfg.l / 2.0
    if cfg.Z > 1:
        out[1:] = cfg.L / (2.0 * math.pi) * np.sin(d[1:] * math.pi * cfg.l / cfg.L) / d[1:]
    return out


@dataclass(frozen=True)
class EhrenfestResult:
    """Both relative fluctuation routes with closed forms and uncertainties."""

    ensemble_route: float
    ensemble_route_se: float
    time_route: float
    time_route_se: float
    closed_ensemble: float  # 1/(n_bar Z) + 1/z (bose) or kernel form (fixed)
    closed_time: float  # 1/z - 1/Z
    kernel_time: float  # exact finite-Z kernel value of the time route
    mean_rel_gap: float  # |<e>_ensemble - mean time-average| / e0
    mean_rel_gap_se: float
    moment_ratio: float  # sampled B^4-bar / (B^2-bar)^2
    e0: float
    n_realizations: int


def ehrenfest_ensemble(
    cfg: StringConfig, n_realizations: int, rng: np.random.Generator
) -> EhrenfestResult:
    """Relative segment-energy fluctuation, ensemble-first and time-first.

    Draws squared amplitudes per the configured law and independent uniform
    phases, evaluates the segment energy exactly through the difference-index
    kernels, and reduces the per-realization time average in closed form over
    one fundamental period.  The ensemble-first route feels the amplitude
    statistics; the time-first route does not.
    """
    Z, z = cfg.Z, cfg.z
    weights = segment_kernel_weights(cfg)
    n_bar = cfg.n_bar

    if cfg.amplitude_law == "bose":
        quanta = sample_bose(n_bar, rng, size=(n_realizations, Z)).astype(float)
        b_sq = 2.0 * quanta / cfg.L
    else:
        b_sq = np.full((n_realizations, Z), 2.0 * n_bar / cfg.L)
    phases = rng.random((n_realizations, Z)) * 2.0 * math.pi
    w = np.sqrt(b_sq) * np.exp(1j * phases)

    # lagged autocorrelations A_d = sum_n w_{n+d} conj(w_n) via zero-padded FFT
    n_fft = 1 << (2 * Z - 1).bit_length()
    spectra = np.fft.fft(w, n=n_fft, axis=1)
    acorr = np.fft.ifft(np.abs(spectra) ** 2, axis=1)[:, :Z]

    e0 = z * n_bar  # analytic segment mean in quantum units
    # instantaneous energy at t = 0 across the ensemble
    e_now = weights[0] * acorr[:, 0].real + 2.0 * np.einsum(
        "d,rd->r", weights[1:], acorr[:, 1:].real
    )
    e_stats = ensemble_stats(e_now, seed=cfg.seed)
    ensemble_route = e_stats.variance / e0**2
    ensemble_route_se = e_stats.std_error_variance / e0**2

    # exact per-realization time average over one fundamental period
    v = 2.0 * np.einsum("d,rd->r", weights[1:] ** 2, np.abs(acorr[:, 1:]) ** 2)
    time_route = float(v.mean()) / e0**2
    time_route_se = float(v.std(ddof=1)) / math.sqrt(n_realizations) / e0**2

    kernel_time = float(
        2.0 * np.sum((Z - np.arange(1, Z)) * weights[1:] ** 2) / ((cfg.l / 2.0) ** 2 * Z**2)
    )
    if cfg.amplitude_law == "bose":
        closed_ensemble = 1.0 / (n_bar * Z) + 1.0 / z
    else:
        closed_ensemble = 1.0 / z - 1.0 / Z
    mean_gap = abs(float(e_now.mean()) - weights[0] * float((np.abs(w) ** 2).sum(axis=1).mean()))
    b2 = b_sq.mean()
    b4 = (b_sq**2).mean()

    return EhrenfestResult(
        ensemble_route=float(ensemble_route),
        ensemble_route_se=float(ensemble_route_se),
        time_route=time_route,
        time_route_se=time_route_se,
        closed_ensemble=float(closed_ensemble),
        closed_time=1.0 / z - 1.0 / Z,
        kernel_time=kernel_time,
        mean_rel_gap=mean_gap / e0,
        mean_rel_gap_se=e_stats.std_error_mean / e0,
        moment_ratio=float(b4 / b2**2),
        e0=e0,
        n_realizations=n_realizations,
    )


def segment_energy_series(
    cfg: StringConfig, rng: np.random.Generator, n_times: int = 256
) -> tuple[np.ndarray, np.ndarray]:
    """One realization of the segment energy over a fundamental period.

    Returns (times, energies) for plotting or CSV dumps; the energy is
    evaluated from the same difference-index reduction used by the
    ensemble statistics.
    """
    Z = cfg.Z
    weights = segment_kernel_weights(cfg)
    if cfg.amplitude_law == "bose":
        quanta = sample_bose(cfg.n_bar, rng, size=Z).astype(float)
        b_sq = 2.0 * quanta / cfg.L
    else:
        b_sq = np.full(Z, 2.0 * cfg.n_bar / cfg.L)
    phases = rng.random(Z) * 2.0 * math.pi
    w = np.sqrt(b_sq) * np.exp(1j * phases)

    omega_1 = cfg.c * math.pi / cfg.L  # fundamental circular frequency
    period = 2.0 * math.pi / omega_1
    times = np.linspace(0.0, period, n_times, endpoint=False)

    d_vals = np.arange(1, Z)
    acorr = np.array([np.sum(w[d:] * np.conj(w[:-d])) for d in d_vals])
    energies = weights[0] * float(np.sum(np.abs(w) ** 2)) + 2.0 * np.real(
        np.exp(1j * np.outer(times, d_vals * omega_1)) @ (weights[1:] * acorr)
    )
    return times, energies
