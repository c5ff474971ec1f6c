"""Self-check battery: every headline identity of the package in one sweep.

Each check is a named callable returning a CheckResult; the CLI's verify-all
subcommand runs the whole registry with one seeded generator and reports one
line per check.  Sample counts here are sized for a fast sweep; the pytest
acceptance suite runs the statistical checks at full size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.stats import chi2 as chi2_dist

from hohlraum import combinatorics as comb
from hohlraum import decomposition as deco
from hohlraum import distributions as dist
from hohlraum import fluctuation as fluct
from hohlraum import kinetics, quantized_string, spectral, wavefield

__all__ = ["CheckResult", "run_all_checks", "CHECKS"]

LN2 = math.log(2.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    value: float
    tolerance: float
    detail: str

    def row(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "value": self.value,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }


def _result(name: str, value: float, tolerance: float, detail: str) -> CheckResult:
    return CheckResult(
        name=name,
        passed=bool(value <= tolerance),
        value=float(value),
        tolerance=float(tolerance),
        detail=detail,
    )


def _band(x: float, modes: float = 100.0, nu: float = 6.0e14) -> tuple[spectral.SpectralBand, float]:
    """A narrow band with a prescribed mode count at dimensionless x."""
    consts = spectral.CGS
    T = consts.h * nu / (consts.k * x)
    d_nu = nu * 1e-3
    volume = modes / (spectral.mode_density(nu, consts) * d_nu)
    return spectral.SpectralBand(nu=nu, d_nu=d_nu, volume=volume), T


def _geometric_chi_square(samples: np.ndarray, n_bar: float, max_level: int = 16) -> float:
    """Chi-square p-value of occupation samples against the geometric law.

    Bins 0..max_level-1 plus one tail bin; expected counts below five are
    pooled into the tail.
    """
    clipped = np.minimum(samples, max_level)
    counts = np.bincount(clipped, minlength=max_level + 1).astype(float)
    probs = dist.bose_pmf(np.arange(max_level), n_bar)
    probs = np.append(probs, 1.0 - probs.sum())
    expected = probs * samples.size
    while expected.size > 2 and expected[-1] < 5.0:
        expected[-2] += expected[-1]
        counts[-2] += counts[-1]
        expected = expected[:-1]
        counts = counts[:-1]
    stat = float(((counts - expected) ** 2 / expected).sum())
    return float(chi2_dist.sf(stat, expected.size - 1))


# ---------------------------------------------------------------------------
# spectral checks
# ---------------------------------------------------------------------------

def check_displacement_root(rng) -> CheckResult:
    root = spectral.wien_displacement_root()
    residual = abs(math.exp(-root) + root / 5.0 - 1.0)
    lam_T = spectral.wien_lambda_T()
    passed = (
        abs(root - 4.965) <= 1e-3
        and residual < 1e-12
        and abs(lam_T - 0.2899) / 0.2899 <= 0.005
    )
    return CheckResult(
        name="displacement-root",
        passed=passed,
        value=root,
        tolerance=1e-3,
        detail=f"root={root:.9f}, lambda*T={lam_T:.6f} cm*grad",
    )


def check_radiation_constant(rng) -> CheckResult:
    sigma = spectral.stefan_boltzmann()
    worst = max(
        abs(spectral.radiation_constant_quadrature(T) - sigma) / sigma
        for T in (100.0, 1000.0, 6000.0)
    )
    return _result("radiation-constant-quadrature", worst, 1e-6, f"sigma={sigma:.6e}")


def check_occupation_identity(rng) -> CheckResult:
    xs = np.concatenate([np.geomspace(1e-6, 1.0, 40), np.linspace(1.5, 700.0, 40)])
    worst = max(abs(spectral.mean_occupation(x) * math.expm1(x) - 1.0) for x in xs)
    return _result("occupation-identity", worst, 1e-12, "n(x)*(e^x-1) = 1")


def check_density_ordering(rng) -> CheckResult:
    consts = spectral.CGS
    ok = True
    # above x ~ 36 the wien and planck densities coincide to the last bit
    for x in np.geomspace(0.01, 30.0, 30):
        nu = 6e14
        T = consts.h * nu / (consts.k * x)
        wien, rj = spectral.limit_densities(nu, T)
        planck = spectral.planck_density(nu, T)
        ok &= wien < planck < rj
    return _result("density-ordering", 0.0 if ok else 1.0, 0.5, "wien < planck < rayleigh-jeans")


# ---------------------------------------------------------------------------
# fluctuation checks
# ---------------------------------------------------------------------------

def check_two_term_crossover(rng) -> CheckResult:
    band, T = _band(LN2)
    budget = fluct.einstein_budget(band, T)
    err = abs(budget.particle_term - budget.wave_term) / budget.total
    return _result("two-term-crossover", err, 1e-12, "particle = wave at unit occupation")


def check_four_route_agreement(rng) -> CheckResult:
    consts = spectral.CGS
    worst = 0.0
    for x in (0.1, LN2, 1.0, 5.0, 20.0):
        for modes in (1.0, 10.0, 1000.0):
            band, T = _band(x, modes)
            closed = fluct.einstein_budget(band, T).total
            h_nu = consts.h * band.nu

            def mean_energy(temp: float) -> float:
                xx = h_nu / (consts.k * temp)
                return band.mode_count * h_nu * spectral.mean_occupation(xx)

            thermo = dist.thermo_variance(mean_energy, T, consts.k)
            entropy_route = fluct.entropy_expansion_variance(band, T)
            n_bar = spectral.mean_occupation(x)
            law_route = band.mode_count * h_nu**2 * dist.bose_variance(n_bar)
            routes = (closed, thermo, entropy_route, law_route)
            for a in routes:
                for b in routes:
                    worst = max(worst, abs(a - b) / closed)
    return _result("four-route-agreement", worst, 1e-5, "closed/thermal/entropy/law variance routes")


def check_mirror_fluctuation(rng) -> CheckResult:
    lam = 0.5e-4  # 0.5 micron in cm
    nu = spectral.CGS.c / lam
    band = spectral.SpectralBand(nu=nu, d_nu=nu * 1e-3, volume=1.0)
    setup = fluct.MirrorSetup(area_f=1.0, tau=1.0, band=band, T=1700.0)
    res = fluct.mirror_momentum_fluct(setup)
    ratio_ok = 1e7 <= res.particle_wave_ratio <= 1e8
    value = res.rel_deviation if ratio_ok else 1.0
    return _result(
        "mirror-two-route",
        value,
        1e-4,
        f"particle/wave={res.particle_wave_ratio:.3e}",
    )


def check_rate_identity(rng) -> CheckResult:
    worst = 0.0
    for x in (0.3, LN2, 2.0):
        nu = 5e14
        T = spectral.CGS.h * nu / (spectral.CGS.k * x)
        u = spectral.planck_density(nu, T)
        res = fluct.smekal_rate_decomposition(u, nu, B=2.5)
        worst = max(worst, res.identity_residual)
    return _result("rate-product-identity", worst, 1e-12, "spontaneous+induced vs band form")


def check_subvolume_forms(rng) -> CheckResult:
    band, T = _band(1.0, modes=50.0)
    einstein, ehrenfest = fluct.ehrenfest_vs_einstein_forms(band, T, V_ratio=1e-6)
    scale_err = abs(ehrenfest.particle_term / einstein.particle_term - 1e-6) / 1e-6
    wave_err = abs(ehrenfest.wave_term - einstein.wave_term) / einstein.wave_term
    return _result("subvolume-particle-scaling", max(scale_err, wave_err), 1e-12, "particle term carries v/V")


# ---------------------------------------------------------------------------
# distribution checks
# ---------------------------------------------------------------------------

def check_occupation_law(rng) -> CheckResult:
    worst = 0.0
    for n_bar in (0.01, 0.1, 1.0, 10.0, 100.0):
        n = np.arange(0, 4000)
        p = dist.bose_pmf(n, n_bar)
        mean = float(np.dot(n, p))
        var = float(np.dot(n**2, p)) - mean**2
        worst = max(worst, abs(var - dist.bose_variance(n_bar)) / dist.bose_variance(n_bar))
    return _result("occupation-variance-identity", worst, 1e-10, "sum n^2 p - mean^2 = n + n^2")


def check_cf_direct_sum(rng) -> CheckResult:
    b = 0.5
    t = np.linspace(0.0, 2.0 * math.pi, 17)
    n = np.arange(0, 201)
    p = dist.bose_pmf(n, b / (1.0 - b))
    direct = (p[None, :] * np.exp(1j * np.outer(t, n))).sum(axis=1)
    worst = float(np.max(np.abs(direct - dist.bose_cf(t, b))))
    return _result("cf-direct-sum", worst, 1e-12, "series vs closed form")


def check_entropy_routes(rng) -> CheckResult:
    worst = 0.0
    for n_bar in (0.1, 1.0, 10.0):
        n = np.arange(0, 6000)
        p = dist.bose_pmf(n, n_bar)
        p = p[p > 0]
        boltzmann = float(-(p * np.log(p)).sum())
        worst = max(worst, abs(boltzmann - dist.bose_entropy(n_bar)))
    return _result("entropy-two-routes", worst, 1e-10, "thermodynamic vs probabilistic entropy")


def check_counting_limit(rng) -> CheckResult:
    N = P = 400
    n = np.arange(0, 60)
    exact = np.array([float(dist.planck_bose_from_counting(N, P, int(k))) for k in n])
    limit = dist.bose_pmf(n, 1.0)
    worst = float(np.max(np.abs(exact - limit)))
    return _result("counting-to-law-limit", worst, 5e-3, f"N=P={N} against the limiting law")


def check_binomial_poisson(rng) -> CheckResult:
    tvs = [dist.binomial_to_poisson_check(n0, 1.0 / n0).tv_distance for n0 in (10, 100, 1000, 10000)]
    decreasing = all(a > b for a, b in zip(tvs, tvs[1:]))
    return _result(
        "binomial-poisson-limit",
        0.0 if decreasing else 1.0,
        0.5,
        f"TV chain {', '.join(f'{v:.2e}' for v in tvs)}",
    )


def check_sampler_moments(rng) -> CheckResult:
    n = 200_000
    worst = 0.0
    bose = dist.sample_bose(1.0, rng, n)
    stats = dist.ensemble_stats(bose, seed=0)
    worst = max(worst, abs(stats.mean - 1.0) / (4 * stats.std_error_mean + 1e-300))
    pois = dist.sample_poisson(0.5, rng, n)
    stats = dist.ensemble_stats(pois, seed=0)
    worst = max(worst, abs(stats.variance - 0.5) / (4 * stats.std_error_variance))
    big = dist.sample_poisson(25.0, rng, n)
    stats = dist.ensemble_stats(big, seed=0)
    worst = max(worst, abs(stats.mean - 25.0) / (4 * stats.std_error_mean))
    expo = dist.sample_exponential(2.0, rng, n)
    stats = dist.ensemble_stats(expo, seed=0)
    worst = max(worst, abs(stats.variance - 4.0) / (4 * stats.std_error_variance))
    return _result("sampler-moments", worst, 1.0, "all samplers within 4 standard errors")


# ---------------------------------------------------------------------------
# decomposition checks
# ---------------------------------------------------------------------------

def check_component_params(rng) -> CheckResult:
    mset = deco.poisson_multiplet_params(0.5)
    lam_err = max(
        abs(mset.lambdas[0] - 0.5), abs(mset.lambdas[1] - 0.125), abs(mset.lambdas[2] - 1.0 / 24.0)
    )
    bset = deco.binary_photon_params(0.5)
    p_exp = [1.0 / 3.0, 1.0 / 5.0, 1.0 / 17.0, 1.0 / 257.0]
    p_err = max(abs(bset.p1s[s] - p_exp[s]) for s in range(4))
    return _result("component-parameters", max(lam_err, p_err), 1e-14, "rates b^m/m and odds b^w/(1+b^w)")


def check_component_sums(rng) -> CheckResult:
    worst = 0.0
    for b in (0.1, 0.5, 0.9):
        n_bar = b / (1.0 - b)
        report_p = deco.DecompositionReport.build("poisson", b)
        report_b = deco.DecompositionReport.build("binary", b)
        scale = max(n_bar, 1.0)
        worst = max(
            worst,
            report_p.residuals["variance"] / scale,
            report_p.residuals["entropy"],
            report_b.residuals["variance"] / scale,
            report_b.residuals["entropy"],
        )
    return _result("component-sum-reconstruction", worst, 1e-8, "variance and entropy totals")


def check_binary_pmf_exact(rng) -> CheckResult:
    worst = 0.0
    for b in (0.1, 0.5, 0.9):
        for n in range(65):
            target = (1.0 - b) * b**n
            worst = max(worst, abs(deco.exact_binary_pmf(n, b) - target) / target)
    return _result("binary-pmf-reconstruction", worst, 1e-12, "bitwise product equals (1-b) b^n")


def check_cf_factorization(rng) -> CheckResult:
    t = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
    worst = 0.0
    for b in (0.5, 0.9):
        res = deco.cf_factorization_check(b, t)
        worst = max(worst, res["binary_residual"], res["multiplet_residual"])
    return _result("cf-factorization", worst, 1e-10, "both component products match the CF")


def check_dyadic(rng) -> CheckResult:
    ok = (
        deco.dyadic_expansion(9) == {0, 3}
        and deco.dyadic_expansion(0) == set()
        and deco.dyadic_expansion(32) == {5}
    )
    return _result("dyadic-expansion", 0.0 if ok else 1.0, 0.5, "bit sets of 9, 0, 32")


def check_decomposition_samplers(rng) -> CheckResult:
    n = 200_000
    b = 0.5
    mset = deco.poisson_multiplet_params(b)
    bset = deco.binary_photon_params(b)
    worst_p = min(
        _geometric_chi_square(deco.sample_bose_via_multiplets(mset, rng, n), 1.0),
        _geometric_chi_square(deco.sample_bose_via_binary(bset, rng, n), 1.0),
    )
    return _result("decomposition-samplers", 1e-4 / max(worst_p, 1e-300), 1.0, f"min chi-square p={worst_p:.3g}")


def check_thermo_identity(rng) -> CheckResult:
    worst = max(
        deco.thermo_identity_check("poisson", LN2, [1, 2, 3]),
        deco.thermo_identity_check("binary", LN2, [0, 1, 2, 3]),
    )
    return _result("component-temperature-identity", worst, 1e-6, "dS/dE = 1/T per component")


def check_volume_entropy(rng) -> CheckResult:
    value = deco.volume_entropy_difference(1, 3.0, 0.5, 1.0)
    err = abs(value - 3.0 * math.log(0.5))
    half = deco.volume_entropy_difference(2, 3.0, 0.5, 1.0)
    err = max(err, abs(half - 1.5 * math.log(0.5)))
    return _result("volume-entropy-difference", err, 1e-12, "carrier count times log volume ratio")


# ---------------------------------------------------------------------------
# combinatorics checks
# ---------------------------------------------------------------------------

def check_counting_identities(rng) -> CheckResult:
    ok = True
    for N in range(2, 7):
        for n in range(0, 7):
            ok &= comb.verify_count_identities(N, n).ok
    for N, n in ((4, 2), (5, 3), (6, 6)):
        ok &= comb.fermi_variant(N, n).ok
    return _result("counting-identities", 0.0 if ok else 1.0, 0.5, "exact integer sums, capped variant included")


def check_stirling_entropy(rng) -> CheckResult:
    # exact-count deviation is 17.5% at N=P=10 and falls below 0.05% at 1e4
    coarse = comb.stirling_entropy_check(10, 10)
    fine = comb.stirling_entropy_check(10_000, 10_000)
    value = fine / 1e-3 + (0.0 if 0.1 < coarse < 0.2 else 1.0)
    return _result("stirling-entropy", value, 1.0, f"rel err {coarse:.3g} at 10, {fine:.3g} at 1e4")


# ---------------------------------------------------------------------------
# wave-model checks
# ---------------------------------------------------------------------------

def check_quadrature_energy(rng) -> CheckResult:
    ens = wavefield.QuadratureEnsemble(sigma=1.3, n_samples=200_000, seed=0)
    sample = wavefield.quadrature_energy_stats(ens, Z_nu=2.0, rng=rng)
    stats = sample.stats
    mean_dev = abs(stats.mean - sample.analytic_mean) / (4 * stats.std_error_mean)
    var_dev = abs(stats.variance - stats.mean**2) / (4 * stats.std_error_variance)
    counts, _ = np.histogram(sample.phases, bins=16, range=(-math.pi, math.pi))
    expected = sample.phases.size / 16
    stat = float(((counts - expected) ** 2 / expected).sum())
    p_value = float(chi2_dist.sf(stat, 15))
    value = max(mean_dev, var_dev, 1e-4 / max(p_value, 1e-300))
    return _result("quadrature-exponential-energy", value, 1.0, f"phase-uniformity p={p_value:.3g}")


def check_mode_entropy(rng) -> CheckResult:
    from scipy.integrate import dblquad

    z_nu, mean_energy, alpha = 3.0, 0.7, 1.7
    entropy, _ = wavefield.gaussian_mode_entropy(z_nu, mean_energy, alpha)
    # mean = 2 sigma^2 / (8 pi Z), so sigma^2 = 4 pi Z * mean
    sigma = math.sqrt(mean_energy * 4.0 * math.pi * z_nu)

    def integrand(a_s: float, a_c: float) -> float:
        f_c = math.exp(-a_c**2 / (2 * sigma**2)) / (math.sqrt(2 * math.pi) * sigma)
        f_s = math.exp(-a_s**2 / (2 * sigma**2)) / (math.sqrt(2 * math.pi) * sigma)
        return -f_c * f_s * (math.log(alpha * f_c) + math.log(alpha * f_s))

    lim = 10.0 * sigma
    numeric, _ = dblquad(integrand, -lim, lim, -lim, lim, epsabs=1e-10, epsrel=1e-10)
    return _result("gaussian-mode-entropy", abs(numeric - entropy), 1e-8, "double integral vs closed form")


def check_central_limit(rng) -> CheckResult:
    def uniform_step(gen, size):
        return gen.random(size) - 0.5

    dists = [
        wavefield.central_limit_walk(uniform_step, n, rng, 0.0, math.sqrt(1.0 / 12.0), 20_000)
        for n in (4, 64, 1024)
    ]
    decreasing = dists[0] > dists[1] > dists[2] or dists[2] < 0.01
    return _result(
        "central-limit-walk",
        0.0 if decreasing else 1.0,
        0.5,
        "KS chain " + ", ".join(f"{d:.4f}" for d in dists),
    )


def check_string_routes(rng) -> CheckResult:
    cfg = wavefield.StringConfig(
        L=1.0, l=0.25, c=1.0, band=(10_000, 10_199), amplitude_law="bose", n_bar=1.0
    )
    res = wavefield.ehrenfest_ensemble(cfg, 2000, rng)
    ens_dev = abs(res.ensemble_route - res.closed_ensemble) / (4 * res.ensemble_route_se)
    time_dev = abs(res.time_route - res.closed_time) / (4 * res.time_route_se)
    return _result(
        "string-two-averaging-orders",
        max(ens_dev, time_dev),
        1.0,
        f"ensemble {res.ensemble_route:.5f} vs {res.closed_ensemble:.5f}; "
        f"time {res.time_route:.5f} vs {res.closed_time:.5f}",
    )


def check_pulse_train(rng) -> CheckResult:
    quantum_unit = None
    e_bars, q_totals = [], []
    for pulses in (30, 60, 160):
        cfg = wavefield.PulseTrainConfig(
            T_total=1.0,
            tau=1.0 / 40.0,
            P_pulses=pulses,
            n0=30_000,
            bandwidth_orders=(800, 1300),
        )
        quantum_unit = cfg.quantum
        res = wavefield.pulse_train_fluctuation(cfg, rng, n_realizations=10)
        e_bars.append(res.e_bar)
        q_totals.append(res.q_total)
    gamma, delta = wavefield.fit_two_term_split(e_bars, q_totals)
    err = max(abs(gamma / quantum_unit - 1.0), abs(delta - 1.0))
    return _result(
        "pulse-train-split",
        err,
        0.25,
        f"gamma/quantum={gamma / quantum_unit:.3f}, delta={delta:.3f} (fast sweep)",
    )


# ---------------------------------------------------------------------------
# quantized-string checks
# ---------------------------------------------------------------------------

def check_ladder_commutator(rng) -> CheckResult:
    a, a_dag = quantized_string.build_ladder(5)
    comm = a @ a_dag - a_dag @ a
    good = np.diag(comm)[:5]
    err = float(np.max(np.abs(good - 1.0)))
    top_ok = abs(comm[5, 5] + 5.0) < 1e-12
    vacuum_ok = float(np.max(np.abs(a[:, 0]))) == 0.0
    value = err if (top_ok and vacuum_ok) else 1.0
    return _result("ladder-commutator", value, 1e-12, "identity below the cutoff, -n_max at the top")


def check_zero_point_cancellation(rng) -> CheckResult:
    state = quantized_string.MultiModeState.thermal(
        (200_000, 200_001), L=1.0, c=1.0, x_center=LN2, n_max=12, leakage_bound=1e-3
    )
    res = quantized_string.phase_averaged_fluctuation(state, l=0.3)
    return _result(
        "zero-point-cancellation",
        res.cancellation_rel_residual,
        1e-10,
        "quarter terms of the quadratic part against the cross term",
    )


def check_budget_shape(rng) -> CheckResult:
    worst = 0.0
    for x in (LN2, 1.5):
        state = quantized_string.MultiModeState.thermal(
            (200_000, 200_001, 200_002), L=1.0, c=1.0, x_center=x, n_max=14, leakage_bound=2e-3
        )
        res = quantized_string.phase_averaged_fluctuation(state, l=0.05)
        worst = max(worst, abs(res.quantum_budget - res.pair_oracle) / res.pair_oracle)
        classical_target = res.quantum_budget - res.pair_particle
        worst = max(worst, abs(res.classical_budget - classical_target) / res.quantum_budget)
    return _result("segment-budget-shape", worst, 0.05, "matrix vs pair oracle; classical keeps the wave part")


def check_kernel_normalization(rng) -> CheckResult:
    dev = quantized_string.kernel_delta_limit(l=2000.0, c=1.0, omegas=[1.0])
    return _result("kernel-point-limit", dev, 1e-3, "kernel mass at concentration scale 2000")


# ---------------------------------------------------------------------------
# kinetics checks
# ---------------------------------------------------------------------------

def check_kinetics_stationary(rng) -> CheckResult:
    dt = 8.0 * kinetics.relaxation_time(LN2, atoms=2.0)
    res = kinetics.equilibration_run(
        1, LN2, atoms=2.0, n_events=150_000, rng=rng, burn_in=5_000, sample_dt=dt
    )
    p_value = _geometric_chi_square(res.thinned_samples[:, 0], res.n_bar_analytic)
    split = kinetics.channel_split(res)
    ratio_dev = abs(split.ratio - split.predicted_ratio) / (4 * split.ratio_std_error)
    value = max(1e-4 / max(p_value, 1e-300), ratio_dev)
    return _result("kinetics-stationary-law", value, 1.0, f"chi2 p={p_value:.3g}, stim/spont={split.ratio:.3f}")


def check_kinetics_frozen(rng) -> CheckResult:
    res = kinetics.equilibration_run(3, LN2, atoms=0.0, n_events=1000, rng=rng)
    return _result("kinetics-empty-cavity", float(res.n_events), 0.5, "no material agent, no events")


def check_detailed_balance(rng) -> CheckResult:
    res = kinetics.equilibration_run(1, 1.0, atoms=2.0, n_events=150_000, rng=rng, burn_in=5_000)
    b = math.exp(-1.0)
    worst = 0.0
    for level in (0, 1, 2):
        ups = res.up_transitions.get(level, 0)
        downs = res.down_transitions.get(level, 0)
        if min(ups, downs) < 100:
            continue
        ratio = ups / downs
        se = ratio * math.sqrt(1.0 / ups + 1.0 / downs)
        worst = max(worst, abs(ratio - 1.0) / (4 * se))
    return _result("kinetics-detailed-balance", worst, 1.0, "up/down transition counts per level")


CHECKS: list[tuple[str, Callable]] = [
    ("displacement-root", check_displacement_root),
    ("radiation-constant-quadrature", check_radiation_constant),
    ("occupation-identity", check_occupation_identity),
    ("density-ordering", check_density_ordering),
    ("two-term-crossover", check_two_term_crossover),
    ("four-route-agreement", check_four_route_agreement),
    ("mirror-two-route", check_mirror_fluctuation),
    ("rate-product-identity", check_rate_identity),
    ("subvolume-particle-scaling", check_subvolume_forms),
    ("occupation-variance-identity", check_occupation_law),
    ("cf-direct-sum", check_cf_direct_sum),
    ("entropy-two-routes", check_entropy_routes),
    ("counting-to-law-limit", check_counting_limit),
    ("binomial-poisson-limit", check_binomial_poisson),
    ("sampler-moments", check_sampler_moments),
    ("component-parameters", check_component_params),
    ("component-sum-reconstruction", check_component_sums),
    ("binary-pmf-reconstruction", check_binary_pmf_exact),
    ("cf-factorization", check_cf_factorization),
    ("dyadic-expansion", check_dyadic),
    ("decomposition-samplers", check_decomposition_samplers),
    ("component-temperature-identity", check_thermo_identity),
    ("volume-entropy-difference", check_volume_entropy),
    ("counting-identities", check_counting_identities),
    ("stirling-entropy", check_stirling_entropy),
    ("quadrature-exponential-energy", check_quadrature_energy),
    ("gaussian-mode-entropy", check_mode_entropy),
    ("central-limit-walk", check_central_limit),
    ("string-two-averaging-orders", check_string_routes),
    ("pulse-train-split", check_pulse_train),
    ("ladder-commutator", check_ladder_commutator),
    ("zero-point-cancellation", check_zero_point_cancellation),
    ("segment-budget-shape", check_budget_shape),
    ("kernel-point-limit", check_kernel_normalization),
    ("kinetics-stationary-law", check_kinetics_stationary),
    ("kinetics-empty-cavity", check_kinetics_frozen),
    ("kinetics-detailed-balance", check_detailed_balance),
]


def run_all_checks(seed: int) -> list[CheckResult]:
    """Run the whole registry with one seeded stream, in registry order."""
    rng = np.random.default_rng(seed)
    return [fn(rng) for _, fn in CHECKS]
