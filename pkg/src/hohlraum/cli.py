"""Command-line front end: one subcommand per experiment family.

Every subcommand takes --seed/--samples/--out/--format plus its own numeric
flags, optionally seeded from a JSON config file (flags override the file;
unknown keys are rejected).  Output is JSON or CSV with deterministic
formatting, so identical configurations produce byte-identical artifacts.
Exit codes: 0 all assertions pass, 1 an assertion failed, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path

import click
import numpy as np

from hohlraum import combinatorics as comb
from hohlraum import decomposition as deco
from hohlraum import fluctuation as fluct
from hohlraum import kinetics, quantized_string, spectral, verify, wavefield

DEFAULT_SEED = 20260101


def _load_config(ctx: click.Context, config_path: str | None) -> dict:
    if config_path is None:
        return {}
    data = json.loads(Path(config_path).read_text())
    if not isinstance(data, dict):
        raise click.UsageError("config file must hold a JSON object")
    known = {p.name for p in ctx.command.params}
    unknown = set(data) - known
    if unknown:
        raise click.UsageError(f"unknown config keys: {sorted(unknown)}")
    return data


def _merged(ctx: click.Context, config_path: str | None, **flag_values) -> dict:
    """Defaults < config file < explicitly passed flags."""
    merged = dict(flag_values)
    file_values = _load_config(ctx, config_path)
    for key, value in file_values.items():
        source = ctx.get_parameter_source(key)
        if source is not None and source.name != "COMMANDLINE":
            merged[key] = value
    return merged


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _emit(payload: dict, rows: list[dict], out, fmt: str) -> None:
    """Write rows (CSV) or the full payload (JSON) to out or stdout."""
    if fmt == "json":
        text = json.dumps(payload, indent=2, default=_json_default) + "\n"
    else:
        buffer = io.StringIO()
        if rows:
            writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            for row in rows:
                writer.writerow({k: _fmt(v) for k, v in row.items()})
        text = buffer.getvalue()
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


def _json_default(value):
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"not JSON serializable: {type(value)}")


def common_options(fn):
    fn = click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True,
                      help="Seed for every random stream.")(fn)
    fn = click.option("--samples", type=int, default=None,
                      help="Sample count override for Monte Carlo subcommands.")(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Output file (stdout when omitted).")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                      default="json", show_default=True, help="Artifact format.")(fn)
    fn = click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
                      default=None, help="JSON config file mirroring the flags.")(fn)
    return fn


@click.group()
def main():
    """Desk-scale verification laboratory for cavity-radiation statistics."""


@main.command()
@common_options
@click.option("--nu", type=float, default=6.0e14, show_default=True, help="Central frequency (1/sec).")
@click.option("--t", "temperature", type=float, default=6000.0, show_default=True, help="Temperature (grad).")
@click.option("--points", type=int, default=1, show_default=True, help="Frequency grid size.")
@click.option("--nu-max", type=float, default=None, help="Upper grid frequency (with --points > 1).")
@click.pass_context
def spectrum(ctx, seed, samples, out, fmt, config_path, nu, temperature, points, nu_max):
    """Spectral densities and the two universal constants."""
    p = _merged(ctx, config_path, nu=nu, temperature=temperature, points=points, nu_max=nu_max)
    grid = (
        np.geomspace(p["nu"], p["nu_max"], p["points"])
        if p["points"] > 1 and p["nu_max"]
        else np.array([p["nu"]])
    )
    rows = []
    for f in grid:
        point = spectral.ModePoint.from_nu_T(float(f), p["temperature"])
        wien, rj = spectral.limit_densities(float(f), p["temperature"])
        rows.append({
            "nu": float(f),
            "T": p["temperature"],
            "x": point.x,
            "n_bar": point.n_bar,
            "planck": spectral.planck_density(float(f), p["temperature"]),
            "wien": wien,
            "rayleigh_jeans": rj,
        })
    payload = {
        "radiation_constant": spectral.stefan_boltzmann(),
        "displacement_root": spectral.wien_displacement_root(),
        "lambda_T": spectral.wien_lambda_T(),
        "rows": rows,
    }
    _emit(payload, rows, out, fmt)
    click.echo(f"spectrum: {len(rows)} point(s) written")


@main.command()
@common_options
@click.option("--x", "x_value", type=float, default=math.log(2.0), show_default=True,
              help="Dimensionless photon energy h nu / kT.")
@click.option("--modes", type=float, default=100.0, show_default=True, help="Mode count of the band.")
@click.option("--nu", type=float, default=6.0e14, show_default=True, help="Central frequency (1/sec).")
@click.pass_context
def fluctuation(ctx, seed, samples, out, fmt, config_path, x_value, modes, nu):
    """Two-term band-energy fluctuation budget at a working point."""
    p = _merged(ctx, config_path, x_value=x_value, modes=modes, nu=nu)
    consts = spectral.CGS
    T = consts.h * p["nu"] / (consts.k * p["x_value"])
    d_nu = p["nu"] * 1e-3
    volume = p["modes"] / (spectral.mode_density(p["nu"]) * d_nu)
    band = spectral.SpectralBand(nu=p["nu"], d_nu=d_nu, volume=volume)
    budget = fluct.einstein_budget(band, T)
    point = spectral.ModePoint.from_nu_T(p["nu"], T)
    row = {
        "nu": p["nu"],
        "T": T,
        "x": point.x,
        "n_bar": point.n_bar,
        "mode_count": budget.mode_count,
        "particle": budget.particle_term,
        "wave": budget.wave_term,
        "total": budget.total,
    }
    _emit({"budget": row}, [row], out, fmt)
    crossover = abs(budget.particle_term - budget.wave_term) / budget.total
    click.echo(f"fluctuation: particle/wave = {budget.particle_term / budget.wave_term!r}")
    if abs(point.n_bar - 1.0) < 1e-9 and crossover > 1e-6:
        click.echo("fluctuation: crossover identity failed", err=True)
        sys.exit(1)


@main.command()
@common_options
@click.option("--b", type=float, default=0.5, show_default=True, help="Temperature factor e^(-x).")
@click.option("--kind", type=click.Choice(["poisson", "binary"]), default="binary", show_default=True)
@click.option("--tol", type=float, default=1e-14, show_default=True, help="Component truncation tolerance.")
@click.pass_context
def decompose(ctx, seed, samples, out, fmt, config_path, b, kind, tol):
    """Component decomposition report with reconstruction residuals."""
    p = _merged(ctx, config_path, b=b, kind=kind, tol=tol)
    report = deco.DecompositionReport.build(p["kind"], p["b"], p["tol"])
    rows = [
        {
            "component": i,
            "mean": m,
            "variance": v,
            "entropy": s,
        }
        for i, (m, v, s) in enumerate(
            zip(report.component_means, report.component_variances, report.component_entropies)
        )
    ]
    _emit(json.loads(report.to_json()), rows, out, fmt)
    worst = max(report.residuals.values())
    click.echo(f"decompose: {p['kind']} residuals max={worst!r}")
    if worst > 1e-8:
        click.echo("decompose: reconstruction residual exceeded 1e-8", err=True)
        sys.exit(1)


@main.command()
@common_options
@click.option("--n-bar", type=float, default=1.0, show_default=True, help="Mean occupation of the band.")
@click.option("--modes", "total_modes", type=int, default=200, show_default=True, help="Total band modes Z.")
@click.option("--subfraction", type=float, default=0.25, show_default=True, help="Segment fraction l/L.")
@click.option("--law", type=click.Choice(["bose", "fixed"]), default="bose", show_default=True)
@click.option("--realizations", type=int, default=4000, show_default=True)
@click.pass_context
def string(ctx, seed, samples, out, fmt, config_path, n_bar, total_modes, subfraction, law, realizations):
    """Segment-energy fluctuation of a string band, two averaging orders."""
    p = _merged(ctx, config_path, n_bar=n_bar, total_modes=total_modes,
                subfraction=subfraction, law=law, realizations=realizations)
    n_real = p["realizations"] if samples is None else samples
    n_lo = 10_000
    cfg = wavefield.StringConfig(
        L=1.0, l=p["subfraction"], c=1.0,
        band=(n_lo, n_lo + p["total_modes"] - 1),
        amplitude_law=p["law"], n_bar=p["n_bar"], seed=seed,
    )
    rng = np.random.default_rng(seed)
    res = wavefield.ehrenfest_ensemble(cfg, n_real, rng)
    row = {
        "Z": cfg.Z,
        "z": cfg.z,
        "n_bar": p["n_bar"],
        "law": p["law"],
        "ensemble_route": res.ensemble_route,
        "ensemble_se": res.ensemble_route_se,
        "closed_ensemble": res.closed_ensemble,
        "time_route": res.time_route,
        "time_se": res.time_route_se,
        "closed_time": res.closed_time,
        "kernel_time": res.kernel_time,
        "moment_ratio": res.moment_ratio,
    }
    _emit({"string": row}, [row], out, fmt)
    ens_dev = abs(res.ensemble_route - res.closed_ensemble) / (4 * res.ensemble_route_se)
    time_dev = abs(res.time_route - res.closed_time) / (4 * res.time_route_se)
    click.echo(f"string: ensemble dev {ens_dev:.2f} / time dev {time_dev:.2f} (in 4-sigma units)")
    if max(ens_dev, time_dev) > 1.0:
        click.echo("string: averaging-order law violated beyond 4 standard errors", err=True)
        sys.exit(1)


@main.command("pulse-train")
@common_options
@click.option("--pulses", type=int, default=80, show_default=True, help="Pulse count per record.")
@click.option("--carrier-order", type=int, default=30_000, show_default=True)
@click.option("--realizations", type=int, default=12, show_default=True)
@click.option("--baseline/--no-baseline", default=False, show_default=True,
              help="Run the stationary random-phase field instead.")
@click.pass_context
def pulse_train(ctx, seed, samples, out, fmt, config_path, pulses, carrier_order, realizations, baseline):
    """Windowed-energy fluctuation of a pulsed (or stationary) carrier field."""
    p = _merged(ctx, config_path, pulses=pulses, carrier_order=carrier_order,
                realizations=realizations, baseline=baseline)
    n_real = p["realizations"] if samples is None else samples
    cfg = wavefield.PulseTrainConfig(
        T_total=1.0, tau=1.0 / 40.0, P_pulses=p["pulses"], n0=p["carrier_order"],
        bandwidth_orders=(800, 1300), seed=seed,
    )
    rng = np.random.default_rng(seed)
    if p["baseline"]:
        res = wavefield.stationary_field_fluctuation(cfg, rng, n_realizations=n_real)
    else:
        res = wavefield.pulse_train_fluctuation(cfg, rng, n_realizations=n_real)
    row = {
        "baseline": p["baseline"],
        "e_bar": res.e_bar,
        "q_total": res.q_total,
        "q_wave_part": res.q_wave_part,
        "q_particle_part": res.q_particle_part,
        "quantum": res.quantum,
        "gamma_over_quantum": res.gamma / res.quantum,
    }
    _emit({"pulse_train": row}, [row], out, fmt)
    click.echo(f"pulse-train: gamma/quantum = {row['gamma_over_quantum']!r}")


@main.command()
@common_options
@click.option("--modes", "n_modes", type=int, default=3, show_default=True, help="Band size (2-6).")
@click.option("--cutoff", type=int, default=12, show_default=True, help="Per-mode number cutoff.")
@click.option("--x", "x_value", type=float, default=math.log(2.0), show_default=True)
@click.option("--subfraction", type=float, default=0.3, show_default=True, help="Segment fraction l/L.")
@click.pass_context
def bhj(ctx, seed, samples, out, fmt, config_path, n_modes, cutoff, x_value, subfraction):
    """Quantized-string segment fluctuation with zero-point bookkeeping."""
    p = _merged(ctx, config_path, n_modes=n_modes, cutoff=cutoff,
                x_value=x_value, subfraction=subfraction)
    base = 200_000
    state = quantized_string.MultiModeState.thermal(
        tuple(base + i for i in range(p["n_modes"])),
        L=1.0, c=1.0, x_center=p["x_value"], n_max=p["cutoff"], leakage_bound=1e-2,
    )
    res = quantized_string.phase_averaged_fluctuation(state, l=p["subfraction"])
    row = {
        "modes": p["n_modes"],
        "cutoff": p["cutoff"],
        "x": p["x_value"],
        "quantum_budget": res.quantum_budget,
        "classical_budget": res.classical_budget,
        "pair_oracle": res.pair_oracle,
        "particle_share": res.pair_particle,
        "wave_share": res.pair_wave,
        "zero_point_residual": res.cancellation_rel_residual,
        "fast_term_budget": res.fast_term_budget,
    }
    _emit({"bhj": row}, [row], out, fmt)
    oracle_dev = abs(res.quantum_budget - res.pair_oracle) / res.pair_oracle
    click.echo(f"bhj: zero-point residual {res.cancellation_rel_residual!r}, oracle dev {oracle_dev!r}")
    if res.cancellation_rel_residual > 1e-10 or oracle_dev > 1e-10:
        click.echo("bhj: zero-point cancellation or oracle agreement failed", err=True)
        sys.exit(1)


@main.command()
@common_options
@click.option("--max-n", type=int, default=7, show_default=True, help="Largest receptacle/quanta count.")
@click.pass_context
def combinatorics_cmd(ctx, seed, samples, out, fmt, config_path, max_n):
    """Exact counting identities over all small instances."""
    p = _merged(ctx, config_path, max_n=max_n)
    rows = []
    all_ok = True
    for N in range(2, p["max_n"] + 1):
        for n in range(0, p["max_n"] + 1):
            rep = comb.verify_count_identities(N, n)
            all_ok &= rep.ok
            rows.append({
                "N": N,
                "n": n,
                "sum_collocations": rep.sum_collocations,
                "expected_collocations": rep.expected_collocations,
                "sum_assoc_products": rep.sum_assoc_products,
                "expected_assoc_products": rep.expected_assoc_products,
                "pass": rep.ok,
            })
    _emit({"identities": rows}, rows, out, fmt)
    click.echo(f"combinatorics: {len(rows)} instances, all_ok={all_ok}")
    if not all_ok:
        click.echo("combinatorics: an exact identity failed", err=True)
        sys.exit(1)


main.add_command(combinatorics_cmd, name="combinatorics")


@main.command()
@common_options
@click.option("--modes", "n_modes", type=int, default=1, show_default=True)
@click.option("--x", "x_value", type=float, default=math.log(2.0), show_default=True)
@click.option("--events", type=int, default=200_000, show_default=True)
@click.option("--atoms", type=float, default=2.0, show_default=True)
@click.pass_context
def kinetics_cmd(ctx, seed, samples, out, fmt, config_path, n_modes, x_value, events, atoms):
    """Matter-mediated equilibration run with channel tallies."""
    p = _merged(ctx, config_path, n_modes=n_modes, x_value=x_value, events=events, atoms=atoms)
    n_events = p["events"] if samples is None else samples
    rng = np.random.default_rng(seed)
    res = kinetics.equilibration_run(
        p["n_modes"], p["x_value"], p["atoms"], n_events, rng, burn_in=min(5000, n_events // 10)
    )
    mean, var = res.empirical_moments()
    split = kinetics.channel_split(res)
    row = {
        "modes": p["n_modes"],
        "x": p["x_value"],
        "events": res.n_events,
        "empirical_mean": mean,
        "empirical_variance": var,
        "analytic_mean": res.n_bar_analytic,
        "spontaneous": split.spontaneous,
        "stimulated": split.stimulated,
        "conservation_ok": res.conservation_ok,
    }
    _emit({"kinetics": row}, [row], out, fmt)
    click.echo(f"kinetics: mean {mean!r} vs {res.n_bar_analytic!r}")
    if not res.conservation_ok:
        click.echo("kinetics: quantum conservation audit failed", err=True)
        sys.exit(1)


main.add_command(kinetics_cmd, name="kinetics")


@main.command("verify-all")
@common_options
@click.pass_context
def verify_all(ctx, seed, samples, out, fmt, config_path):
    """Run the whole identity battery and report one line per check."""
    _merged(ctx, config_path)  # validates config keys; no extra flags here
    results = verify.run_all_checks(seed)
    rows = [r.row() for r in results]
    n_pass = sum(r.passed for r in results)
    n_fail = len(results) - n_pass
    payload = {"seed": seed, "n_pass": n_pass, "n_fail": n_fail, "checks": rows}
    _emit(payload, rows, out, fmt)
    for r in results:
        click.echo(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
    click.echo(f"verify-all: {n_pass} passed, {n_fail} failed")
    if n_fail:
        first = next(r for r in results if not r.passed)
        click.echo(f"verify-all: first failing identity: {first.name}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
