"""Matter-mediated equilibration of cavity modes.

A two-level bath (the carbon-speck catalyst) exchanges single quanta with a
set of modes.  Per-mode emission rates carry the (n + 1) factor whose "+1"
part is the spontaneous channel and whose "n" part is the stimulated one;
absorption rates carry n.  The stationary occupation law is geometric with
parameter equal to the excited/ground population ratio, and an empty cavity
never changes state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from hohlraum.distributions import bose_pmf

__all__ = [
    "CavityState",
    "ChannelSplit",
    "FrozenCavity",
    "RateTable",
    "RunResult",
    "channel_split",
    "equilibration_run",
    "step_gillespie",
    "thermal_cavity",
]


class FrozenCavity(RuntimeError):
    """All rates vanish: with no material agent the state can never change."""


@dataclass
class CavityState:
    """Mode occupations plus the (held fixed) two-level bath populations.

    The populations keep the thermal ratio n2/n1 = e^-x of an infinite bath
    behind the speck, which makes the stationary law exactly geometric.
    """

    mode_occupations: np.ndarray
    n1: float
    n2: float
    x: float

    def __post_init__(self):
        self.mode_occupations = np.asarray(self.mode_occupations, dtype=np.int64)
        if np.any(self.mode_occupations < 0):
            raise ValueError("occupations are non-negative")
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError("atom populations are non-negative")


def thermal_cavity(
    m_modes: int,
    x: float,
    atoms: float,
    initial_quanta: np.ndarray | None = None,
) -> CavityState:
    """Cavity of m_modes with `atoms` two-level systems at Boltzmann ratio e^-x."""
    if m_modes < 1:
        raise ValueError("need at least one mode")
    if x <= 0:
        raise ValueError("x must be positive")
    if atoms < 0:
        raise ValueError("atom count is non-negative")
    boltzmann = math.exp(-x)
    n1 = atoms / (1.0 + boltzmann)
    n2 = atoms - n1
    occ = np.zeros(m_modes, dtype=np.int64) if initial_quanta is None else initial_quanta
    return CavityState(mode_occupations=occ, n1=n1, n2=n2, x=x)


@dataclass(frozen=True)
class RateTable:
    """Per-mode upward (emission) and downward (absorption) rates."""

    up: np.ndarray  # n2 * A * (n + 1); the "+1" share is the spontaneous channel
    down: np.ndarray  # n1 * A * n

    @property
    def total(self) -> float:
        return float(self.up.sum() + self.down.sum())


def rate_table(state: CavityState, A: float = 1.0) -> RateTable:
    n = state.mode_occupations
    return RateTable(up=state.n2 * A * (n + 1.0), down=state.n1 * A * n)


def relaxation_time(x: float, atoms: float, A: float = 1.0) -> float:
    """Decay time of occupation transients: 1/(A (n1 - n2)).

    The mean occupation obeys d<n>/dt = A n2 - A (n1 - n2) <n>, so snapshots
    spaced several relaxation times apart are effectively independent.
    """
    b = math.exp(-x)
    return (1.0 + b) / (A * atoms * (1.0 - b))


@dataclass(frozen=True)
class GillespieStep:
    dt: float
    mode: int
    kind: str  # "emission-spontaneous" | "emission-stimulated" | "absorption"


def step_gillespie(
    state: CavityState, rng: np.random.Generator, A: float = 1.0
) -> GillespieStep:
    """One exact simulation step: exponential waiting time, proportional pick.

    Mutates the state by one quantum on one mode.  Emission events are
    attributed to the spontaneous or stimulated channel with probabilities
    1/(n+1) and n/(n+1).
    """
    rates = rate_table(state, A)
    total = rates.total
    if total <= 0.0:
        raise FrozenCavity("no positive rate: the cavity cannot rearrange itself")
    dt = -math.log1p(-rng.random()) / total

    target = rng.random() * total
    cumulative = np.cumsum(np.concatenate([rates.up, rates.down]))
    idx = int(np.searchsorted(cumulative, target, side="right"))
    m = state.mode_occupations.size
    if idx < m:
        n_before = int(state.mode_occupations[idx])
        state.mode_occupations[idx] += 1
        if rng.random() * (n_before + 1.0) < 1.0:
            kind = "emission-spontaneous"
        else:
            kind = "emission-stimulated"
        return GillespieStep(dt=dt, mode=idx, kind=kind)
    mode = idx - m
    state.mode_occupations[mode] -= 1
    return GillespieStep(dt=dt, mode=mode, kind="absorption")


@dataclass
class RunResult:
    """Time-weighted occupation statistics and channel tallies of one run."""

    x: float
    n_events: int
    total_time: float
    histograms: list[np.ndarray]  # per mode, sojourn time at each occupation
    spontaneous_count: int
    stimulated_count: int
    absorption_count: int
    up_transitions: dict[int, int]  # counts of n -> n+1, keyed by n (mode 0)
    down_transitions: dict[int, int]  # counts of n+1 -> n, keyed by n (mode 0)
    checkpoints: list[tuple[int, float]]  # (events so far, TV distance to analytic)
    quanta_initial: int
    quanta_final: int
    thinned_samples: np.ndarray | None = None  # (n_samples, m_modes) snapshots
    event_log: list[GillespieStep] | None = None

    @property
    def n_bar_analytic(self) -> float:
        return 1.0 / math.expm1(self.x)

    def occupation_law(self, mode: int = 0) -> np.ndarray:
        """Empirical stationary law of one mode (sojourn-time weighted)."""
        hist = self.histograms[mode]
        return hist / hist.sum()

    def pooled_law(self) -> np.ndarray:
        pooled = sum(self.histograms)
        return pooled / pooled.sum()

    def empirical_moments(self, mode: int = 0) -> tuple[float, float]:
        law = self.occupation_law(mode)
        levels = np.arange(law.size)
        mean = float(np.dot(law, levels))
        var = float(np.dot(law, (levels - mean) ** 2))
        return mean, var

    @property
    def conservation_ok(self) -> bool:
        emitted = self.spontaneous_count + self.stimulated_count
        return self.quanta_final - self.quanta_initial == emitted - self.absorption_count


def _tv_to_geometric(hist: np.ndarray, n_bar: float) -> float:
    total = hist.sum()
    if total <= 0:
        return 1.0
    law = hist / total
    levels = np.arange(law.size)
    analytic = bose_pmf(levels, n_bar)
    tail = max(0.0, 1.0 - float(analytic.sum()))
    return 0.5 * (float(np.abs(law - analytic).sum()) + tail)


def equilibration_run(
    m_modes: int,
    x: float,
    atoms: float,
    n_events: int,
    rng: np.random.Generator,
    initial_quanta: np.ndarray | None = None,
    A: float = 1.0,
    hist_levels: int = 64,
    burn_in: int = 0,
    sample_dt: float | None = None,
    keep_event_log: bool = False,
) -> RunResult:
    """Run the exact simulation for n_events events and tally statistics.

    Sojourn times are credited to the state occupied while waiting, so the
    histograms estimate the stationary law of the jump process.  With
    sample_dt set, the occupation vector is snapshotted on a fixed time grid
    (after burn-in); fixed-time sampling draws from the time-stationary law,
    and spacing well beyond the relaxation time makes the snapshots
    effectively independent, which a chi-square needs.  A cavity with no
    atoms freezes immediately and the run returns with zero events.
    """
    state = thermal_cavity(m_modes, x, atoms, initial_quanta)
    quanta_initial = int(state.mode_occupations.sum())
    histograms = [np.zeros(hist_levels) for _ in range(m_modes)]
    up_tr: dict[int, int] = {}
    down_tr: dict[int, int] = {}
    spont = stim = absorbed = 0
    total_time = 0.0
    checkpoints: list[tuple[int, float]] = []
    marks = {max(1, n_events // 10), max(1, n_events // 2), n_events}
    log: list[GillespieStep] | None = [] if keep_event_log else None
    snapshots: list[np.ndarray] = []
    next_sample = sample_dt if sample_dt is not None else math.inf

    events = 0
    for events in range(1, n_events + 1):
        occ_before = state.mode_occupations.copy()
        try:
            step = step_gillespie(state, rng, A)
        except FrozenCavity:
            events -= 1
            break
        if events > burn_in:
            total_time += step.dt
            for mode in range(m_modes):
                level = min(int(occ_before[mode]), hist_levels - 1)
                histograms[mode][level] += step.dt
            # the pre-jump state occupies the whole waiting interval
            while total_time >= next_sample:
                snapshots.append(occ_before.copy())
                next_sample += sample_dt
        if step.kind == "absorption":
            absorbed += 1
            if step.mode == 0:
                n_after = int(state.mode_occupations[0])
                down_tr[n_after] = down_tr.get(n_after, 0) + 1
        else:
            if step.kind == "emission-spontaneous":
                spont += 1
            else:
                stim += 1
            if step.mode == 0:
                n_before = int(occ_before[0])
                up_tr[n_before] = up_tr.get(n_before, 0) + 1
        if log is not None:
            log.append(step)
        if events in marks:
            checkpoints.append((events, _tv_to_geometric(histograms[0], 1.0 / math.expm1(x))))

    return RunResult(
        x=x,
        n_events=events,
        total_time=total_time,
        histograms=histograms,
        spontaneous_count=spont,
        stimulated_count=stim,
        absorption_count=absorbed,
        up_transitions=up_tr,
        down_transitions=down_tr,
        checkpoints=checkpoints,
        quanta_initial=quanta_initial,
        quanta_final=int(state.mode_occupations.sum()),
        thinned_samples=np.array(snapshots) if snapshots else None,
        event_log=log,
    )


@dataclass(frozen=True)
class ChannelSplit:
    """Spontaneous / stimulated emission tallies against the occupation mean."""

    spontaneous: int
    stimulated: int
    predicted_ratio: float  # n_bar of the bath

    @property
    def ratio(self) -> float:
        if self.spontaneous == 0:
            raise ValueError("no spontaneous events recorded")
        return self.stimulated / self.spontaneous

    @property
    def ratio_std_error(self) -> float:
        # Poisson-dominated error of a count ratio
        return self.ratio * math.sqrt(1.0 / max(self.stimulated, 1) + 1.0 / self.spontaneous)


def channel_split(result: RunResult) -> ChannelSplit:
    """Long-run stimulated/spontaneous tally; the ratio converges to n_bar."""
    return ChannelSplit(
        spontaneous=result.spontaneous_count,
        stimulated=result.stimulated_count,
        predicted_ratio=result.n_bar_analytic,
    )
