"""Field quantization of a clamped string on a truncated number basis.

Ladder matrices, the segment-energy deviation operator with its exact
overlap kernels, phase averaging as diagonal projection, the cancellation of
the zero-point quarter terms between the quadratic and cross contributions,
and the classical c-number substitution that keeps only the wave-like part.
Desk scale: a few modes, per-mode cutoffs up to sixteen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

__all__ = [
    "FockOperator",
    "LeakageError",
    "MultiModeState",
    "SegmentEnergyMatrix",
    "SegmentFluctuation",
    "build_ladder",
    "hamiltonian",
    "kernel_delta_limit",
    "overlap_kernels",
    "phase_averaged_fluctuation",
    "segment_delta_matrix",
]

TENSOR_DIM_BUDGET = 250_000


class LeakageError(ValueError):
    """Thermal weight above the truncation cutoff exceeds the declared bound."""


class TensorSizeError(ValueError):
    """Requested tensor-product dimension exceeds the configured budget."""


@dataclass(frozen=True)
class FockOperator:
    """A single-mode operator embedded in the product space."""

    dim: int
    matrix: sp.csr_matrix
    mode_index: int


def build_ladder(n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Annihilation and creation matrices on number levels 0..n_max.

    The commutator equals the identity on levels up to n_max - 1; the top
    diagonal entry is -n_max, the unavoidable truncation artifact.
    """
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    roots = np.sqrt(np.arange(1, n_max + 1, dtype=float))
    a = np.diag(roots, k=1)
    return a, a.T.copy()


def _thermal_weights(x: float, n_max: int, leakage_bound: float) -> np.ndarray:
    """Normalized geometric weights on 0..n_max with the tail-leakage guard."""
    b = math.exp(-x)
    leakage = b ** (n_max - 1)  # untruncated weight above level n_max - 2
    if leakage >= leakage_bound:
        raise LeakageError(
            f"weight {leakage:.3e} above level {n_max - 2} exceeds "
            f"bound {leakage_bound:.3e}; raise the cutoff"
        )
    w = (1.0 - b) * b ** np.arange(n_max + 1)
    return w / w.sum()


@dataclass(frozen=True)
class MultiModeState:
    """Thermal (or vacuum) diagonal mixture over a few string harmonics.

    mode_indices are the harmonic numbers n (omega_n = n c pi / L); weights
    hold one normalized distribution per mode over levels 0..n_max.
    """

    mode_indices: tuple[int, ...]
    L: float
    c: float
    n_max: int
    weights: tuple[tuple[float, ...], ...]
    hbar: float = 1.0

    def __post_init__(self):
        if len(self.mode_indices) < 1:
            raise ValueError("need at least one mode")
        if len(set(self.mode_indices)) != len(self.mode_indices):
            raise ValueError("mode indices must be distinct")
        if any(n < 1 for n in self.mode_indices):
            raise ValueError("harmonic indices start at 1")
        if self.L <= 0 or self.c <= 0 or self.hbar <= 0:
            raise ValueError("L, c and hbar must be positive")
        dim = (self.n_max + 1) ** len(self.mode_indices)
        if dim > TENSOR_DIM_BUDGET:
            raise TensorSizeError(f"product dimension {dim} exceeds {TENSOR_DIM_BUDGET}")
        for w in self.weights:
            if abs(sum(w) - 1.0) > 1e-12:
                raise ValueError("per-mode weights must be normalized")

    @classmethod
    def thermal(
        cls,
        mode_indices: tuple[int, ...],
        L: float,
        c: float,
        x_center: float,
        n_max: int,
        leakage_bound: float = 1e-6,
        hbar: float = 1.0,
    ) -> "MultiModeState":
        """Common-temperature state: x_n = x_center * n / n_center per mode."""
        if x_center <= 0:
            raise ValueError("x_center must be positive")
        n_center = mode_indices[len(mode_indices) // 2]
        weights = tuple(
            tuple(_thermal_weights(x_center * n / n_center, n_max, leakage_bound))
            for n in mode_indices
        )
        return cls(
            mode_indices=tuple(mode_indices), L=L, c=c, n_max=n_max,
            weights=weights, hbar=hbar,
        )

    @classmethod
    def vacuum(
        cls, mode_indices: tuple[int, ...], L: float, c: float, n_max: int,
        hbar: float = 1.0,
    ) -> "MultiModeState":
        w = (1.0,) + (0.0,) * n_max
        return cls(
            mode_indices=tuple(mode_indices), L=L, c=c, n_max=n_max,
            weights=(w,) * len(mode_indices), hbar=hbar,
        )

    @property
    def n_modes(self) -> int:
        return len(self.mode_indices)

    @property
    def dim(self) -> int:
        return (self.n_max + 1) ** self.n_modes

    def omega(self, n: int) -> float:
        return n * self.c * math.pi / self.L

    @property
    def omegas(self) -> np.ndarray:
        return np.array([self.omega(n) for n in self.mode_indices])

    @property
    def mode_means(self) -> np.ndarray:
        """Truncated thermal occupation per mode."""
        levels = np.arange(self.n_max + 1, dtype=float)
        return np.array([float(np.dot(w, levels)) for w in self.weights])

    def weight_vector(self) -> np.ndarray:
        """Product-space diagonal weights (tensor order: first mode slowest)."""
        out = np.array([1.0])
        for w in self.weights:
            out = np.kron(out, np.asarray(w))
        return out

    def embed(self, op: np.ndarray, mode_pos: int) -> sp.csr_matrix:
        """Single-mode operator at tensor slot mode_pos, identities elsewhere."""
        eye = sp.identity(self.n_max + 1, format="csr")
        parts = [eye] * self.n_modes
        parts[mode_pos] = sp.csr_matrix(op)
        out = parts[0]
        for p in parts[1:]:
            out = sp.kron(out, p, format="csr")
        return out


def hamiltonian(state: MultiModeState) -> sp.csr_matrix:
    """Total energy sum over modes of hbar omega_n (a+ a + 1/2) in the product space."""
    n_levels = np.arange(state.n_max + 1, dtype=float)
    h = sp.csr_matrix((state.dim, state.dim))
    for pos, n in enumerate(state.mode_indices):
        number_op = np.diag(state.hbar * state.omega(n) * (n_levels + 0.5))
        h = h + state.embed(number_op, pos)
    return h


def overlap_kernels(n: int, m: int, l: float, L: float) -> tuple[float, float]:
    """Segment overlap integrals (K'_nm, K_nm) of two harmonics on (0, l).

    K' = sin((k_n - k_m) l)/(k_n - k_m) + sin((k_n + k_m) l)/(k_n + k_m) and
    K flips the sign of the second term; the equal-index limit of the first
    term is l.  Symmetric under swapping the indices.
    """
    if n < 1 or m < 1:
        raise ValueError("harmonic indices start at 1")
    if not 0.0 < l < L:
        raise ValueError("need 0 < l < L")
    k = math.pi / L
    k_sum = (n + m) * k
    resonant = l if n == m else math.sin((n - m) * k * l) / ((n - m) * k)
    non_resonant = math.sin(k_sum * l) / k_sum
    return resonant + non_resonant, resonant - non_resonant


@dataclass(frozen=True)
class SegmentEnergyMatrix:
    """Deviation of the segment energy from its (l/L) share of the total.

    delta = delta_q + delta_p, both self-adjoint; kernels maps (n, m) to the
    (K', K) pair that weighted the assembly.
    """

    delta: sp.csr_matrix
    delta_q: sp.csr_matrix
    delta_p: sp.csr_matrix
    kernels: dict[tuple[int, int], tuple[float, float]]
    l: float
    L: float


def segment_delta_matrix(state: MultiModeState, l: float) -> SegmentEnergyMatrix:
    """Assemble the off-diagonal segment-energy operator for the state's modes.

    Sum over distinct mode pairs of
    hbar sqrt(omega_n omega_m) [q_n q_m K' + p_n p_m K] / L; the rapidly
    oscillating single-mode term is dropped (its thermal mean vanishes
    identically and its budget share is quantified separately).
    """
    if not 0.0 < l < state.L:
        raise ValueError("need 0 < l < L")
    a, a_dag = build_ladder(state.n_max)
    q = (a + a_dag) / math.sqrt(2.0)
    p = (a - a_dag) / (1j * math.sqrt(2.0))

    dim = state.dim
    delta_q = sp.csr_matrix((dim, dim), dtype=complex)
    delta_p = sp.csr_matrix((dim, dim), dtype=complex)
    kernels: dict[tuple[int, int], tuple[float, float]] = {}
    for i in range(state.n_modes):
        q_i = state.embed(q, i)
        p_i = state.embed(p, i)
        for j in range(i + 1, state.n_modes):
            n_i, n_j = state.mode_indices[i], state.mode_indices[j]
            k_prime, k_plain = overlap_kernels(n_i, n_j, l, state.L)
            kernels[(n_i, n_j)] = (k_prime, k_plain)
            scale = (
                state.hbar
                * math.sqrt(state.omega(n_i) * state.omega(n_j))
                / state.L
            )
            q_j = state.embed(q, j)
            p_j = state.embed(p, j)
            delta_q = delta_q + scale * k_prime * (q_i @ q_j)
            delta_p = delta_p + scale * k_plain * (p_i @ p_j)
    return SegmentEnergyMatrix(
        delta=(delta_q + delta_p).tocsr(),
        delta_q=delta_q.tocsr(),
        delta_p=delta_p.tocsr(),
        kernels=kernels,
        l=l,
        L=state.L,
    )


def _diag_of_product(left: sp.csr_matrix, right: sp.csr_matrix) -> np.ndarray:
    """Diagonal of left @ right for self-adjoint right, via row inner products."""
    return np.asarray(left.multiply(right.conj()).sum(axis=1)).ravel()


@dataclass(frozen=True)
class SegmentFluctuation:
    """Phase-averaged fluctuation budget of a string segment, all pieces."""

    quantum_budget: float
    classical_budget: float
    qq_pp_part: float
    cross_part: float
    zero_point_qq_pp: float
    zero_point_cross: float
    zero_point_residual: float
    pair_oracle: float
    pair_particle: float  # closed-form particle share sum (n_i + n_j)/2 per pair
    pair_wave: float  # closed-form wave share sum n_i n_j per pair
    fast_term_budget: float
    mode_means: tuple[float, ...]

    @property
    def cancellation_rel_residual(self) -> float:
        """Left-over zero-point weight after adding the cross term."""
        return abs(self.zero_point_residual) / abs(self.zero_point_qq_pp)


def phase_averaged_fluctuation(state: MultiModeState, l: float) -> SegmentFluctuation:
    """Thermal expectation of the diagonal of the squared deviation operator.

    Phase averaging keeps only the number-basis diagonal.  The vacuum value
    of the quadratic part carries the quarter zero-point products; the cross
    part is state-independent and cancels them, leaving a particle plus wave
    budget.  The classical value repeats the computation with commuting
    amplitudes of the same per-mode mean energies and uniform random phases,
    which kills the particle term.
    """
    seg = segment_delta_matrix(state, l)
    w = state.weight_vector()

    diag_sq = _diag_of_product(seg.delta, seg.delta).real
    diag_qq = _diag_of_product(seg.delta_q, seg.delta_q).real
    diag_pp = _diag_of_product(seg.delta_p, seg.delta_p).real
    diag_cross = 2.0 * _diag_of_product(seg.delta_q, seg.delta_p).real

    quantum_budget = float(w @ diag_sq)
    qq_pp = float(w @ (diag_qq + diag_pp))
    cross = float(w @ diag_cross)

    # vacuum projections isolate the zero-point pieces
    vac = np.zeros_like(w)
    vac[0] = 1.0
    zp_qq_pp = float(vac @ (diag_qq + diag_pp))
    zp_cross = float(vac @ diag_cross)

    means = state.mode_means
    omegas = state.omegas

    # truncation-aware per-mode expectations: the top level of the cutoff
    # matrices carries diag(q^2) = n_max/2 and commutator entry -n_max
    levels = np.arange(state.n_max + 1, dtype=float)
    top_w = np.array([w[-1] for w in state.weights])
    q2_mean = np.array(
        [float(np.dot(state.weights[i], levels + 0.5)) for i in range(state.n_modes)]
    ) - top_w * (state.n_max + 1) / 2.0
    comm_mean = 1.0 - top_w * (state.n_max + 1)

    classical = 0.0
    oracle = 0.0
    particle = 0.0
    wave = 0.0
    for i in range(state.n_modes):
        for j in range(i + 1, state.n_modes):
            k_prime, k_plain = seg.kernels[(state.mode_indices[i], state.mode_indices[j])]
            scale = (state.hbar**2 * omegas[i] * omegas[j]) / state.L**2
            kk = k_prime**2 + k_plain**2
            classical += scale * kk * means[i] * means[j]
            particle += scale * kk * (means[i] + means[j]) / 2.0
            wave += scale * kk * means[i] * means[j]
            oracle += scale * (
                kk * q2_mean[i] * q2_mean[j]
                - k_prime * k_plain * comm_mean[i] * comm_mean[j] / 2.0
            )

    # dropped fast term: sum_n hbar omega_n (q_n^2 - p_n^2) sin(2 k_n l)/(2 k_n);
    # its thermal mean is zero, its own squared diagonal is the residual share
    fast = 0.0
    levels = np.arange(state.n_max + 1, dtype=float)
    for pos, n in enumerate(state.mode_indices):
        k_n = n * math.pi / state.L
        coeff = state.hbar * state.omega(n) * math.sin(2.0 * k_n * l) / (2.0 * k_n)
        w_mode = np.asarray(state.weights[pos])
        # diag of (a^2 + a+^2)^2 is (n+1)(n+2) + n(n-1)
        sq_diag = (levels + 1.0) * (levels + 2.0) + levels * (levels - 1.0)
        fast += coeff**2 * float(w_mode @ sq_diag)

    return SegmentFluctuation(
        quantum_budget=quantum_budget,
        classical_budget=classical,
        qq_pp_part=qq_pp,
        cross_part=cross,
        zero_point_qq_pp=zp_qq_pp,
        zero_point_cross=zp_cross,
        zero_point_residual=zp_qq_pp + zp_cross,
        pair_oracle=oracle,
        pair_particle=particle,
        pair_wave=wave,
        fast_term_budget=fast,
        mode_means=tuple(float(v) for v in means),
    )


def kernel_delta_limit(
    l: float,
    c: float,
    omegas,
    test_fn=None,
    u_max: float = 5000.0,
    du: float = 0.01,
) -> float:
    """Worst deviation of the smoothing kernel from a point evaluation.

    For each omega on the grid, integrates
    (c/(pi l)) sin^2((w - w')l/c)/(w - w')^2 against the test function over
    w' > 0 and compares with f(omega).  The kernel concentrates as l grows,
    so the deviation falls off like c/(omega l).
    """
    if l <= 0 or c <= 0:
        raise ValueError("l and c must be positive")
    f = (lambda w: np.ones_like(w)) if test_fn is None else test_fn
    worst = 0.0
    for omega in np.atleast_1d(np.asarray(omegas, dtype=float)):
        if omega <= 0:
            raise ValueError("omegas must be positive")
        a = omega * l / c  # lower integration limit in kernel units
        u = np.arange(-min(a, u_max), u_max, du)
        safe = np.where(u == 0.0, 1.0, u)
        g = np.where(u == 0.0, 1.0, np.sin(u) ** 2 / safe**2)
        integral = np.trapz(g * f(omega + c * u / l), u) / math.pi
        worst = max(worst, abs(integral - float(f(np.array([omega]))[0])))
    return worst
