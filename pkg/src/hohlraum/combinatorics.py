"""Exact counting for quanta distributed over receptacles.

Combinations with repetition, the collocation / association counts for a
given occupancy pattern, exhaustive enumeration of occupancy patterns with
their integer identities, constrained-maximization equilibria (including the
exclusion-principle variant), and the asymptotic entropy check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from scipy.special import gammaln

__all__ = [
    "CountIdentityReport",
    "DistributionMode",
    "EnumerationBudgetError",
    "FermiReport",
    "LagrangeEquilibria",
    "count_associations",
    "count_collocations",
    "enumerate_distribution_modes",
    "fermi_occupation_maximizer",
    "fermi_variant",
    "lagrange_equilibria",
    "planck_W",
    "stirling_entropy_check",
    "verify_count_identities",
]

PARTITION_BUDGET = 10**6


class EnumerationBudgetError(RuntimeError):
    """Instance would require enumerating more partitions than the budget."""


@dataclass(frozen=True)
class DistributionMode:
    """Occupancy pattern: occupancy_counts[i] receptacles hold exactly i quanta."""

    occupancy_counts: tuple[int, ...]
    N: int
    n: int

    def __post_init__(self):
        if any(c < 0 for c in self.occupancy_counts):
            raise ValueError("occupancy counts are non-negative")
        if sum(self.occupancy_counts) != self.N:
            raise ValueError("occupancy counts must sum to the receptacle count")
        if sum(i * c for i, c in enumerate(self.occupancy_counts)) != self.n:
            raise ValueError("weighted occupancy counts must sum to the quanta count")


def planck_W(N: int, P: int) -> int:
    """Number of ways to distribute P identical quanta over N receptacles."""
    if N < 1 or P < 0:
        raise ValueError("need N >= 1 and P >= 0")
    return math.comb(N + P - 1, P)


def count_collocations(d: DistributionMode) -> int:
    """Arrangements with labelled receptacles and identical quanta: N!/prod(N_i!)."""
    out = math.factorial(d.N)
    for c in d.occupancy_counts:
        out //= math.factorial(c)
    return out


def count_associations(d: DistributionMode) -> int:
    """Arrangements with labelled quanta for one collocation: n!/prod((i!)^N_i)."""
    out = math.factorial(d.n)
    for i, c in enumerate(d.occupancy_counts):
        if c and i >= 2:
            out //= math.factorial(i) ** c
    return out


def _partitions(n: int, max_parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n into at most max_parts parts, each at most max_part."""
    if n == 0:
        yield ()
        return
    if max_parts == 0 or max_part == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def enumerate_distribution_modes(
    N: int, n: int, p_max: int | None = None
) -> Iterator[DistributionMode]:
    """Yield every occupancy pattern of n quanta over N receptacles exactly once.

    Patterns correspond to partitions of n into at most N parts (each part at
    most p_max when given).  Instances beyond the partition budget are refused.
    """
    if N < 1 or n < 0:
        raise ValueError("need N >= 1 and n >= 0")
    cap = n if p_max is None else min(p_max, n)
    if N * max(n, 1) > PARTITION_BUDGET:
        raise EnumerationBudgetError(f"instance (N={N}, n={n}) exceeds the budget")
    if p_max is not None and N * cap < n:
        return
    for partition in _partitions(n, N, cap if n else 0):
        counts = [0] * (max(partition, default=0) + 1)
        counts[0] = N - len(partition)
        for part in partition:
            counts[part] += 1
        yield DistributionMode(occupancy_counts=tuple(counts), N=N, n=n)


@dataclass(frozen=True)
class CountIdentityReport:
    """Exact enumeration sums against their closed-form counterparts."""

    N: int
    n: int
    sum_collocations: int
    expected_collocations: int
    sum_assoc_products: int
    expected_assoc_products: int

    @property
    def ok(self) -> bool:
        return (
            self.sum_collocations == self.expected_collocations
            and self.sum_assoc_products == self.expected_assoc_products
        )


def verify_count_identities(N: int, n: int) -> CountIdentityReport:
    """Exhaustively check sum(A) = C(N+n-1, n) and sum(A*B) = N^n."""
    sum_a = 0
    sum_ab = 0
    for mode in enumerate_distribution_modes(N, n):
        a = count_collocations(mode)
        sum_a += a
        sum_ab += a * count_associations(mode)
    return CountIdentityReport(
        N=N,
        n=n,
        sum_collocations=sum_a,
        expected_collocations=planck_W(N, n),
        sum_assoc_products=sum_ab,
        expected_assoc_products=N**n,
    )


# ---------------------------------------------------------------------------
# constrained-maximization equilibria
# ---------------------------------------------------------------------------

_SOLVER_TOLS = {"tol_gap_abs": 1e-12, "tol_gap_rel": 1e-12, "tol_feas": 1e-12}


def _maximize_log_count(
    N: float,
    n: float,
    i_values: np.ndarray,
    extra_linear: np.ndarray | None = None,
) -> np.ndarray:
    """Minimize the Stirling form sum (N_i log N_i - N_i) (+ optional linear
    term) under sum N_i = N and sum i N_i = n.

    Stirling-before-maximizing is the classical method; it makes the
    closed-form equilibria exact stationary points, whereas the full
    log-gamma objective would shift the deep tail by its digamma correction.
    The convex program is handed to an exponential-cone interior-point solver.
    """
    import cvxpy as cp

    linear = np.zeros_like(i_values) if extra_linear is None else extra_linear
    x = cp.Variable(i_values.size, pos=True)
    objective = cp.Minimize(cp.sum(-cp.entr(x) - x) + linear @ x)
    problem = cp.Problem(objective, [cp.sum(x) == N, i_values @ x == n])
    problem.solve(solver="CLARABEL", **_SOLVER_TOLS)
    if problem.status != "optimal":
        raise RuntimeError(f"occupancy maximization did not converge: {problem.status}")
    return np.asarray(x.value)


@dataclass(frozen=True)
class LagrangeEquilibria:
    """Closed-form equilibria plus the numerically maximized occupancies.

    bose_counts maximize the labelled-receptacle count; the maximizer of the
    labelled-quanta count is the balls-in-bins occupancy N * Poisson(n/N),
    whose continuum limit is the exponential law quoted as maxwell_counts.
    """

    epsilon_over_kT: float
    N: float
    n: float
    i_values: np.ndarray
    bose_counts: np.ndarray
    maxwell_counts: np.ndarray
    balls_in_bins_counts: np.ndarray
    bose_maximizer: np.ndarray
    assoc_maximizer: np.ndarray
    bose_max_rel_err: float
    assoc_max_rel_err: float


def lagrange_equilibria(
    N: int, epsilon_over_kT: float, i_max: int | None = None
) -> LagrangeEquilibria:
    """Equilibrium occupancies at level spacing epsilon for N receptacles.

    Closed forms: N(1-e^-x)e^-ix for identical quanta and (N x) e^-ix for the
    labelled-quanta continuum limit, x = epsilon/kT.  Both maximizations are
    carried out on the continuous relaxation with log-gamma terms and compared
    against their analytic stationary points.
    """
    if epsilon_over_kT <= 0:
        raise ValueError("epsilon/kT must be positive")
    x = epsilon_over_kT
    b = math.exp(-x)
    n_bar = b / (1.0 - b)
    n = N * n_bar
    if i_max is None:
        # keep the closed-form tail below ~1e-12 of the total
        i_max = max(30, int(30.0 / x) + 5)
    i_values = np.arange(i_max + 1, dtype=float)

    bose_counts = N * (1.0 - b) * b**i_values
    maxwell_counts = N * x * b**i_values
    lam = n / N
    balls_in_bins = N * np.exp(
        i_values * math.log(lam) - lam - gammaln(i_values + 1.0)
    )

    # labelled receptacles maximize log(N!/prod Ni!); labelled quanta maximize
    # log(A*B), which adds the linear weights Ni*log(i!).  The latter grid is
    # trimmed to representable occupancies so the cone solver stays scaled.
    bose_opt = _maximize_log_count(N, n, i_values)
    keep = np.nonzero(balls_in_bins > N * 1e-10)[0]
    assoc_cut = min(int(keep[-1]) + 2, i_values.size) if keep.size else i_values.size
    assoc_i = i_values[:assoc_cut]
    assoc_opt_head = _maximize_log_count(
        N, n, assoc_i, extra_linear=gammaln(assoc_i + 1.0)
    )
    assoc_opt = np.zeros_like(i_values)
    assoc_opt[:assoc_cut] = assoc_opt_head

    def rel_err(opt: np.ndarray, ref: np.ndarray) -> float:
        mask = ref > N * 1e-6
        return float(np.max(np.abs(opt[mask] - ref[mask]) / ref[mask]))

    return LagrangeEquilibria(
        epsilon_over_kT=x,
        N=float(N),
        n=n,
        i_values=i_values,
        bose_counts=bose_counts,
        maxwell_counts=maxwell_counts,
        balls_in_bins_counts=balls_in_bins,
        bose_maximizer=bose_opt,
        assoc_maximizer=assoc_opt,
        bose_max_rel_err=rel_err(bose_opt, bose_counts),
        assoc_max_rel_err=rel_err(assoc_opt, balls_in_bins),
    )


# ---------------------------------------------------------------------------
# exclusion-principle variant
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FermiReport:
    """Enumeration results with occupancies capped at one quantum."""

    N: int
    n: int
    sum_collocations: int
    expected_collocations: int

    @property
    def ok(self) -> bool:
        return self.sum_collocations == self.expected_collocations


def fermi_variant(N: int, n: int) -> FermiReport:
    """Cap occupancies at 1: the collocation sum collapses to C(N, n)."""
    if n > N:
        raise ValueError("exclusion violated: more quanta than receptacles")
    sum_a = sum(count_collocations(m) for m in enumerate_distribution_modes(N, n, p_max=1))
    return FermiReport(
        N=N, n=n, sum_collocations=sum_a, expected_collocations=math.comb(N, n)
    )


def fermi_occupation_maximizer(
    N: int, levels: Sequence[int], total_quanta: float
) -> np.ndarray:
    """Most probable capped occupations n_j over energy levels j.

    Maximizes sum_j log C(N, n_j) under the energy constraint alone (no
    particle-number constraint), whose stationary point is the zero-chemical-
    potential form n_j/N = 1/(e^(beta j) + 1).  Returns the occupations n_j.
    """
    import cvxpy as cp

    j = np.asarray(levels, dtype=float)
    # Stirling form of -sum log C(N, n_j), dropping the constant N log N terms
    nj = cp.Variable(j.size, pos=True)
    objective = cp.Minimize(cp.sum(-cp.entr(nj) - cp.entr(N - nj)))
    problem = cp.Problem(objective, [j @ nj == total_quanta])
    problem.solve(solver="CLARABEL", **_SOLVER_TOLS)
    if problem.status != "optimal":
        raise RuntimeError(f"capped maximization did not converge: {problem.status}")
    return np.asarray(nj.value)


# ---------------------------------------------------------------------------
# asymptotics
# ---------------------------------------------------------------------------

def stirling_entropy_check(N: int, P: int) -> float:
    """Relative error of the per-receptacle entropy against its asymptotic form.

    Compares log(planck_W(N, P))/N (exact count, big-integer log) with
    (1+r)log(1+r) - r log(r) at r = P/N.  The error vanishes as N, P grow at
    fixed ratio.
    """
    if N < 1 or P < 1:
        raise ValueError("need N, P >= 1")
    if N + P <= 2_000_000:
        exact = math.log(planck_W(N, P)) / N
    else:
        exact = (
            gammaln(N + P) - gammaln(N) - gammaln(P + 1)
        ) / N
    r = P / N
    closed = (1.0 + r) * math.log1p(r) - r * math.log(r)
    return abs(exact - closed) / closed
