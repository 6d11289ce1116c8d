"""Stochastic heat-exchange walks on the constant-energy marginal slice.

Each move transfers a small amount of energy between two subsystems,
staying on the constant-energy slice of the marginal polytope. A
constrained walk additionally enforces the multipartite heat-flow arrow
sum_j Q_j / T_j >= 0 on every move; an unconstrained walk accepts every
in-polytope move, modelling a globally entangled system free to roam the
whole configuration space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import polytope_contains

REGION_TIE_TOL = 1e-12

# Region labels by ascending-temperature ordering of the subsystems (a, b, c).
# Region I is the T_a < T_b < T_c corner; the rest follow the hexagonal
# arrangement around the equilibrium point, adjacent regions differing by a
# single transposition.
_REGION_BY_ORDER = {
    (0, 1, 2): "I",  # T_a < T_b < T_c
    (0, 2, 1): "II",  # T_a < T_c < T_b
    (2, 0, 1): "III",  # T_c < T_a < T_b
    (2, 1, 0): "IV",  # T_c < T_b < T_a
    (1, 2, 0): "V",  # T_b < T_c < T_a
    (1, 0, 2): "VI",  # T_b < T_a < T_c
}


def region_of(lambdas) -> str:
    """Temperature-ordering region of a 3-site marginal vector.

    Temperature is monotone in the excited population, so orderings are read
    off the lambdas directly. Ties within tolerance give "boundary"; all
    three equal gives "equilibrium".
    """
    lam = np.asarray(lambdas, dtype=float)
    if lam.size != 3:
        raise ValueError("region labels are defined for 3 subsystems")
    ok, violations = polytope_contains(lam)
    if not ok:
        raise ValueError("; ".join(violations))
    ties = [
        abs(lam[i] - lam[j]) <= REGION_TIE_TOL
        for i, j in ((0, 1), (0, 2), (1, 2))
    ]
    if all(ties):
        return "equilibrium"
    if any(ties):
        return "boundary"
    return _REGION_BY_ORDER[tuple(np.argsort(lam, kind="stable"))]


@dataclass(frozen=True)
class WalkConfig:
    initial: tuple
    constrained: bool
    step_max: float = 0.005
    num_steps: int = 0
    seed: int = 0
    retry_cap: int = 100

    def __post_init__(self):
        ok, violations = polytope_contains(self.initial)
        if not ok:
            raise ValueError("; ".join(violations))
        if self.step_max <= 0:
            raise ValueError("step_max must be positive")


@dataclass
class WalkTrajectory:
    points: np.ndarray  # (num_steps + 1, n)
    regions: list
    accepted: np.ndarray  # per-step booleans


def propose_step(current: np.ndarray, step_max: float, rng, retry_cap: int = 100):
    """Random in-polytope transfer of energy between two subsystems.

    Picks an ordered site pair and a transfer size, resampling proposals that
    leave the polytope; after retry_cap failures the step degenerates to a
    no-op (only happens at degenerate slice points).
    """
    n = len(current)
    for _ in range(retry_cap):
        i = int(rng.integers(n))
        j = int(rng.integers(n - 1))
        j = j if j < i else j + 1
        delta = float(rng.uniform(0.0, step_max))
        candidate = current.copy()
        candidate[i] += delta
        candidate[j] -= delta
        if polytope_contains(candidate)[0]:
            return candidate
    return current.copy()


def accept_step(current, candidate, constrained: bool) -> bool:
    """Move acceptance: unconditional, or gated by sum_j Q_j / T_j >= 0.

    Inverse temperatures are evaluated at the pre-step configuration. Sites
    at T = 0 (lambda = 0) dominate the sum, so they may only receive heat.
    """
    if not constrained:
        return True
    current = np.asarray(current, dtype=float)
    candidate = np.asarray(candidate, dtype=float)
    heats = candidate - current
    total = 0.0
    for lam, q in zip(current, heats):
        if lam <= REGION_TIE_TOL:
            if q > REGION_TIE_TOL:
                return True  # infinite beta times positive heat dominates
            continue
        total += math.log((1.0 - lam) / lam) * q
    return total >= 0.0


def run_walk(config: WalkConfig) -> WalkTrajectory:
    """Run a heat-exchange walk, deterministic for a fixed seed.

    Each step draws its proposals from a substream keyed by (seed, step), so
    constrained and unconstrained walks with the same seed see identical
    proposal streams and differ only through acceptance.
    """
    current = np.asarray(config.initial, dtype=float)
    points = [current.copy()]
    regions = [region_of(current)]
    accepted = np.zeros(config.num_steps, dtype=bool)
    for step in range(config.num_steps):
        rng = np.random.default_rng(np.random.SeedSequence((config.seed, step)))
        candidate = propose_step(current, config.step_max, rng, config.retry_cap)
        if np.array_equal(candidate, current):  # retry cap hit: rejected no-op
            ok = False
        else:
            ok = accept_step(current, candidate, config.constrained)
        if ok:
            current = candidate
        accepted[step] = ok
        points.append(current.copy())
        regions.append(region_of(current))
    return WalkTrajectory(np.array(points), regions, accepted)


def temperature_spread(lambdas) -> float:
    """max |T_i - T_j| over the subsystems, with T = 0 at lambda = 0."""
    temps = []
    for lam in np.asarray(lambdas, dtype=float):
        if lam <= 0.0:
            temps.append(0.0)
        elif lam >= 0.5:
            temps.append(math.inf)
        else:
            temps.append(1.0 / math.log((1.0 - lam) / lam))
    return float(max(temps) - min(temps))
