"""Entanglement witnessing by heat reversal, and correlation-range classifiers.

A separable bipartite state carries at most ln D of mutual information
(D the smaller subsystem's dimension), which caps how strongly it can
drive heat against the temperature gradient. Observed reverse flow whose
entropic cost exceeds ln D therefore certifies entanglement.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .qlinalg import num_qubits, partial_trace, tensor
from .states import RhoACParams, rho_ac
from .thermo import mutual_information

WITNESS_TOL = 1e-9


@dataclass(frozen=True)
class WitnessVerdict:
    reverse_flow_magnitude: float  # -(beta_a Q_a + beta_b Q_b), nats, >= 0 when reversed
    classical_bound: float  # ln D, nats
    certified_entangled: bool


def witness_from_heat(
    q_a: float, beta_a: float, beta_b: float, dim_small: int
) -> WitnessVerdict:
    """Verdict from an observed pairwise heat flow with Q_b = -Q_a.

    The entropic cost of the flow is -Q_a (beta_a - beta_b); positive values
    mean heat ran cold-to-hot. Certification requires exceeding ln(dim_small)
    by more than the tolerance (conservative near the bound).
    """
    if beta_a == beta_b:
        raise ValueError("equal inverse temperatures: the bound degenerates")
    magnitude = max(0.0, -q_a * (beta_a - beta_b))
    bound = math.log(dim_small)
    return WitnessVerdict(magnitude, bound, magnitude > bound + WITNESS_TOL)


def witness_region_scan(resolution: float):
    """Scan the valid (lambda_a, lambda_c, gamma) region and label witness capability.

    Returns a list of (lambda_a, lambda_c, gamma, mutual_info, capable) rows
    in deterministic lexicographic order. A point is witness-capable when the
    correlations in the constructed state exceed the separable bound ln 2.
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    steps = int(round(0.5 / resolution))
    rows = []
    ln2 = math.log(2.0)
    for ia in range(steps + 1):
        la = min(ia * resolution, 0.5)
        for ic in range(steps + 1):
            lc = min(ic * resolution, 0.5)
            for ig in range(abs(ic - ia), ia + ic + 1):
                g = min(ig * resolution, la + lc)
                params = RhoACParams(la, lc, g)
                mi = mutual_information(rho_ac(params), [(0,), (1,)])
                rows.append((la, lc, g, mi, mi > ln2 + WITNESS_TOL))
    return rows


def is_product_of_thermals(rho: np.ndarray, tolerance: float) -> bool:
    """True when rho equals the tensor product of its single-qubit marginals."""
    n = num_qubits(rho.shape[0])
    margs = [partial_trace(rho, [i], n) for i in range(n)]
    return float(np.max(np.abs(rho - tensor(*margs)))) <= tolerance


def _assert_thermal_marginals(rho: np.ndarray, tolerance: float) -> None:
    n = num_qubits(rho.shape[0])
    for i in range(n):
        m = partial_trace(rho, [i], n)
        off = abs(complex(m[0, 1]))
        if off > tolerance or m[0, 0].real > 0.5 + tolerance:
            raise ValueError(
                f"qubit {i} marginal is not thermal "
                f"(coherence {off:.3e}, excited population {m[0, 0].real:.4f})"
            )


def hierarchy_classify(rho: np.ndarray, tolerance: float = 1e-9) -> int:
    """Largest k for which some k-qubit reduced state is a product of thermals.

    A product-of-thermals marginal on k sites carries no correlations, so the
    k-partite heat-flow arrow holds for any process confined to those sites.
    Subsets are checked exhaustively (systems here are small).
    """
    n = num_qubits(rho.shape[0])
    _assert_thermal_marginals(rho, tolerance)
    for k in range(n, 1, -1):
        for subset in itertools.combinations(range(n), k):
            reduced = partial_trace(rho, list(subset), n)
            if is_product_of_thermals(reduced, tolerance):
                return k
    return 1


@dataclass(frozen=True)
class ArrowProfile:
    ranges: tuple  # arrow range R_a per subsystem, in the supplied geometry's units
    mean_range: float
    hierarchy_class: int


def arrow_range(rho: np.ndarray, positions, tolerance: float = 1e-9) -> ArrowProfile:
    """Largest correlation-free radius around each subsystem.

    R_a is the largest radius r such that the reduced state on all subsystems
    within distance r of a is a product of single-site thermal marginals.
    positions is one coordinate (scalar or vector) per subsystem.
    """
    n = num_qubits(rho.shape[0])
    pos = np.asarray(positions, dtype=float)
    if pos.ndim == 1:
        pos = pos[:, None]
    if pos.shape[0] != n:
        raise ValueError(f"{pos.shape[0]} positions for {n} subsystems")
    _assert_thermal_marginals(rho, tolerance)
    dists = np.linalg.norm(pos[:, None, :] - pos[None, :, :], axis=-1)
    ranges = []
    for a in range(n):
        best = 0.0
        for r in sorted(set(dists[a])):
            region = [j for j in range(n) if dists[a, j] <= r + 1e-12]
            if len(region) == 1 or is_product_of_thermals(
                partial_trace(rho, region, n), tolerance
            ):
                best = r
            else:
                break
        ranges.append(best)
    return ArrowProfile(
        tuple(ranges), float(np.mean(ranges)), hierarchy_classify(rho, tolerance)
    )
