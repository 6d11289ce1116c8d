"""Thermal qubits and thermodynamic bookkeeping.

Energy convention: each qubit has Hamiltonian diag(1, 0) in the
{|0>, |1>} basis, i.e. |0> is the excited level with energy 1 and |1>
is the ground level. A thermal qubit is diag(lam, 1 - lam) with
lam <= 1/2 the excited-level population, so its mean energy equals lam.
Boltzmann constant k = 1, entropies in nats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qlinalg import assert_hermitian, num_qubits, partial_trace, von_neumann_entropy

H_QUBIT = np.diag([1.0, 0.0]).astype(complex)


@dataclass(frozen=True)
class ThermalSpec:
    """One qubit's thermal description; lam, beta, temperature kept consistent."""

    lam: float
    beta: float
    temperature: float

    def __post_init__(self):
        if not 0.0 <= self.lam <= 0.5:
            raise ValueError(f"lambda {self.lam} outside [0, 1/2]")


def spec_from_lambda(lam: float) -> ThermalSpec:
    """Thermal spec from the excited-level population, via beta = ln((1-lam)/lam)."""
    if not 0.0 <= lam <= 0.5:
        raise ValueError(f"lambda {lam} outside [0, 1/2]")
    if lam == 0.0:
        return ThermalSpec(0.0, math.inf, 0.0)
    beta = math.log((1.0 - lam) / lam)
    temperature = math.inf if beta == 0.0 else 1.0 / beta
    return ThermalSpec(lam, beta, temperature)


def spec_from_beta(beta: float) -> ThermalSpec:
    if beta < 0:
        raise ValueError(f"negative inverse temperature {beta}")
    if math.isinf(beta):
        return ThermalSpec(0.0, math.inf, 0.0)
    lam = math.exp(-beta) / (1.0 + math.exp(-beta))
    temperature = math.inf if beta == 0.0 else 1.0 / beta
    return ThermalSpec(lam, beta, temperature)


def thermal_qubit(spec: ThermalSpec | float) -> np.ndarray:
    """diag(lam, 1 - lam) for a thermal spec or bare lambda."""
    lam = spec.lam if isinstance(spec, ThermalSpec) else float(spec)
    if not 0.0 <= lam <= 0.5:
        raise ValueError(f"lambda {lam} outside [0, 1/2]")
    return np.diag([lam, 1.0 - lam]).astype(complex)


def site_hamiltonian(site: int, n: int) -> np.ndarray:
    """diag(1, 0) on one site, identity elsewhere."""
    from .qlinalg import tensor, IDENTITY_2

    return tensor(*[H_QUBIT if i == site else IDENTITY_2 for i in range(n)])


def total_hamiltonian(n: int) -> np.ndarray:
    return sum(site_hamiltonian(i, n) for i in range(n))


def mean_energy(rho: np.ndarray, h: np.ndarray) -> float:
    """Tr[H rho], asserting a negligible imaginary residue."""
    if rho.shape != h.shape:
        raise ValueError(f"dimension mismatch {rho.shape} vs {h.shape}")
    val = complex(np.trace(h @ rho))
    if abs(val.imag) > 1e-10:
        raise ValueError(f"energy has imaginary residue {val.imag:.3e}")
    return val.real


def mutual_information(rho: np.ndarray, cut) -> float:
    """S_A + S_B - S_AB across a bipartition (two disjoint qubit index groups)."""
    n = num_qubits(rho.shape[0])
    group_a, group_b = [sorted(set(g)) for g in cut]
    if sorted(group_a + group_b) != list(range(n)):
        raise ValueError(f"partition {cut} does not cover qubits 0..{n - 1} exactly once")
    s_a = von_neumann_entropy(partial_trace(rho, group_a, n))
    s_b = von_neumann_entropy(partial_trace(rho, group_b, n))
    s_ab = von_neumann_entropy(rho)
    return max(0.0, s_a + s_b - s_ab)


def multipartite_mutual_information(rho: np.ndarray, groups) -> float:
    """Total correlations sum_g S_g - S_total for a partition into groups."""
    n = num_qubits(rho.shape[0])
    flat = sorted(i for g in groups for i in g)
    if flat != list(range(n)):
        raise ValueError(f"groups {groups} do not partition qubits 0..{n - 1}")
    s_groups = sum(von_neumann_entropy(partial_trace(rho, g, n)) for g in groups)
    return max(0.0, s_groups - von_neumann_entropy(rho))


def thermal_state(h: np.ndarray, beta: float) -> np.ndarray:
    """exp(-beta H) / Z for a Hermitian Hamiltonian."""
    assert_hermitian(h)
    w, v = np.linalg.eigh(h)
    ew = np.exp(-beta * (w - w.min()))  # shift cancels in the normalization
    ew /= ew.sum()
    return (v * ew) @ v.conj().T


def free_energy_gap(
    rho_initial_thermal: np.ndarray,
    rho_final: np.ndarray,
    h: np.ndarray,
    beta: float,
) -> float:
    """beta * dU - dS for a transformation out of a thermal state; always >= 0."""
    sigma = thermal_state(h, beta)
    dev = float(np.max(np.abs(rho_initial_thermal - sigma)))
    if dev > 1e-9:
        raise ValueError(f"initial state is not thermal for (H, beta): deviation {dev:.3e}")
    du = mean_energy(rho_final, h) - mean_energy(rho_initial_thermal, h)
    ds = von_neumann_entropy(rho_final) - von_neumann_entropy(rho_initial_thermal)
    return beta * du - ds


@dataclass(frozen=True)
class HeatRecord:
    """Heats and entropy changes per cut group, plus the mutual-information change."""

    heats: tuple  # Q_g per group, energy quanta
    entropy_changes: tuple  # dS_g per group, nats
    delta_mutual_info: float  # change in total correlations across the cut, nats
    cut: tuple  # the qubit index groups


def clausius_residual(record: HeatRecord, *betas: float) -> float:
    """sum_g beta_g Q_g - dI; >= 0 when every group starts thermal at its beta."""
    if len(betas) != len(record.heats):
        raise ValueError(f"{len(betas)} betas for {len(record.heats)} cut groups")
    total = 0.0
    for q, beta in zip(record.heats, betas):
        if math.isinf(beta):
            if q < -1e-12:
                return -math.inf  # a T=0 group lost heat: bound maximally violated
            total += 0.0 if abs(q) <= 1e-12 else math.inf
        else:
            total += beta * q
    return total - record.delta_mutual_info


def extractable_work(rho: np.ndarray, temperature: float) -> float:
    """kT (n ln 2 - S[rho]) for an n-qubit state against a reservoir at T."""
    if temperature < 0:
        raise ValueError(f"negative temperature {temperature}")
    n = num_qubits(rho.shape[0])
    return temperature * (n * math.log(2.0) - von_neumann_entropy(rho))
