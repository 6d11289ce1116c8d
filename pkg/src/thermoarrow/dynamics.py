"""Energy-conserving interactions, evolution and heat-flow parameter sweeps.

The pairwise exchange interaction between sites a and b is
V_ab = (X_a Y_b - Y_a X_b) / 2, which hops a single excitation between the
two sites and commutes with H_a + H_b, so it moves energy without creating
or destroying it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .qlinalg import (
    embed_pauli,
    num_qubits,
    partial_trace,
    unitary_from_generator,
    von_neumann_entropy,
)
from .thermo import HeatRecord, multipartite_mutual_information, total_hamiltonian


def interaction_generator(site_a: int, site_b: int, n: int) -> np.ndarray:
    """(X_a Y_b - Y_a X_b) / 2 embedded in an n-qubit register."""
    if site_a == site_b:
        raise ValueError("interaction sites must differ")
    xa, ya = embed_pauli("X", site_a, n), embed_pauli("Y", site_a, n)
    xb, yb = embed_pauli("X", site_b, n), embed_pauli("Y", site_b, n)
    return 0.5 * (xa @ yb - ya @ xb)


def evolve_two_site(rho: np.ndarray, site_a: int, site_b: int, theta: float) -> np.ndarray:
    """Conjugate rho by exp(-i theta V_ab)."""
    n = num_qubits(rho.shape[0])
    u = unitary_from_generator(interaction_generator(site_a, site_b, n), theta)
    return u @ rho @ u.conj().T


def evolve_ts(rho_abc: np.ndarray, t: float, s: float) -> np.ndarray:
    """Conjugate a 3-qubit state by exp(-i (t V_AB + s V_BC)).

    Single exponential of the combined generator; the two interactions do
    not commute, so this differs from applying them sequentially.
    """
    if rho_abc.shape != (8, 8):
        raise ValueError(f"expected an 8x8 state, got {rho_abc.shape}")
    gen = t * interaction_generator(0, 1, 3) + s * interaction_generator(1, 2, 3)
    u = unitary_from_generator(gen, 1.0)
    return u @ rho_abc @ u.conj().T


def heat_flows(initial: np.ndarray, final: np.ndarray, cut=None) -> HeatRecord:
    """Per-group heat and entropy changes, with site Hamiltonians diag(1, 0).

    cut is a partition of the qubits into groups (default: one group per
    qubit). Heat into a group is the change of its local mean energy; the
    mutual-information change is the change of total correlations across
    the cut.
    """
    if initial.shape != final.shape:
        raise ValueError(f"dimension mismatch {initial.shape} vs {final.shape}")
    n = num_qubits(initial.shape[0])
    if cut is None:
        cut = tuple((i,) for i in range(n))
    cut = tuple(tuple(sorted(g)) for g in cut)
    heats, dss = [], []
    for group in cut:
        ri = partial_trace(initial, group, n)
        rf = partial_trace(final, group, n)
        # local energy = sum of excited-level populations of the group's sites
        m = len(group)
        ei = sum(float(partial_trace(ri, [k], m)[0, 0].real) for k in range(m))
        ef = sum(float(partial_trace(rf, [k], m)[0, 0].real) for k in range(m))
        heats.append(ef - ei)
        dss.append(von_neumann_entropy(rf) - von_neumann_entropy(ri))
    di = multipartite_mutual_information(final, cut) - multipartite_mutual_information(
        initial, cut
    )
    return HeatRecord(tuple(heats), tuple(dss), di, cut)


@dataclass
class HeatGrid:
    """Heat into each subsystem over a Cartesian (t, s) interaction grid."""

    t_values: np.ndarray
    s_values: np.ndarray
    q_a: np.ndarray  # indexed [i_t, j_s]
    q_b: np.ndarray
    q_c: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        shape = (len(self.t_values), len(self.s_values))
        for q in (self.q_a, self.q_b, self.q_c):
            if q.shape != shape:
                raise ValueError(f"grid shape {q.shape} != {shape}")


def _site_energies(rho: np.ndarray) -> np.ndarray:
    n = num_qubits(rho.shape[0])
    return np.array([float(partial_trace(rho, [i], n)[0, 0].real) for i in range(n)])


def sweep_grid(
    initial: np.ndarray,
    t_values,
    s_values,
    workers: int = 1,
    metadata: dict | None = None,
) -> HeatGrid:
    """Evaluate heat flows Q_A, Q_B, Q_C over the (t, s) grid.

    Cells are pure functions of (initial, t, s); with workers > 1 they are
    evaluated on a thread pool but always assembled in t-major order, so the
    result is identical at any parallelism level.
    """
    t_values = np.atleast_1d(np.asarray(t_values, dtype=float))
    s_values = np.atleast_1d(np.asarray(s_values, dtype=float))
    if t_values.size == 0 or s_values.size == 0:
        raise ValueError("empty parameter ranges")
    e0 = _site_energies(initial)
    cells = [(t, s) for t in t_values for s in s_values]

    def cell(ts):
        t, s = ts
        return _site_energies(evolve_ts(initial, t, s)) - e0

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(cell, cells))
    else:
        flat = [cell(ts) for ts in cells]
    q = np.array(flat).reshape(len(t_values), len(s_values), 3)
    return HeatGrid(
        t_values, s_values, q[:, :, 0], q[:, :, 1], q[:, :, 2], metadata or {}
    )


def delta_q_grid(entangled: HeatGrid, product: HeatGrid):
    """Heat difference Q_A(product) - Q_A(entangled) and the reversal mask.

    The mask marks cells where A loses heat while both B and C gain it,
    which a product of thermal states can never do.
    """
    if not (
        np.array_equal(entangled.t_values, product.t_values)
        and np.array_equal(entangled.s_values, product.s_values)
    ):
        raise ValueError("grids were computed over different (t, s) ranges")
    delta = product.q_a - entangled.q_a
    mask = (entangled.q_a < 0) & (entangled.q_b > 0) & (entangled.q_c > 0)
    return delta, mask


def random_energy_conserving_unitary(n: int, rng) -> np.ndarray:
    """Haar-like random unitary commuting with the total Hamiltonian.

    Block-random on each total-excitation eigenspace (basis states grouped
    by their number of excited qubits, i.e. zero bits of the index).
    """
    if n < 1:
        raise ValueError("need at least one qubit")
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    dim = 2**n
    blocks: dict[int, list[int]] = {}
    for idx in range(dim):
        exc = n - bin(idx).count("1")
        blocks.setdefault(exc, []).append(idx)
    u = np.zeros((dim, dim), dtype=complex)
    for idxs in blocks.values():
        d = len(idxs)
        g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        q, r = np.linalg.qr(g)
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        u[np.ix_(idxs, idxs)] = q
    return u


def energy_drift(initial: np.ndarray, final: np.ndarray) -> float:
    """|Tr[H_tot final] - Tr[H_tot initial]| for the non-interacting Hamiltonian."""
    n = num_qubits(initial.shape[0])
    h = total_hamiltonian(n)
    return abs(float(np.trace(h @ (final - initial)).real))
