"""State families with prescribed thermal marginals and the marginal polytope.

The admissible smallest-eigenvalue vectors (lam_1 ... lam_N) of single-qubit
marginals of a global pure state form a polytope: each lam_i lies in
[0, 1/2] and is bounded by the sum of the others. Its intersection with a
constant-energy hyperplane sum(lam) = E is the configuration space the
random-walk experiments move in (a triangle for N = 3).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .qlinalg import partial_trace, permute_qubits, tensor_product
from .thermo import thermal_qubit

BOUNDARY_TOL = 1e-12


def polytope_contains(lambdas, tol: float = BOUNDARY_TOL, margin: float = 0.0):
    """Membership test for the marginal polytope; returns (ok, violated constraints)."""
    lam = np.asarray(lambdas, dtype=float)
    if lam.size < 2:
        raise ValueError("need at least 2 marginals")
    violations = []
    total = float(lam.sum())
    for i, li in enumerate(lam):
        if li < margin - tol:
            violations.append(f"lambda_{i + 1} = {li} < 0")
        if li > 0.5 - margin + tol:
            violations.append(f"lambda_{i + 1} = {li} > 1/2")
        if li - (total - li) > tol - margin:
            violations.append(f"lambda_{i + 1} exceeds sum of the others")
    return (not violations), violations


def sample_energy_slice(n: int, energy: float, rng, max_tries: int = 200_000) -> np.ndarray:
    """Uniform point on the constant-energy slice of the polytope, by rejection.

    rng is a numpy Generator (or a seed accepted by default_rng).
    """
    if not 0.0 <= energy <= n / 2 + BOUNDARY_TOL:
        raise ValueError(f"energy {energy} outside attainable range [0, {n / 2}]")
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    if energy <= BOUNDARY_TOL:
        return np.zeros(n)
    if energy >= n / 2 - BOUNDARY_TOL:
        return np.full(n, 0.5)
    for _ in range(max_tries):
        lam = rng.dirichlet(np.ones(n)) * energy
        ok, _ = polytope_contains(lam)
        if ok:
            return lam
    raise RuntimeError(f"rejection sampling failed for n={n}, E={energy}")


def slice_vertices(n: int, energy: float) -> np.ndarray:
    """Vertices of the constant-energy slice of the marginal polytope.

    On the hyperplane sum(lam) = E the polytope constraints reduce to
    0 <= lam_i <= min(1/2, E/2), so the slice is a box-simplex intersection;
    vertices are found by activating n - 1 of those bounds.
    """
    if not 0.0 <= energy <= n / 2 + BOUNDARY_TOL:
        raise ValueError(f"energy {energy} outside attainable range [0, {n / 2}]")
    upper = min(0.5, energy / 2.0)
    verts = []
    for actives in itertools.combinations(range(n), n - 1):
        free = next(i for i in range(n) if i not in actives)
        for bounds in itertools.product((0.0, upper), repeat=n - 1):
            lam = np.empty(n)
            for i, b in zip(actives, bounds):
                lam[i] = b
            lam[free] = energy - sum(bounds)
            if -BOUNDARY_TOL <= lam[free] <= upper + BOUNDARY_TOL:
                ok, _ = polytope_contains(np.clip(lam, 0.0, 0.5))
                if ok:
                    verts.append(np.clip(lam, 0.0, upper))
    if not verts:
        return np.empty((0, n))
    unique = []
    for v in verts:
        if not any(np.max(np.abs(v - u)) <= 1e-9 for u in unique):
            unique.append(v)
    return np.array(sorted(unique, key=tuple))


def polytope_vertices(n: int) -> np.ndarray:
    """Vertices of the full marginal polytope (candidate-enumeration over bounds)."""
    verts = []
    for corner in itertools.product((0.0, 0.5), repeat=n):
        ok, _ = polytope_contains(corner)
        if ok:
            verts.append(np.array(corner))
    return np.array(sorted(verts, key=tuple))


@dataclass(frozen=True)
class WStateParams:
    """Amplitudes x_i of the single-excitation family at total energy E."""

    xs: tuple
    energy: float

    def __post_init__(self):
        n = len(self.xs)
        if n < 2:
            raise ValueError("need at least 2 qubits")
        if not 0.0 <= self.energy <= n - 1 + 1e-12:
            raise ValueError(f"energy {self.energy} outside [0, {n - 1}]")
        ssq = sum(x * x for x in self.xs)
        if abs(ssq - self.energy / (n - 1)) > 1e-12:
            raise ValueError(
                f"sum of squares {ssq} != E/(N-1) = {self.energy / (n - 1)}"
            )

    @property
    def marginal_lambdas(self) -> np.ndarray:
        """Smallest marginal eigenvalues lam_i = sum_{j != i} x_j^2."""
        sq = np.array([x * x for x in self.xs])
        return sq.sum() - sq


def w_state(params: WStateParams) -> np.ndarray:
    """Pure state sum_i x_i X_i |0...0> + sqrt(1 - E/(N-1)) |1...1>.

    With |0> the excited level, flipping qubit i to |1> de-excites it, so the
    marginal of qubit i carries excited population sum_{j != i} x_j^2.
    """
    n = len(params.xs)
    psi = np.zeros(2**n, dtype=complex)
    for i, x in enumerate(params.xs):
        psi[1 << (n - 1 - i)] = x
    psi[2**n - 1] = math.sqrt(max(0.0, 1.0 - params.energy / (n - 1)))
    return psi


def random_w_state_params(n: int, rng, lam_max: float = 0.5) -> WStateParams:
    """Random direction on the x-hypersphere at a random feasible energy."""
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    while True:
        x = rng.normal(size=n)
        x /= np.linalg.norm(x)
        energy = rng.uniform(0.0, n - 1)
        x = x * math.sqrt(energy / (n - 1))
        sq = x * x
        lams = sq.sum() - sq
        if np.all(lams <= lam_max + 1e-12):
            ssq = float(np.sum(x * x))
            # absorb rounding into the energy so the invariant holds exactly
            return WStateParams(tuple(float(v) for v in x), ssq * (n - 1))


def schmidt_pair_state(lam: float, phase: float = 0.0) -> np.ndarray:
    """Bipartite pure state sqrt(lam)|00> + e^{i phase} sqrt(1-lam)|11>.

    For equal single-qubit Hamiltonians this family exhausts the two-qubit
    pure states whose marginals are both thermal (isospectral marginals force
    equal excited populations lam <= 1/2).
    """
    if not 0.0 <= lam <= 0.5:
        raise ValueError(f"lambda {lam} outside [0, 1/2]")
    psi = np.zeros(4, dtype=complex)
    psi[0] = math.sqrt(lam)
    psi[3] = np.exp(1j * phase) * math.sqrt(1.0 - lam)
    return psi


def random_pure_state(n: int, rng) -> np.ndarray:
    """Haar-random pure state on n qubits."""
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    psi = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return psi / np.linalg.norm(psi)


@dataclass(frozen=True)
class RhoACParams:
    """Parameters of the correlated two-qubit state with thermal marginals."""

    lambda_a: float
    lambda_c: float
    gamma: float
    tol: float = field(default=1e-12, compare=False)

    def __post_init__(self):
        la, lc, g, tol = self.lambda_a, self.lambda_c, self.gamma, self.tol
        errors = []
        if not -tol <= la <= 0.5 + tol:
            errors.append(f"lambda_a = {la} outside [0, 1/2]")
        if not -tol <= lc <= 0.5 + tol:
            errors.append(f"lambda_c = {lc} outside [0, 1/2]")
        if g < abs(lc - la) - tol:
            errors.append(f"gamma = {g} < |lambda_c - lambda_a| = {abs(lc - la)}")
        if g > la + lc + tol:
            errors.append(f"gamma = {g} > lambda_a + lambda_c = {la + lc}")
        if g > 2.0 - la - lc + tol:
            errors.append(f"gamma = {g} > 2 - lambda_a - lambda_c")
        if errors:
            raise ValueError("; ".join(errors))


def rho_ac(params: RhoACParams) -> np.ndarray:
    """Rank-<=2 correlated two-qubit state whose marginals are thermal.

    Basis {|00>, |01>, |10>, |11>} with the first qubit most significant.
    The parameter inequalities are checked on construction and the result is
    re-checked for positivity, since the square roots silently go complex
    outside the valid region.
    """
    la, lc, g = params.lambda_a, params.lambda_c, params.gamma
    off_exc = math.sqrt(max(0.0, g * g - (lc - la) ** 2))
    p00 = la + lc - g
    p11 = 2.0 - la - lc - g
    off_gnd = math.sqrt(max(0.0, p00 * p11))
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = max(0.0, p00)
    rho[1, 1] = max(0.0, g - lc + la)
    rho[2, 2] = max(0.0, g + lc - la)
    rho[3, 3] = max(0.0, p11)
    rho[1, 2] = rho[2, 1] = off_exc
    rho[0, 3] = rho[3, 0] = off_gnd
    rho *= 0.5
    rho /= np.trace(rho).real
    wmin = float(np.linalg.eigvalsh(rho)[0])
    if wmin < -1e-10:
        raise ValueError(f"constructed state is not PSD (min eigenvalue {wmin:.3e})")
    return rho


def rho_abc(params: RhoACParams, lambda_b: float) -> np.ndarray:
    """Three-qubit state rho_AC (x) rho_B reordered to qubit order (A, B, C)."""
    if not 0.0 <= lambda_b <= 0.5:
        raise ValueError(f"lambda_b {lambda_b} outside [0, 1/2]")
    acb = tensor_product(rho_ac(params), thermal_qubit(lambda_b))
    return permute_qubits(acb, [0, 2, 1])  # (A, C, B) -> (A, B, C)


def marginal_lambdas(rho: np.ndarray, n: int | None = None) -> np.ndarray:
    """Excited-level population of each single-qubit marginal."""
    from .qlinalg import num_qubits

    if n is None:
        n = num_qubits(rho.shape[0])
    return np.array(
        [float(partial_trace(rho, [i], n)[0, 0].real) for i in range(n)]
    )
