"""Aggregated invariant suites behind the `check` CLI command.

Each suite samples random states and evolutions and records the worst
residual of one of the package's inequalities. All residuals are defined
so that validity means residual >= -tolerance.
"""

from __future__ import annotations

import numpy as np

from .dynamics import (
    energy_drift,
    heat_flows,
    random_energy_conserving_unitary,
    sweep_grid,
)
from .qlinalg import partial_trace, von_neumann_entropy
from .states import (
    RhoACParams,
    random_pure_state,
    random_w_state_params,
    rho_abc,
    schmidt_pair_state,
    w_state,
)
from .thermo import (
    H_QUBIT,
    clausius_residual,
    free_energy_gap,
    spec_from_lambda,
    thermal_qubit,
)
from .qlinalg import tensor

RESIDUAL_TOL = 1e-9
ENERGY_TOL = 1e-10


def _random_density(dim: int, rng) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def _maybe_corrupt(rho, name, corrupt):
    return rho if corrupt is None else corrupt(rho, name)


def _result(id_, statement, trials, residuals, tol):
    worst = float(min(residuals)) if residuals else 0.0
    violations = int(sum(r < -tol for r in residuals))
    return {
        "id": id_,
        "statement": statement,
        "trials": trials,
        "max_residual": worst,
        "violations": violations,
        "pass": violations == 0,
    }


def check_free_energy(rng, trials: int, corrupt=None) -> dict:
    """Free-energy inequality: beta dU - dS >= 0 out of a thermal state."""
    residuals = []
    per_spec = max(1, trials // 10)
    for _ in range(10):
        lam = float(rng.uniform(0.02, 0.5))
        spec = spec_from_lambda(lam)
        initial = _maybe_corrupt(thermal_qubit(spec), "free-energy", corrupt)
        for _ in range(per_spec):
            final = _random_density(2, rng)
            residuals.append(free_energy_gap(initial, final, H_QUBIT, spec.beta))
    return _result("free-energy", "free-energy inequality", len(residuals), residuals, RESIDUAL_TOL)


def _clausius_case(initial, n, rng, corrupt, name):
    initial = _maybe_corrupt(initial, name, corrupt)
    betas = [
        spec_from_lambda(float(partial_trace(initial, [i], n)[0, 0].real)).beta
        for i in range(n)
    ]
    u = random_energy_conserving_unitary(n, rng)
    final = u @ initial @ u.conj().T
    record = heat_flows(initial, final)
    return clausius_residual(record, *betas)


def check_clausius(rng, trials: int, corrupt=None) -> dict:
    """Correlation-corrected arrow: sum_j beta_j Q_j >= dI for thermal-marginal states."""
    residuals = []
    for k in range(trials):
        kind = k % 3
        if kind == 0:  # uncorrelated product of thermal qubits
            lams = rng.uniform(0.02, 0.48, size=2)
            initial = tensor(thermal_qubit(lams[0]), thermal_qubit(lams[1]))
            residuals.append(_clausius_case(initial, 2, rng, corrupt, "clausius"))
        elif kind == 1:  # entangled pure state with thermal marginals
            params = random_w_state_params(3, rng, lam_max=0.48)
            psi = w_state(params)
            residuals.append(_clausius_case(np.outer(psi, psi.conj()), 3, rng, corrupt, "clausius"))
        else:  # correlated mixed three-qubit state
            la, lc = sorted(rng.uniform(0.05, 0.45, size=2))
            g = float(rng.uniform(lc - la, la + lc))
            lb = float(rng.uniform(0.05, 0.45))
            initial = rho_abc(RhoACParams(la, lc, g), lb)
            residuals.append(_clausius_case(initial, 3, rng, corrupt, "clausius"))
    return _result("clausius", "correlation-corrected arrow", trials, residuals, RESIDUAL_TOL)


def check_pairwise_arrow(rng, trials: int, corrupt=None) -> dict:
    """Pairwise arrow: Q_A (1/T_A - 1/T_B) >= 0 for uncorrelated thermal qubits."""
    residuals = []
    for _ in range(trials):
        lams = rng.uniform(0.02, 0.48, size=2)
        betas = [spec_from_lambda(float(l)).beta for l in lams]
        initial = _maybe_corrupt(
            tensor(thermal_qubit(lams[0]), thermal_qubit(lams[1])), "pairwise-arrow", corrupt
        )
        u = random_energy_conserving_unitary(2, rng)
        final = u @ initial @ u.conj().T
        record = heat_flows(initial, final)
        residuals.append(record.heats[0] * (betas[0] - betas[1]))
    return _result("pairwise-arrow", "pairwise thermodynamic arrow", trials, residuals, RESIDUAL_TOL)


def check_multipartite_arrow(rng, trials: int, corrupt=None) -> dict:
    """Multipartite arrow: sum_j Q_j / T_j >= 0 for uncorrelated thermal qubits."""
    residuals = []
    for _ in range(trials):
        lams = rng.uniform(0.02, 0.48, size=3)
        betas = [spec_from_lambda(float(l)).beta for l in lams]
        initial = _maybe_corrupt(
            tensor(*[thermal_qubit(l) for l in lams]), "multipartite-arrow", corrupt
        )
        u = random_energy_conserving_unitary(3, rng)
        final = u @ initial @ u.conj().T
        record = heat_flows(initial, final)
        residuals.append(sum(b * q for b, q in zip(betas, record.heats)))
    return _result("multipartite-arrow", "multipartite thermodynamic arrow", trials, residuals, RESIDUAL_TOL)


def check_isospectral(rng, trials: int, corrupt=None) -> dict:
    """Bipartite pure states keep isospectral marginals under unitaries."""
    residuals = []
    for _ in range(trials):
        psi = random_pure_state(2, rng)
        initial = _maybe_corrupt(np.outer(psi, psi.conj()), "isospectral", corrupt)
        u = random_energy_conserving_unitary(2, rng)
        final = u @ initial @ u.conj().T
        wa = np.linalg.eigvalsh(partial_trace(final, [0], 2))
        wb = np.linalg.eigvalsh(partial_trace(final, [1], 2))
        residuals.append(-float(np.max(np.abs(wa - wb))))
    return _result("isospectral", "isospectral marginals of pure states", trials, residuals, RESIDUAL_TOL)


def check_entropy_decrease(rng, trials: int, corrupt=None) -> dict:
    """Local entropies of a bipartite pure thermal-marginal state never increase."""
    residuals = []
    for _ in range(trials):
        lam = float(rng.uniform(0.02, 0.5))
        psi = schmidt_pair_state(lam, float(rng.uniform(0.0, 2 * np.pi)))
        initial = _maybe_corrupt(np.outer(psi, psi.conj()), "entropy", corrupt)
        u = random_energy_conserving_unitary(2, rng)
        final = u @ initial @ u.conj().T
        ds = von_neumann_entropy(partial_trace(final, [0], 2)) - von_neumann_entropy(
            partial_trace(initial, [0], 2)
        )
        residuals.append(-ds)
    return _result("entropy", "local entropy never increases", trials, residuals, RESIDUAL_TOL)


def check_energy_conservation(rng, trials: int, corrupt=None) -> dict:
    """Interaction sweeps preserve the total non-interacting energy per cell."""
    la, lc, g, lb = 0.15, 0.3, 0.4, 0.2
    initial = _maybe_corrupt(rho_abc(RhoACParams(la, lc, g), lb), "energy", corrupt)
    ts = np.linspace(0.0, 2 * np.pi, max(2, min(trials, 11)))
    residuals = []
    from .dynamics import evolve_ts

    for t in ts:
        for s in ts:
            residuals.append(-energy_drift(initial, evolve_ts(initial, t, s)))
    return _result("energy", "energy conservation", len(residuals), residuals, ENERGY_TOL)


ALL_CHECKS = (
    check_free_energy,
    check_clausius,
    check_pairwise_arrow,
    check_multipartite_arrow,
    check_isospectral,
    check_entropy_decrease,
    check_energy_conservation,
)


def run_checks(seed: int = 0, trials: int = 100, corrupt=None) -> dict:
    """Run every invariant suite and aggregate a JSON-ready report."""
    report = {"seed": seed, "trials": trials, "checks": {}}
    for idx, fn in enumerate(ALL_CHECKS):
        rng = np.random.default_rng(np.random.SeedSequence((seed, idx)))
        result = fn(rng, trials, corrupt)
        report["checks"][result["id"]] = result
    report["all_pass"] = all(c["pass"] for c in report["checks"].values())
    return report
