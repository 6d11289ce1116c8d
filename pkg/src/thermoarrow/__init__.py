"""Simulations of heat flow between qubits with thermal marginals.

Dense density-matrix tooling for small systems, thermal bookkeeping
(heat, entropy, mutual information), state families with prescribed
thermal marginals, energy-conserving dynamics, entanglement witnessing
by heat reversal, and constrained random walks in marginal space.
"""

__version__ = "0.1.0"

from . import dynamics, qlinalg, states, thermo, walk, witness  # noqa: F401
