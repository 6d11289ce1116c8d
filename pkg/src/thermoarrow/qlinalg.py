"""Dense complex linear algebra for systems of a few qubits.

Conventions used throughout the package:

- states are plain ``numpy`` arrays (complex128), row-major;
- qubit 0 is the most significant bit of the computational-basis index,
  so ``|q0 q1 ... q_{n-1}>`` has index ``sum(q_i * 2**(n-1-i))``;
- all entropies are in nats.
"""

from __future__ import annotations

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

_PAULIS = {"X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z, "I": IDENTITY_2}


def num_qubits(dim: int) -> int:
    """Number of qubits for a Hilbert-space dimension, rejecting non-powers of 2."""
    n = dim.bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of 2")
    return n


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the standard block layout."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def tensor(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of any number of factors, left factor most significant."""
    out = np.eye(1, dtype=complex)
    for op in ops:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def is_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def assert_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> None:
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")


def assert_density_matrix(rho: np.ndarray, tol_psd: float = PSD_TOL) -> None:
    """Validate Hermiticity, unit trace and positivity of a density matrix."""
    assert_hermitian(rho)
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"trace is {tr}, not 1")
    wmin = float(np.linalg.eigvalsh(rho)[0])
    if wmin < -tol_psd:
        raise ValueError(f"matrix has negative eigenvalue {wmin:.3e}")


def embed_pauli(axis: str, site: int, n: int) -> np.ndarray:
    """Pauli operator on one site of an n-qubit register, identity elsewhere."""
    if axis not in ("X", "Y", "Z"):
        raise ValueError(f"unknown Pauli axis {axis!r}")
    if not 0 <= site < n:
        raise ValueError(f"site {site} out of range for {n} qubits")
    return tensor(*[_PAULIS[axis] if i == site else IDENTITY_2 for i in range(n)])


def partial_trace(rho: np.ndarray, keep, n: int | None = None) -> np.ndarray:
    """Reduced density matrix on the kept qubits (ascending original order)."""
    rho = np.asarray(rho, dtype=complex)
    if n is None:
        n = num_qubits(rho.shape[0])
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("keep set must be nonempty")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep set {keep} out of range for {n} qubits")
    traced = [q for q in range(n) if q not in keep]
    t = rho.reshape([2] * (2 * n))
    for q in sorted(traced, reverse=True):
        t = np.trace(t, axis1=q, axis2=q + t.ndim // 2)
    d = 2 ** len(keep)
    return t.reshape(d, d)


def permute_qubits(rho: np.ndarray, perm) -> np.ndarray:
    """Reorder qubits so that new qubit i is old qubit perm[i]."""
    n = num_qubits(rho.shape[0])
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
    t = rho.reshape([2] * (2 * n))
    t = np.transpose(t, perm + [p + n for p in perm])
    return t.reshape(rho.shape)


def hermitian_eigensystem(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and unitary eigenvector matrix of a Hermitian operator."""
    assert_hermitian(h)
    w, v = np.linalg.eigh(h)
    return w, v


def unitary_from_generator(g: np.ndarray, angle: float) -> np.ndarray:
    """exp(-i * angle * g) for Hermitian g, computed spectrally."""
    w, v = hermitian_eigensystem(g)
    return (v * np.exp(-1j * angle * w)) @ v.conj().T


def von_neumann_entropy(rho: np.ndarray) -> float:
    """-Tr[rho ln rho] in nats, with 0 ln 0 = 0 and tiny negatives clamped."""
    w = np.linalg.eigvalsh(rho)
    if float(w[0]) < -1e-8:
        raise ValueError(f"state has eigenvalue {w[0]:.3e}; not a valid density matrix")
    w = np.clip(w, 0.0, None)
    w = w[w > 0]
    return float(-np.sum(w * np.log(w)))
