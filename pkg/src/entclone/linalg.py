"""Dense complex linear algebra for small composite quantum systems.

Two-qubit operators use the computational basis ordered |00>, |01>, |10>, |11>
with the first qubit as the most significant index.  All comparisons use the
maximum absolute entry difference.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import BadDimensionError, NoConvergenceError, NotHermitianError, NotPsdError

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

kron = np.kron


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def hermiticity_defect(m: np.ndarray) -> float:
    """Maximum absolute entry of m - m^dagger."""
    return float(np.abs(m - dagger(m)).max())


class SpectralDecomposition(NamedTuple):
    """Eigensystem of a Hermitian matrix, eigenvalues descending.

    ``eigenvectors`` is unitary; column i pairs with ``eigenvalues[i]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise BadDimensionError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix has non-finite entries")
    return m


def hermitian_eig(m: np.ndarray) -> SpectralDecomposition:
    """Diagonalize a Hermitian matrix.

    Raises NotHermitianError if m deviates from m^dagger by more than
    HERMITIAN_TOL in any entry.
    """
    m = _as_square(m)
    defect = hermiticity_defect(m)
    if defect > HERMITIAN_TOL:
        raise NotHermitianError(f"matrix is not Hermitian: max |m - m^dagger| = {defect:.3e}")
    try:
        values, vectors = np.linalg.eigh((m + dagger(m)) / 2)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    return SpectralDecomposition(values[::-1].copy(), vectors[:, ::-1].copy())


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Hermitian square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in [-PSD_TOL, 0) are clamped to 0; anything lower raises
    NotPsdError.
    """
    values, vectors = hermitian_eig(m)
    low = float(values.min())
    if low < -PSD_TOL:
        raise NotPsdError(f"matrix is not positive semidefinite: min eigenvalue = {low:.3e}")
    root = (vectors * np.sqrt(np.clip(values, 0.0, None))) @ dagger(vectors)
    return (root + dagger(root)) / 2


def partial_transpose(m: np.ndarray) -> np.ndarray:
    """Transpose the second qubit's indices of a two-qubit operator.

    Entry ((a, n), (b, m)) of the output equals entry ((a, m), (b, n)) of the
    input.  The map is an exact entry permutation, hence involutive and
    trace preserving.
    """
    m = _as_square(m)
    if m.shape[0] != 4:
        raise BadDimensionError(f"partial transpose needs a 4x4 matrix, got shape {m.shape}")
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4).copy()


def partial_trace(m: np.ndarray, dims: tuple[int, int], keep: str) -> np.ndarray:
    """Trace out one tensor factor of an operator on a dA x dB system.

    ``keep`` selects the surviving factor, "first" or "second".
    """
    m = _as_square(m)
    da, db = dims
    if m.shape[0] != da * db:
        raise BadDimensionError(f"matrix of dim {m.shape[0]} does not factor as {da}x{db}")
    t = m.reshape(da, db, da, db)
    if keep == "first":
        return np.einsum("ijkj->ik", t)
    if keep == "second":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")
