"""Two-qubit pure states, density matrices, and their validation.

The Bell-basis constructors take a real amplitude alpha in [0, 1] with
beta = sqrt(1 - alpha^2); alpha controls how entangled the state is, from a
product state at the endpoints to maximal entanglement at alpha = 1/sqrt(2).
"""

from __future__ import annotations

import enum
import json
from pathlib import Path

import numpy as np

from .errors import (
    BadDimensionError,
    BadTraceError,
    NotHermitianError,
    NotNormalizedError,
    NotPsdError,
    OutOfRangeError,
)
from .linalg import HERMITIAN_TOL, PSD_TOL, _as_square, dagger, hermiticity_defect

NORM_TOL = 1e-12
TRACE_TOL = 1e-10


class BellKind(enum.Enum):
    PSI_MINUS = "psi_minus"
    PSI_PLUS = "psi_plus"
    PHI_MINUS = "phi_minus"
    PHI_PLUS = "phi_plus"


def bell_state(kind: BellKind, alpha: float) -> np.ndarray:
    """Bell-basis pure state with amplitude alpha.

    PSI states are alpha|01> +/- beta|10>, PHI states alpha|00> +/- beta|11>,
    with beta = sqrt(1 - alpha^2).
    """
    if not 0.0 <= alpha <= 1.0:
        raise OutOfRangeError(f"alpha must lie in [0, 1], got {alpha}")
    beta = np.sqrt(1.0 - alpha * alpha)
    if kind is BellKind.PSI_MINUS:
        amplitudes = (0.0, alpha, -beta, 0.0)
    elif kind is BellKind.PSI_PLUS:
        amplitudes = (0.0, alpha, beta, 0.0)
    elif kind is BellKind.PHI_MINUS:
        amplitudes = (alpha, 0.0, 0.0, -beta)
    else:
        amplitudes = (alpha, 0.0, 0.0, beta)
    return np.array(amplitudes, dtype=complex)


def density_from_pure(psi: np.ndarray) -> np.ndarray:
    """Projector |psi><psi| of a normalized pure state."""
    psi = np.asarray(psi, dtype=complex)
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalizedError(f"state norm must be 1, got {norm:.12g}")
    return np.outer(psi, psi.conj())


def validate_density(m: np.ndarray) -> np.ndarray:
    """Check that m is a density matrix and return it as a complex array.

    Raises NotHermitianError, NotPsdError, or BadTraceError naming the violated
    invariant; eigenvalues in [-PSD_TOL, 0) are accepted as roundoff.
    """
    m = _as_square(m)
    defect = hermiticity_defect(m)
    if defect > HERMITIAN_TOL:
        raise NotHermitianError(f"not Hermitian: max |m - m^dagger| = {defect:.3e}")
    low = float(np.linalg.eigvalsh((m + dagger(m)) / 2).min())
    if low < -PSD_TOL:
        raise NotPsdError(f"not positive semidefinite: min eigenvalue = {low:.3e}")
    trace = complex(np.trace(m))
    if abs(trace - 1.0) > TRACE_TOL:
        raise BadTraceError(f"trace must be 1, got {trace.real:.12g}")
    return m


def density_to_dict(rho: np.ndarray) -> dict:
    """JSON-ready payload {"dim": d, "re": [[...]], "im": [[...]]}, row-major."""
    rho = np.asarray(rho, dtype=complex)
    return {
        "dim": rho.shape[0],
        "re": rho.real.tolist(),
        "im": rho.imag.tolist(),
    }


def density_from_dict(data: dict) -> np.ndarray:
    """Parse and validate a density matrix payload produced by density_to_dict."""
    try:
        dim = int(data["dim"])
        re = np.array(data["re"], dtype=float)
        im = np.array(data["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed density payload: {exc}") from exc
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise BadDimensionError(
            f"payload arrays must be {dim}x{dim}, got re {re.shape} and im {im.shape}"
        )
    return validate_density(re + 1j * im)


def save_density(path: str | Path, rho: np.ndarray) -> None:
    Path(path).write_text(json.dumps(density_to_dict(rho)) + "\n")


def load_density(path: str | Path) -> np.ndarray:
    """Load and validate a density matrix from a JSON file."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValueError(f"cannot read state file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"state file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("state file must hold a JSON object")
    return density_from_dict(data)
