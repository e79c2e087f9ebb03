"""Partial-transpose separability test and inseparability intervals.

For two qubits a state is separable exactly when its partial transpose is
positive semidefinite, so the sign of the smallest partial-transpose
eigenvalue decides entanglement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cloning import clone_local, clone_nonlocal
from .errors import BadDimensionError, OutOfRangeError
from .linalg import dagger, partial_transpose
from .states import BellKind, bell_state, density_from_pure, validate_density

PPT_TOL = 1e-10
BISECTION_TOL = 1e-8
MAX_BISECTIONS = 60

SCHEMES = ("pure", "local", "nonlocal")


@dataclass
class SeparabilityVerdict:
    min_pt_eigenvalue: float
    entangled: bool
    tolerance: float


@dataclass
class AlphaSquaredInterval:
    """Interval of alpha^2 values on which a scheme's output is entangled."""

    low: float
    high: float


def ppt_verdict(rho: np.ndarray, tol: float = PPT_TOL) -> SeparabilityVerdict:
    """Classify a two-qubit state by the sign of its minimal PT eigenvalue.

    States with |min eigenvalue| <= tol are reported separable.
    """
    rho = validate_density(rho)
    if rho.shape[0] != 4:
        raise BadDimensionError(f"PPT verdict needs a 4x4 state, got shape {rho.shape}")
    pt = partial_transpose(rho)
    low = float(np.linalg.eigvalsh((pt + dagger(pt)) / 2).min())
    return SeparabilityVerdict(min_pt_eigenvalue=low, entangled=low < -tol, tolerance=tol)


def _scheme_output(scheme: str, alpha_squared: float) -> np.ndarray:
    rho = density_from_pure(bell_state(BellKind.PSI_MINUS, float(np.sqrt(alpha_squared))))
    if scheme == "pure":
        return rho
    if scheme == "local":
        return clone_local(rho)
    return clone_nonlocal(rho)


def _bisect_boundary(scheme: str, separable_end: float, entangled_end: float, tol: float) -> float:
    for _ in range(MAX_BISECTIONS):
        if abs(entangled_end - separable_end) <= tol:
            break
        mid = (separable_end + entangled_end) / 2
        if ppt_verdict(_scheme_output(scheme, mid)).entangled:
            entangled_end = mid
        else:
            separable_end = mid
    return (separable_end + entangled_end) / 2


def entanglement_interval(scheme: str, tol: float = BISECTION_TOL) -> AlphaSquaredInterval:
    """Bisect for the alpha^2 interval on which the scheme output is entangled.

    ``scheme`` is "pure", "local", or "nonlocal"; the output is evaluated on
    the alpha|01> - beta|10> family.  Both endpoints are located to within
    ``tol``, exploiting that the interval is symmetric about 1/2 and contains
    it.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"scheme must be one of {SCHEMES}, got {scheme!r}")
    if tol <= 0.0:
        raise OutOfRangeError(f"tolerance must be positive, got {tol}")
    low = _bisect_boundary(scheme, 0.0, 0.5, tol)
    high = _bisect_boundary(scheme, 1.0, 0.5, tol)
    return AlphaSquaredInterval(low=low, high=high)
