"""/src/isospec/algebra/hopf_lift.py

Lift of a rotation E in SO(3) to A in SU(2) with P(A p) = E P(p), where P
is the Hopf projection in the coordinates fixed by the geometry module.
"""

import logging
from functools import lru_cache

import numpy as np
from scipy.spatial.transform import Rotation

from isospec.errors import NotARotationError, SolverError

from .models import GROUP_TOL

logger = logging.getLogger(__name__)

LIFT_TOL = 1e-9
SAMPLE_COUNT = 64

# Pauli matrices ordered like the components of P: (sigma_z, sigma_x, sigma_y)
TAU = (
    np.array([[1, 0], [0, -1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
)

_CONVENTIONS = {
    "direct": lambda U: U,
    "adjoint": lambda U: U.conj().T,
    "conjugate": lambda U: U.conj(),
    "transpose": lambda U: U.T,
}


def sample_points() -> np.ndarray:
    """64 fixed points of R^4 used to check P o A = E o P."""
    return np.random.default_rng(0).standard_normal((SAMPLE_COUNT, 4))


def _to_complex(points: np.ndarray) -> np.ndarray:
    return points[..., 0::2] + 1j * points[..., 1::2]


def _to_real(points: np.ndarray) -> np.ndarray:
    out = np.empty(points.shape[:-1] + (2 * points.shape[-1],))
    out[..., 0::2] = points.real
    out[..., 1::2] = points.imag
    return out


def lift_residual(A: np.ndarray, E: np.ndarray) -> float:
    """max |P(A p) - E P(p)| over the fixed sample points."""
    # Deferred import to avoid circular dependencies
    from isospec.geometry.hopf import hopf_P

    points = sample_points()
    moved = _to_real(_to_complex(points) @ np.asarray(A).T)
    return float(np.max(np.abs(hopf_P(moved) - hopf_P(points) @ np.asarray(E).T)))


def _quaternion_candidate(E: np.ndarray) -> np.ndarray:
    x, y, z, w = Rotation.from_matrix(E).as_quat()
    return w * np.eye(2, dtype=complex) - 1j * (x * TAU[0] + y * TAU[1] + z * TAU[2])


@lru_cache(maxsize=1)
def _lift_convention() -> str:
    """Which form of the quaternion matrix realizes P o A = E o P.

    Determined once from elementary rotations about the three axes.
    """
    elementary = [Rotation.from_rotvec(0.7 * axis).as_matrix() for axis in np.eye(3)]
    for name, convert in _CONVENTIONS.items():
        if all(lift_residual(convert(_quaternion_candidate(E)), E) <= LIFT_TOL for E in elementary):
            logger.debug("su2 lift convention: %s", name)
            return name
    raise SolverError("no quaternion convention matches the Hopf projection")


def check_rotation(E: np.ndarray) -> np.ndarray:
    E = np.asarray(E, dtype=float)
    if E.shape != (3, 3):
        raise NotARotationError(f"expected a 3x3 matrix, got shape {E.shape}")
    if np.max(np.abs(E.T @ E - np.eye(3))) > GROUP_TOL:
        raise NotARotationError("matrix is not orthogonal")
    if abs(np.linalg.det(E) - 1.0) > GROUP_TOL:
        raise NotARotationError("matrix does not have determinant 1")
    return E


def su2_lift(E: np.ndarray) -> np.ndarray:
    """Return A in SU(2) covering the rotation E (either preimage +-A).

    Raises:
        NotARotationError: if E is not in SO(3) within 1e-10
    """
    E = check_rotation(E)
    A = _CONVENTIONS[_lift_convention()](_quaternion_candidate(E))
    residual = lift_residual(A, E)
    if residual > LIFT_TOL:
        raise SolverError(f"su2 lift residual {residual:.3e} exceeds {LIFT_TOL}")
    return A
