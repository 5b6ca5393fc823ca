"""/src/isospec/geometry/torus.py

Torus action exp(a Z1 + b Z2): (p, q) -> (e^{ia} p, e^{ib} q), its vertical
fields Z*, and the torus-equivariant isometries F = (A, Id).
"""

import numpy as np

from .coords import to_complex, to_real
from .models import AmbientPoint, TangentVector


def rotate(coords: np.ndarray, a, b) -> np.ndarray:
    """Array form of the torus action; a and b broadcast against the stack."""
    z = to_complex(coords)
    phases = np.empty(z.shape, dtype=complex)
    phases[..., :-1] = np.asarray(np.exp(1j * np.asarray(a, dtype=float)))[..., None]
    phases[..., -1] = np.exp(1j * np.asarray(b, dtype=float))
    return to_real(z * phases)


def vertical_vectors(coords: np.ndarray, z1, z2) -> np.ndarray:
    """Z* at each point for Z = z1 Z1 + z2 Z2: (i z1 p, i z2 q)."""
    z = to_complex(coords)
    scale = np.empty(z.shape, dtype=complex)
    scale[..., :-1] = np.asarray(1j * np.asarray(z1, dtype=float))[..., None]
    scale[..., -1] = 1j * np.asarray(z2, dtype=float)
    return to_real(z * scale)


def isometry_matrix(A: np.ndarray) -> np.ndarray:
    """Real (2m+2)x(2m+2) matrix of F = (A, Id) for A acting on C^m."""
    A = np.asarray(A, dtype=complex)
    m = A.shape[0]
    F = np.zeros((2 * m + 2, 2 * m + 2))
    F[0 : 2 * m : 2, 0 : 2 * m : 2] = A.real
    F[0 : 2 * m : 2, 1 : 2 * m : 2] = -A.imag
    F[1 : 2 * m : 2, 0 : 2 * m : 2] = A.imag
    F[1 : 2 * m : 2, 1 : 2 * m : 2] = A.real
    F[-2:, -2:] = np.eye(2)
    return F


def torus_act(a: float, b: float, pt: AmbientPoint) -> AmbientPoint:
    return AmbientPoint(m=pt.m, coords=rotate(pt.coords, a, b), surface=pt.surface)


def torus_pushforward(a: float, b: float, v: TangentVector) -> TangentVector:
    """Differential of the torus action: (X, U) -> (e^{ia} X, e^{ib} U)."""
    return TangentVector(base=torus_act(a, b, v.base), vector=rotate(v.vector, a, b))


def vertical_field(z: tuple[float, float], pt: AmbientPoint) -> TangentVector:
    """Fundamental vector field Z* at pt."""
    return TangentVector(base=pt, vector=vertical_vectors(pt.coords, z[0], z[1]))


def apply_isometry(A: np.ndarray, v: TangentVector) -> TangentVector:
    """Push (pt, v) forward by F = (A, Id)."""
    F = isometry_matrix(A)
    base = AmbientPoint(m=v.base.m, coords=F @ v.base.coords, surface=v.base.surface)
    return TangentVector(base=base, vector=F @ v.vector)
