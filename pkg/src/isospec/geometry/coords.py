"""/src/isospec/geometry/coords.py

Array helpers for the identification R^{2m+2} = C^m + C. Every function
works on stacked arrays with the coordinate axis last.
"""

import numpy as np


def to_complex(coords: np.ndarray) -> np.ndarray:
    """(..., 2m+2) real -> (..., m+1) complex; the last entry is q."""
    coords = np.asarray(coords, dtype=float)
    return coords[..., 0::2] + 1j * coords[..., 1::2]


def to_real(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    out = np.empty(z.shape[:-1] + (2 * z.shape[-1],))
    out[..., 0::2] = z.real
    out[..., 1::2] = z.imag
    return out


def split(coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Complex p (..., m) and q (...)."""
    z = to_complex(coords)
    return z[..., :-1], z[..., -1]


def rdot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Euclidean inner product of complex vectors viewed as real ones."""
    return np.real(np.sum(np.conj(a) * b, axis=-1))
