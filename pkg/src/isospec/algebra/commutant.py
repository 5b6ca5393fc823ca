"""/src/isospec/algebra/commutant.py"""

import numpy as np

from .models import MapPair

NULL_RTOL = 1e-9


def su_basis(m: int) -> list[np.ndarray]:
    """Real basis of su(m): m^2 - 1 traceless skew-hermitian matrices."""
    basis = []
    for i in range(m):
        for j in range(i + 1, m):
            real_part = np.zeros((m, m), dtype=complex)
            real_part[i, j], real_part[j, i] = 1.0, -1.0
            imag_part = np.zeros((m, m), dtype=complex)
            imag_part[i, j] = imag_part[j, i] = 1j
            basis.extend([real_part, imag_part])
    for k in range(m - 1):
        diagonal = np.zeros((m, m), dtype=complex)
        diagonal[k, k], diagonal[k + 1, k + 1] = 1j, -1j
        basis.append(diagonal)
    return basis


def so_basis(n: int) -> list[np.ndarray]:
    """Real basis of so(n)."""
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            element = np.zeros((n, n))
            element[i, j], element[j, i] = 1.0, -1.0
            basis.append(element)
    return basis


def numerical_nullity(matrix: np.ndarray, rtol: float = NULL_RTOL) -> int:
    """Number of columns minus numerical rank.

    Singular values below rtol * max(largest singular value, 1) count as zero.
    """
    columns = matrix.shape[1]
    if matrix.size == 0:
        return columns
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    threshold = rtol * max(float(singular_values[0]), 1.0)
    return columns - int(np.count_nonzero(singular_values >= threshold))


def commutator_map(pair: MapPair) -> np.ndarray:
    """Real matrix of tau -> ([M1, tau], [M2, tau]) on su(m), resp. so(3)."""
    M1, M2 = pair.matrices
    basis = su_basis(pair.size) if pair.kind == "su" else so_basis(pair.size)
    columns = []
    for tau in basis:
        image = np.concatenate([(M1 @ tau - tau @ M1).ravel(), (M2 @ tau - tau @ M2).ravel()])
        columns.append(np.concatenate([image.real, image.imag]))
    return np.array(columns).T


def commutant_dimension(pair: MapPair) -> int:
    """Dimension of the commutant of {M1, M2} inside su(m), resp. so(3).

    The pair is generic exactly when this is 0.
    """
    return numerical_nullity(commutator_map(pair))


def is_generic(pair: MapPair) -> bool:
    return commutant_dimension(pair) == 0
