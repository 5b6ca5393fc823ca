"""/src/isospec/algebra/pencil.py

Characteristic polynomials of the pencil s*M1 + u*M2 and the invariants
used to certify isospectrality and separate equivalence classes.
"""

import logging
import math

import numpy as np

from isospec.errors import DimensionMismatchError

from .models import IsospectralCertificate, MapPair, NonequivalenceCertificate

logger = logging.getLogger(__name__)

IMAGINARY_TOL = 1e-12


def pencil(pair: MapPair, s: float, u: float) -> np.ndarray:
    """Value of the linear map at Z = s*Z1 + u*Z2."""
    M1, M2 = pair.matrices
    return s * M1 + u * M2


def char_poly_coefficients(matrix: np.ndarray) -> np.ndarray:
    """Coefficients of det(x*Id - matrix), highest power first.

    Faddeev-LeVerrier recursion; it uses traces only, so it stays independent
    of any eigensolver.
    """
    n = matrix.shape[0]
    dtype = complex if np.iscomplexobj(matrix) else float
    coeffs = np.zeros(n + 1, dtype=dtype)
    coeffs[0] = 1.0
    identity = np.eye(n, dtype=dtype)
    current = identity
    for k in range(1, n + 1):
        product = matrix @ current
        coeffs[k] = -np.trace(product) / k
        current = product + coeffs[k] * identity
    return coeffs


def char_poly_at(pair: MapPair, s: float, u: float) -> np.ndarray:
    """Characteristic polynomial of s*M1 + u*M2.

    Parameters:
        pair: SkewMapPair or SymMapPair
        s, u: coordinates of Z in the basis {Z1, Z2}

    Returns:
        Coefficient array of length size+1 in descending powers, leading 1
    """
    return char_poly_coefficients(pencil(pair, s, u))


def chebyshev_points(count: int) -> np.ndarray:
    k = np.arange(count)
    return np.cos((2 * k + 1) * np.pi / (2 * count))


def check_isospectral(
    pair_a: MapPair,
    pair_b: MapPair,
    grid_size: int | None = None,
    tol: float = 1e-10,
) -> IsospectralCertificate:
    """Certify that j_Z and j'_Z are conjugate for every Z.

    The characteristic polynomial coefficients are polynomials of total
    degree <= size in (s, u), so agreement on a tensor grid with size+1
    distinct Chebyshev points per axis forces agreement everywhere.

    Parameters:
        pair_a, pair_b: pairs of the same matrix size
        grid_size: requested number of grid points, at least (size+1)^2
        tol: largest accepted coefficient gap

    Returns:
        IsospectralCertificate with the largest coefficient gap on the grid

    Raises:
        DimensionMismatchError: if the pairs act on different dimensions
    """
    if pair_a.size != pair_b.size:
        raise DimensionMismatchError(
            f"cannot compare pairs of size {pair_a.size} and {pair_b.size}"
        )
    per_axis = pair_a.size + 1
    if grid_size is not None:
        per_axis = max(per_axis, math.isqrt(max(grid_size, 1) - 1) + 1)
    nodes = chebyshev_points(per_axis)

    max_gap = 0.0
    for s in nodes:
        for u in nodes:
            gap = np.max(np.abs(char_poly_at(pair_a, s, u) - char_poly_at(pair_b, s, u)))
            max_gap = max(max_gap, float(gap))

    logger.debug("isospectrality grid %dx%d, max gap %.3e", per_axis, per_axis, max_gap)
    return IsospectralCertificate(
        ok=max_gap <= tol,
        max_coeff_gap=max_gap,
        grid_points=per_axis * per_axis,
    )


def equivalence_invariant(pair: MapPair) -> float:
    """tr((M1^2 + M2^2)^2), constant on equivalence classes of pairs."""
    M1, M2 = pair.matrices
    square_sum = M1 @ M1 + M2 @ M2
    value = np.trace(square_sum @ square_sum)
    if abs(np.imag(value)) > IMAGINARY_TOL * max(1.0, abs(value)):
        raise ValueError(f"invariant has imaginary part {np.imag(value):.3e}")
    return float(np.real(value))


def nonequivalence_certificate(
    pair_a: MapPair,
    pair_b: MapPair,
    tol: float = 1e-8,
) -> NonequivalenceCertificate:
    """Sufficient test for nonequivalence: the invariants differ."""
    invariant_a = equivalence_invariant(pair_a)
    invariant_b = equivalence_invariant(pair_b)
    return NonequivalenceCertificate(
        separated=abs(invariant_a - invariant_b) > tol,
        invariant_a=invariant_a,
        invariant_b=invariant_b,
    )
