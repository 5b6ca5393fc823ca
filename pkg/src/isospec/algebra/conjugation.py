"""/src/isospec/algebra/conjugation.py

Explicit conjugating elements A_Z in SU(m) (resp. E_Z in SO(3)).
"""

import numpy as np

from isospec.errors import DimensionMismatchError, NotIsospectralError

from .models import ConjugationWitness, MatrixKind, SignSymmetry, MapPair, SkewMapPair, SymMapPair

SPECTRUM_TOL = 1e-8


def _eigh(matrix: np.ndarray, kind: MatrixKind) -> tuple[np.ndarray, np.ndarray]:
    # su: X = i*H with H hermitian, ordered by imaginary part
    if kind == "su":
        return np.linalg.eigh(-1j * matrix)
    return np.linalg.eigh(matrix)


def conjugation_witness(
    X: np.ndarray,
    X_prime: np.ndarray,
    kind: MatrixKind = "su",
) -> ConjugationWitness:
    """Find A with A X A^-1 = X'.

    Eigenvectors of both matrices are matched in sorted eigenvalue order, so
    A maps each eigenspace of X onto the matching eigenspace of X'. The
    determinant is normalized by a scalar phase (su) or by flipping one
    eigenvector (sym).

    Parameters:
        X, X_prime: skew-hermitian (kind="su") or real symmetric (kind="sym")
        kind: which group the witness must lie in

    Returns:
        ConjugationWitness with A in SU(n), resp. SO(n), and its residual

    Raises:
        NotIsospectralError: if the sorted eigenvalues differ by more than 1e-8
    """
    X = np.asarray(X)
    X_prime = np.asarray(X_prime)
    if X.shape != X_prime.shape:
        raise DimensionMismatchError(f"shapes {X.shape} and {X_prime.shape} differ")
    n = X.shape[0]

    if np.array_equal(X, X_prime):
        identity = np.eye(n, dtype=complex if kind == "su" else float)
        return ConjugationWitness(A=identity, residual=0.0)

    values, vectors = _eigh(X, kind)
    values_prime, vectors_prime = _eigh(X_prime, kind)
    gap = float(np.max(np.abs(values - values_prime)))
    if gap > SPECTRUM_TOL:
        raise NotIsospectralError(f"eigenvalues differ by {gap:.3e}")

    if kind == "su":
        A = vectors_prime @ vectors.conj().T
        phase = np.angle(np.linalg.det(A))
        A = A * np.exp(-1j * phase / n)
    else:
        vectors_prime = vectors_prime.copy()
        if np.linalg.det(vectors_prime @ vectors.T) < 0:
            vectors_prime[:, 0] = -vectors_prime[:, 0]
        A = vectors_prime @ vectors.T

    residual = float(np.max(np.abs(A @ X @ A.conj().T - X_prime)))
    return ConjugationWitness(A=A, residual=residual)


def sign_symmetries() -> list[SignSymmetry]:
    return [SignSymmetry(eps1=e1, eps2=e2) for e1 in (1, -1) for e2 in (1, -1)]


def transform_pair(
    pair: MapPair,
    A: np.ndarray,
    signs: SignSymmetry = SignSymmetry(),
    conjugate: bool = False,
) -> MapPair:
    """Equivalence action Z -> A j_{Psi(Z)} A^-1 with Psi a sign symmetry.

    With conjugate=True the su branch uses A composed with complex
    conjugation Q, which conjugates the matrix entries first.
    """
    A = np.asarray(A)
    if A.shape != (pair.size, pair.size):
        raise DimensionMismatchError(f"A has shape {A.shape}, pair has size {pair.size}")
    M1, M2 = pair.matrices
    if pair.kind == "su" and conjugate:
        M1, M2 = M1.conj(), M2.conj()
    inverse = A.conj().T
    images = (A @ (signs.eps1 * M1) @ inverse, A @ (signs.eps2 * M2) @ inverse)
    if isinstance(pair, SkewMapPair):
        return SkewMapPair(J1=images[0], J2=images[1])
    return SymMapPair(C1=np.real(images[0]), C2=np.real(images[1]))
