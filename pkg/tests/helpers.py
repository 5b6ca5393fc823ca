"""Random matrix data shared by the test scripts."""

import numpy as np
from scipy.stats import special_ortho_group, unitary_group

from isospec.algebra import SkewMapPair, SymMapPair

SEED = 20010501


def random_skew_traceless(m: int, rng: np.random.Generator) -> np.ndarray:
    A = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    X = A - A.conj().T
    return X - np.trace(X) / m * np.eye(m)


def random_sym_traceless(rng: np.random.Generator) -> np.ndarray:
    A = rng.standard_normal((3, 3))
    X = A + A.T
    return X - np.trace(X) / 3 * np.eye(3)


def random_skew_pair(m: int, rng: np.random.Generator) -> SkewMapPair:
    return SkewMapPair(J1=random_skew_traceless(m, rng), J2=random_skew_traceless(m, rng))


def random_sym_pair(rng: np.random.Generator) -> SymMapPair:
    return SymMapPair(C1=random_sym_traceless(rng), C2=random_sym_traceless(rng))


def random_special_unitary(m: int, rng: np.random.Generator) -> np.ndarray:
    U = unitary_group.rvs(m, random_state=rng)
    return U * np.exp(-1j * np.angle(np.linalg.det(U)) / m)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    return special_ortho_group.rvs(3, random_state=rng)
