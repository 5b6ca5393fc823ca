"""/src/isospec/algebra/families.py

Explicit matrix data: the isospectral family j(t) in su(3), the isospectral
pair c, c' in Sym_0(R^3), and the generic element used to show that the
generic set is nonempty.
"""

import math

import numpy as np

from .models import SkewMapPair, SymMapPair, TorusWeight


def family_j(t: float) -> SkewMapPair:
    """Continuous isospectral family j(t): R^2 -> su(3).

    The characteristic polynomial of s*j1 + u*j2 is x^3 + (s^2 + 2u^2) x for
    every t, while tr((j1^2 + j2^2)^2) = 14 + 4 sin^2 t.
    """
    c, s = math.cos(t), math.sqrt(2.0) * math.sin(t)
    J1 = np.diag([-1j, 0.0, 1j])
    J2 = np.array(
        [
            [0.0, c, s],
            [-c, 0.0, c],
            [-s, -c, 0.0],
        ],
        dtype=complex,
    )
    return SkewMapPair(J1=J1, J2=J2)


def pair_c() -> tuple[SymMapPair, SymMapPair]:
    """Isospectral, nonequivalent, generic pair c, c': R^2 -> Sym_0(R^3)."""
    r2 = math.sqrt(2.0)
    C1 = np.diag([-1.0, 0.0, 1.0])
    C2 = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    C2_prime = np.array([[0.0, 0.0, r2], [0.0, 0.0, 0.0], [r2, 0.0, 0.0]])
    return SymMapPair(C1=C1, C2=C2), SymMapPair(C1=C1, C2=C2_prime)


def generic_example(alphas: list[float]) -> SkewMapPair:
    """j1 = diag(i*alpha), j2 = tridiagonal with 1 below, -1 above the diagonal.

    Raises:
        ValueError: if alphas are not pairwise distinct or do not sum to zero
    """
    alphas = [float(a) for a in alphas]
    if len(set(alphas)) != len(alphas):
        raise ValueError("alphas must be pairwise distinct")
    if abs(sum(alphas)) > 1e-12:
        raise ValueError("alphas must sum to zero")
    m = len(alphas)
    J1 = np.diag(1j * np.array(alphas))
    J2 = np.diag(np.ones(m - 1), -1) - np.diag(np.ones(m - 1), 1)
    return SkewMapPair(J1=J1, J2=J2.astype(complex))


def zero_skew_pair(m: int) -> SkewMapPair:
    zeros = np.zeros((m, m), dtype=complex)
    return SkewMapPair(J1=zeros, J2=zeros)


def zero_sym_pair() -> SymMapPair:
    zeros = np.zeros((3, 3))
    return SymMapPair(C1=zeros, C2=zeros)


def dual_vector(mu: TorusWeight) -> tuple[float, float]:
    """Vector Z in h corresponding to mu under the basis-dual identification."""
    return (float(mu.m1), float(mu.m2))
