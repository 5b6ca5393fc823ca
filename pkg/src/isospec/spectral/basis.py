"""/src/isospec/spectral/basis.py

Monomial basis over C^m + C and its exact evaluation. Gradients are taken
from the exponents through the Wirtinger derivatives

    d/dx = d/dz + d/dzbar,    d/dy = i (d/dz - d/dzbar),

so no numerical differentiation enters the assembly.
"""

import itertools

import numpy as np

from isospec.geometry.coords import to_complex

from .models import MonomialBasis


def build_basis(m: int, N: int) -> MonomialBasis:
    """All monomials p^alpha pbar^beta q^gamma qbar^delta of total degree <= N.

    There are binom(2m+2+N, N) of them, sorted lexicographically by
    (alpha, beta, gamma, delta).
    """
    if N < 1:
        raise ValueError("basis degree must be at least 1")
    variables = 2 * m + 2
    entries = []
    for degree in range(N + 1):
        for combo in itertools.combinations_with_replacement(range(variables), degree):
            counts = [0] * variables
            for index in combo:
                counts[index] += 1
            entries.append((tuple(counts[:m]), tuple(counts[m : 2 * m]), counts[2 * m], counts[2 * m + 1]))
    return MonomialBasis(m=m, N=N, entries=sorted(entries))


def _variables(coords: np.ndarray, m: int) -> np.ndarray:
    """(n, 2m+2) complex values (p, pbar, q, qbar) matching the exponent layout."""
    z = to_complex(coords)
    return np.concatenate([z[:, :m], np.conj(z[:, :m]), z[:, m:], np.conj(z[:, m:])], axis=1)


def _power_table(values: np.ndarray, degree: int) -> np.ndarray:
    table = np.empty((degree + 1,) + values.shape, dtype=complex)
    table[0] = 1.0
    for k in range(1, degree + 1):
        table[k] = table[k - 1] * values
    return table


def evaluate_basis(basis: MonomialBasis, coords: np.ndarray, indices: list[int] | None = None) -> np.ndarray:
    """Values of the selected monomials at each point; shape (n, len(indices))."""
    exponents = basis.exponent_matrix
    if indices is not None:
        exponents = exponents[indices]
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    table = _power_table(_variables(coords, basis.m), basis.N)
    return _product(table, exponents)


def _product(table: np.ndarray, exponents: np.ndarray) -> np.ndarray:
    result = np.ones((table.shape[1], exponents.shape[0]), dtype=complex)
    for v in range(exponents.shape[1]):
        result *= table[exponents[:, v], :, v].T
    return result


def basis_gradients(basis: MonomialBasis, coords: np.ndarray, indices: list[int] | None = None) -> np.ndarray:
    """Ambient real gradients of the selected monomials; shape (n, len(indices), 2m+2)."""
    exponents = basis.exponent_matrix
    if indices is not None:
        exponents = exponents[indices]
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    m = basis.m
    table = _power_table(_variables(coords, m), basis.N)
    gradients = np.empty((coords.shape[0], exponents.shape[0], 2 * m + 2), dtype=complex)
    # complex coordinate k has holomorphic slot hol[k] and antiholomorphic slot anti[k]
    hol = list(range(m)) + [2 * m]
    anti = list(range(m, 2 * m)) + [2 * m + 1]
    for k in range(m + 1):
        d_hol = _lowered(table, exponents, hol[k])
        d_anti = _lowered(table, exponents, anti[k])
        gradients[:, :, 2 * k] = d_hol + d_anti
        gradients[:, :, 2 * k + 1] = 1j * (d_hol - d_anti)
    return gradients


def _lowered(table: np.ndarray, exponents: np.ndarray, slot: int) -> np.ndarray:
    """Derivative of each monomial with respect to one (anti)holomorphic variable."""
    factor = exponents[:, slot]
    lowered = exponents.copy()
    lowered[:, slot] = np.maximum(factor - 1, 0)
    return _product(table, lowered) * factor[None, :]


def polynomial_values(basis: MonomialBasis, coefficients: np.ndarray, coords: np.ndarray) -> np.ndarray:
    return evaluate_basis(basis, coords) @ np.asarray(coefficients, dtype=complex)


def polynomial_gradients(basis: MonomialBasis, coefficients: np.ndarray, coords: np.ndarray) -> np.ndarray:
    """Ambient gradients (n, 2m+2) of sum_i c_i * basis[i]."""
    return np.einsum("nbd,b->nd", basis_gradients(basis, coords), np.asarray(coefficients, dtype=complex))
