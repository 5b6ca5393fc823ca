"""/src/isospec/spectral/verification.py

Pointwise checks behind the isospectrality of g_lambda and g_lambda':

    (mu o lambda)(v)        = (mu o lambda')(F_mu* v)
    |d(psi o F_mu)|_{g_lambda}(x) = |d psi|_{g_lambda'}(F_mu x)

for F_mu = (A_Z, Id) and psi of pure weight mu.
"""

import logging

import numpy as np

from isospec import config
from isospec.algebra.models import TorusWeight
from isospec.errors import MixedWeightError
from isospec.geometry.forms import form_values
from isospec.geometry.metric import inverse_gram_matrices, tangent_frames
from isospec.geometry.models import AdmissibleForm, Surface
from isospec.geometry.sampling import random_surface_points, random_tangent_vectors
from isospec.geometry.torus import isometry_matrix

from .basis import polynomial_gradients
from .models import MonomialBasis, WeightedPolynomial
from .witnesses import ConjugationWitnessProvider

logger = logging.getLogger(__name__)


def weight_box(bound: int) -> list[TorusWeight]:
    """All weights with |m1|, |m2| <= bound, lexicographically ordered."""
    return [TorusWeight(m1=m1, m2=m2) for m1 in range(-bound, bound + 1) for m2 in range(-bound, bound + 1)]


def _rng(rng: np.random.Generator | int | None) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(config.ISOSPEC_SEED if rng is None else rng)


def verify_star(
    form_a: AdmissibleForm,
    form_b: AdmissibleForm,
    mu: TorusWeight,
    witness_provider: ConjugationWitnessProvider,
    sample_count: int,
    rng: np.random.Generator | int | None = None,
    surface: Surface | None = None,
) -> float:
    """Max |(mu o lambda)(v) - (mu o lambda')(F_mu* v)| over random tangent samples.

    Raises:
        WitnessError: if no witness exists for mu
    """
    if mu.as_tuple() == (0, 0):
        return 0.0
    surface = surface or Surface.sphere()
    rng = _rng(rng)
    F = isometry_matrix(witness_provider.witness(mu).A)
    points = random_surface_points(form_a.m, surface, sample_count, rng)
    vectors = random_tangent_vectors(points, rng, surface)
    weight = np.array(mu.as_tuple(), dtype=float)
    lhs = form_values(form_a, points, vectors) @ weight
    rhs = form_values(form_b, points @ F.T, vectors @ F.T) @ weight
    residual = float(np.max(np.abs(lhs - rhs)))
    logger.debug("verify_star %s: residual %.3e", mu.as_tuple(), residual)
    return residual


def random_weight_polynomials(
    basis: MonomialBasis,
    mu: TorusWeight,
    count: int,
    rng: np.random.Generator | int | None = None,
) -> list[WeightedPolynomial]:
    """Random complex combinations of the weight-mu monomials of the basis."""
    rng = _rng(rng)
    indices = basis.weight_slices().get(mu.as_tuple(), [])
    if not indices:
        raise MixedWeightError(f"basis of degree {basis.N} has no monomials of weight {mu.as_tuple()}")
    polynomials = []
    for _ in range(count):
        coefficients = np.zeros(len(basis), dtype=complex)
        coefficients[indices] = rng.standard_normal(len(indices)) + 1j * rng.standard_normal(len(indices))
        polynomials.append(WeightedPolynomial(basis=basis, coefficients=coefficients))
    return polynomials


def _norms(form: AdmissibleForm, coords: np.ndarray, gradients: np.ndarray, surface: Surface) -> np.ndarray:
    frames = tangent_frames(coords, surface)
    cometric = inverse_gram_matrices(form, coords, frames)
    components = np.einsum("nkd,nd->nk", frames, gradients)
    squared = np.einsum("nk,nkl,nl->n", components.conj(), cometric, components).real
    return np.sqrt(np.maximum(squared, 0.0))


def rayleigh_identity_check(
    form_a: AdmissibleForm,
    form_b: AdmissibleForm,
    mu: TorusWeight,
    witness_provider: ConjugationWitnessProvider,
    test_polynomials: list[WeightedPolynomial],
    points: int | np.ndarray,
    rng: np.random.Generator | int | None = None,
    surface: Surface | None = None,
) -> float:
    """Max over (psi, x) of | |d phi|_{g_lambda}(x) - |d psi|_{g_lambda'}(F x) |, phi = psi o F.

    grad phi(x) = F^T grad psi(F x), so both sides come from the exact
    gradients of psi.

    Raises:
        MixedWeightError: if a test polynomial is not of pure weight mu
    """
    for psi in test_polynomials:
        weight = psi.pure_weight()
        if weight is not None and weight != mu:
            raise MixedWeightError(f"test polynomial has weight {weight.as_tuple()}, expected {mu.as_tuple()}")
    surface = surface or Surface.sphere()
    if isinstance(points, (int, np.integer)):
        points = random_surface_points(form_a.m, surface, int(points), _rng(rng))
    points = np.asarray(points, dtype=float)
    F = isometry_matrix(witness_provider.witness(mu).A)
    moved = points @ F.T
    residual = 0.0
    for psi in test_polynomials:
        grad_psi = polynomial_gradients(psi.basis, psi.coefficients, moved)
        grad_phi = grad_psi @ F
        lhs = _norms(form_a, points, grad_phi, surface)
        rhs = _norms(form_b, moved, grad_psi, surface)
        residual = max(residual, float(np.max(np.abs(lhs - rhs))))
    logger.debug("rayleigh identity %s: residual %.3e", mu.as_tuple(), residual)
    return residual
