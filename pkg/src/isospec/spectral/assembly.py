"""/src/isospec/spectral/assembly.py

Galerkin mass and stiffness matrices, one block per torus weight:

    mass[i][j]      = sum_n w_n conj(phi_i) phi_j
    stiffness[i][j] = sum_n w_n <d phi_i, d phi_j>_{g_lambda}

dvol_{g_lambda} = dvol_{g_0}, so the same weights serve every metric. Block
entries are torus invariant, so only one node per discrete torus orbit is
visited.
"""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from isospec import config
from isospec.algebra.models import TorusWeight
from isospec.errors import QuadratureSymmetryError
from isospec.geometry.metric import inverse_gram_matrices, tangent_frames
from isospec.geometry.models import AdmissibleForm, Surface

from .basis import basis_gradients, evaluate_basis
from .models import MonomialBasis, QuadratureRule, WeightBlock
from .quadrature import orbit_representatives

logger = logging.getLogger(__name__)

MASS_RTOL = 1e-10


def mass_range(mass: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenpairs of the mass matrix above 1e-10 times its largest eigenvalue."""
    if mass.shape[0] == 0:
        return np.zeros(0), np.zeros((0, 0), dtype=complex)
    values, vectors = np.linalg.eigh(mass)
    keep = values > MASS_RTOL * max(float(values[-1]), 0.0)
    return values[keep], vectors[:, keep]


def _chunk_contributions(
    basis: MonomialBasis,
    form: AdmissibleForm,
    surface: Surface,
    coords: np.ndarray,
    weights: np.ndarray,
    slices: list[list[int]],
) -> list[tuple[np.ndarray, np.ndarray]]:
    frames = tangent_frames(coords, surface)
    cometric = inverse_gram_matrices(form, coords, frames)
    values = evaluate_basis(basis, coords)
    # frame components of the ambient gradients: (n, d, basis)
    components = np.einsum("nkd,nbd->nkb", frames, basis_gradients(basis, coords))
    raised = cometric @ components
    out = []
    for indices in slices:
        v = values[:, indices]
        g = components[:, :, indices].reshape(-1, len(indices))
        h = (weights[:, None, None] * raised[:, :, indices]).reshape(-1, len(indices))
        out.append((v.conj().T @ (weights[:, None] * v), g.conj().T @ h))
    return out


def assemble_blocks(basis: MonomialBasis, quad: QuadratureRule, form: AdmissibleForm) -> list[WeightBlock]:
    """Assemble all weight blocks of the basis on the quadrature rule.

    Raises:
        QuadratureSymmetryError: if the circle order K is below 2N+1, so
            mixed-weight integrals would not cancel
    """
    if quad.symmetry_order < 2 * basis.N + 1:
        raise QuadratureSymmetryError(
            f"circle order {quad.symmetry_order} is below 2N+1 = {2 * basis.N + 1}"
        )
    if quad.m != basis.m:
        raise ValueError(f"quadrature is for m={quad.m}, basis for m={basis.m}")

    weight_slices = basis.weight_slices()
    slices = list(weight_slices.values())
    coords, weights = orbit_representatives(quad)
    chunk = config.ISOSPEC_CHUNK_SIZE
    bounds = [(start, min(start + chunk, len(weights))) for start in range(0, len(weights), chunk)]
    logger.info(
        "assembling %d blocks of %d monomials over %d of %d nodes (%d chunks)",
        len(slices),
        len(basis),
        len(weights),
        len(quad),
        len(bounds),
    )

    mass = [np.zeros((len(s), len(s)), dtype=complex) for s in slices]
    stiffness = [np.zeros((len(s), len(s)), dtype=complex) for s in slices]
    with ThreadPoolExecutor(max_workers=config.ISOSPEC_THREADS) as executor:
        partials = executor.map(
            lambda b: _chunk_contributions(basis, form, quad.surface, coords[b[0] : b[1]], weights[b[0] : b[1]], slices),
            bounds,
        )
        # chunks are reduced in index order
        for partial in partials:
            for k, (chunk_mass, chunk_stiffness) in enumerate(partial):
                mass[k] += chunk_mass
                stiffness[k] += chunk_stiffness

    blocks = []
    for k, ((m1, m2), indices) in enumerate(weight_slices.items()):
        block_mass = 0.5 * (mass[k] + mass[k].conj().T)
        block_stiffness = 0.5 * (stiffness[k] + stiffness[k].conj().T)
        rank = len(mass_range(block_mass)[0])
        blocks.append(
            WeightBlock(
                weight=TorusWeight(m1=m1, m2=m2),
                indices=indices,
                mass=block_mass,
                stiffness=block_stiffness,
                filtered_rank=rank,
            )
        )
    return blocks
