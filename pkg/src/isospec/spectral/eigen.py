"""/src/isospec/spectral/eigen.py

Generalized eigenvalue solves per weight block and comparison of spectra.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy import linalg

from isospec import config
from isospec.errors import MetadataMismatchError, SolverError
from isospec.geometry.models import AdmissibleForm, Surface

from .assembly import assemble_blocks, mass_range
from .basis import build_basis
from .models import (
    BlockSpectrum,
    ComparisonVerdict,
    QuadratureMeta,
    SpectrumReport,
    WeightBlock,
    WeightGap,
)
from .quadrature import build_quadrature, radial_order

logger = logging.getLogger(__name__)

NEGATIVE_TOL = 1e-9


def solve_block(block: WeightBlock) -> list[float]:
    """Eigenvalues of S v = mu M v on the range of the mass matrix, ascending.

    Raises:
        SolverError: if an eigenvalue falls below -1e-9
    """
    values, vectors = mass_range(block.mass)
    if len(values) == 0:
        return []
    # M-orthonormal basis of the range turns the pencil into a standard problem
    reduction = vectors / np.sqrt(values)[None, :]
    reduced = reduction.conj().T @ block.stiffness @ reduction
    eigenvalues = linalg.eigh(0.5 * (reduced + reduced.conj().T), eigvals_only=True)
    if eigenvalues[0] < -NEGATIVE_TOL:
        raise SolverError(f"block {block.weight.as_tuple()} has eigenvalue {eigenvalues[0]:.3e}")
    return sorted(float(value) for value in eigenvalues)


def solve_blocks(blocks: list[WeightBlock]) -> list[BlockSpectrum]:
    with ThreadPoolExecutor(max_workers=config.ISOSPEC_THREADS) as executor:
        spectra = list(executor.map(solve_block, blocks))
    return [
        BlockSpectrum(weight=block.weight.as_tuple(), eigenvalues=values, filtered_rank=len(values))
        for block, values in zip(blocks, spectra)
    ]


def compute_spectrum(
    form: AdmissibleForm,
    N: int,
    K: int,
    surface: Surface | None = None,
    radial: int | None = None,
    label: str = "",
    seed: int | None = None,
) -> SpectrumReport:
    """Assemble and solve all weight blocks of g_lambda at one quadrature level."""
    surface = surface or Surface.sphere()
    m = form.m
    radial = radial or radial_order(N, m)
    basis = build_basis(m, N)
    quad = build_quadrature(m, surface, (K, radial))
    blocks = solve_blocks(assemble_blocks(basis, quad, form))
    logger.info("spectrum %s: N=%d K=%d, %d eigenvalues", label or "-", N, K, sum(len(b.eigenvalues) for b in blocks))
    return SpectrumReport(
        label=label,
        surface=surface.label(),
        m=m,
        N=N,
        quadrature=QuadratureMeta(orders=[K, radial], K=K, radial_order=radial),
        blocks=blocks,
        seed=seed,
    )


def compare_spectra(report_a: SpectrumReport, report_b: SpectrumReport, tol: float) -> ComparisonVerdict:
    """Sort-and-match comparison of eigenvalues within every weight block.

    Raises:
        MetadataMismatchError: if basis or quadrature metadata differ
    """
    if report_a.metadata() != report_b.metadata():
        raise MetadataMismatchError(f"cannot compare {report_a.metadata()} with {report_b.metadata()}")
    blocks_a, blocks_b = report_a.block_map(), report_b.block_map()
    if blocks_a.keys() != blocks_b.keys():
        raise MetadataMismatchError("reports cover different weights")
    per_weight = []
    for weight, values_a in blocks_a.items():
        values_b = blocks_b[weight]
        if len(values_a) != len(values_b):
            gap = math.inf
        elif values_a:
            gap = float(np.max(np.abs(np.array(values_a) - np.array(values_b))))
        else:
            gap = 0.0
        per_weight.append(WeightGap(weight=weight, max_gap=gap))
    max_gap = max((w.max_gap for w in per_weight), default=0.0)
    return ComparisonVerdict(max_gap=max_gap, ok=max_gap <= tol, tol=tol, per_weight=per_weight)


def round_sphere_spectrum(m: int, N: int) -> list[tuple[float, int]]:
    """Eigenvalues k(k+2m) of S^{2m+1} for k <= N with the dimensions of the harmonic spaces."""
    n = 2 * m + 2
    spectrum = []
    for k in range(N + 1):
        multiplicity = math.comb(k + n - 1, n - 1) - math.comb(k + n - 3, n - 1)
        spectrum.append((float(k * (k + 2 * m)), multiplicity))
    return spectrum


def pooled_eigenvalues(report: SpectrumReport) -> list[float]:
    return sorted(value for block in report.blocks for value in block.eigenvalues)
