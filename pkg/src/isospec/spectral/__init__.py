"""/src/isospec/spectral/__init__.py"""

from .models import (
    BlockSpectrum,
    ComparisonVerdict,
    MonomialBasis,
    QuadratureMeta,
    QuadratureRule,
    SpectrumReport,
    WeightBlock,
    WeightedPolynomial,
    surface_volume,
)
from .assembly import assemble_blocks
from .basis import basis_gradients, build_basis, evaluate_basis, polynomial_gradients, polynomial_values
from .eigen import compare_spectra, compute_spectrum, pooled_eigenvalues, round_sphere_spectrum, solve_block, solve_blocks
from .quadrature import build_quadrature, exact_symmetry_order, form_order_kind, orbit_representatives, radial_order
from .report_writer import write_report_csv, write_report_json
from .verification import random_weight_polynomials, rayleigh_identity_check, verify_star, weight_box
from .witnesses import ConjugationWitnessProvider

__all__ = [
    "BlockSpectrum",
    "ComparisonVerdict",
    "ConjugationWitnessProvider",
    "MonomialBasis",
    "QuadratureMeta",
    "QuadratureRule",
    "SpectrumReport",
    "WeightBlock",
    "WeightedPolynomial",
    "assemble_blocks",
    "basis_gradients",
    "build_basis",
    "build_quadrature",
    "compare_spectra",
    "compute_spectrum",
    "evaluate_basis",
    "exact_symmetry_order",
    "form_order_kind",
    "orbit_representatives",
    "polynomial_gradients",
    "polynomial_values",
    "pooled_eigenvalues",
    "radial_order",
    "random_weight_polynomials",
    "rayleigh_identity_check",
    "round_sphere_spectrum",
    "solve_block",
    "solve_blocks",
    "surface_volume",
    "verify_star",
    "weight_box",
    "write_report_csv",
    "write_report_json",
]
