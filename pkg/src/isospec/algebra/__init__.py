"""/src/isospec/algebra/__init__.py"""

from .models import (
    ConjugationWitness,
    IsospectralCertificate,
    MapPair,
    NonequivalenceCertificate,
    SignSymmetry,
    SkewMapPair,
    SymMapPair,
    TorusWeight,
)
from .commutant import commutant_dimension, is_generic
from .conjugation import conjugation_witness, sign_symmetries, transform_pair
from .families import dual_vector, family_j, generic_example, pair_c, zero_skew_pair, zero_sym_pair
from .hopf_lift import su2_lift
from .pencil import (
    char_poly_at,
    check_isospectral,
    equivalence_invariant,
    nonequivalence_certificate,
    pencil,
)

__all__ = [
    "ConjugationWitness",
    "IsospectralCertificate",
    "MapPair",
    "NonequivalenceCertificate",
    "SignSymmetry",
    "SkewMapPair",
    "SymMapPair",
    "TorusWeight",
    "char_poly_at",
    "check_isospectral",
    "commutant_dimension",
    "conjugation_witness",
    "dual_vector",
    "equivalence_invariant",
    "family_j",
    "generic_example",
    "is_generic",
    "nonequivalence_certificate",
    "pair_c",
    "pencil",
    "sign_symmetries",
    "su2_lift",
    "transform_pair",
    "zero_skew_pair",
    "zero_sym_pair",
]
