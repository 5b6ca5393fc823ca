"""/src/isospec/spectral/models.py"""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from isospec.algebra.models import TorusWeight
from isospec.errors import MixedWeightError
from isospec.geometry.models import AmbientPoint, Surface

HERMITIAN_TOL = 1e-10
VOLUME_TOL = 1e-10

Exponents = tuple[tuple[int, ...], tuple[int, ...], int, int]


def _frozen(value, dtype) -> np.ndarray:
    array = np.array(value, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


def surface_volume(m: int, surface: Surface) -> float:
    """Volume of S^{2m+1}, of M_{a,b} = S^{2m-1}_a x S^1_b, or of B^{2m+2}."""
    if surface.kind == "sphere":
        return 2 * math.pi ** (m + 1) / math.factorial(m)
    if surface.kind == "ball":
        return math.pi ** (m + 1) / math.factorial(m + 1)
    inner = 2 * math.pi**m / math.factorial(m - 1)
    return inner * surface.a ** (2 * m - 1) * 2 * math.pi * surface.b


class MonomialBasis(BaseModel):
    """Monomials p^alpha conj(p)^beta q^gamma conj(q)^delta of total degree <= N."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1)
    N: int = Field(ge=1)
    entries: list[Exponents]

    @model_validator(mode="after")
    def _check_entries(self):
        for alpha, beta, gamma, delta in self.entries:
            if len(alpha) != self.m or len(beta) != self.m:
                raise ValueError("exponent tuples must have length m")
            if sum(alpha) + sum(beta) + gamma + delta > self.N:
                raise ValueError("monomial exceeds the basis degree")
        if self.entries != sorted(self.entries):
            raise ValueError("basis entries must be sorted lexicographically")
        return self

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def exponent_matrix(self) -> np.ndarray:
        """(len, 2m+2) exponents ordered (alpha, beta, gamma, delta)."""
        return np.array([[*alpha, *beta, gamma, delta] for alpha, beta, gamma, delta in self.entries], dtype=int)

    @property
    def weights(self) -> list[TorusWeight]:
        return [
            TorusWeight(m1=sum(alpha) - sum(beta), m2=gamma - delta)
            for alpha, beta, gamma, delta in self.entries
        ]

    def weight_slices(self) -> dict[tuple[int, int], list[int]]:
        """Basis indices grouped by weight, weights in lexicographic order."""
        slices: dict[tuple[int, int], list[int]] = {}
        for index, weight in enumerate(self.weights):
            slices.setdefault(weight.as_tuple(), []).append(index)
        return dict(sorted(slices.items()))


class QuadratureRule(BaseModel):
    """Torus-symmetric product rule on S^{2m+1} or M_{a,b}.

    Nodes are kept as one (count, 2m+2) array; node(i) wraps a single row.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: int = Field(ge=1)
    surface: Surface
    nodes: np.ndarray
    weights: np.ndarray
    symmetry_order: int = Field(ge=1)
    radial_order: int = Field(ge=1)

    @field_validator("nodes", "weights", mode="before")
    @classmethod
    def _freeze(cls, value):
        return _frozen(value, float)

    @model_validator(mode="after")
    def _check_rule(self):
        if self.nodes.ndim != 2 or self.nodes.shape[1] != 2 * self.m + 2:
            raise ValueError(f"nodes must have shape (count, {2 * self.m + 2})")
        if self.weights.shape != (self.nodes.shape[0],):
            raise ValueError("one weight per node is required")
        if np.any(self.weights <= 0.0):
            raise ValueError("quadrature weights must be positive")
        volume = surface_volume(self.m, self.surface)
        if abs(float(np.sum(self.weights)) - volume) > VOLUME_TOL * max(1.0, volume):
            raise ValueError("quadrature weights do not sum to the surface volume")
        return self

    def __len__(self) -> int:
        return self.nodes.shape[0]

    def node(self, index: int) -> AmbientPoint:
        return AmbientPoint(m=self.m, coords=self.nodes[index], surface=self.surface)


class WeightBlock(BaseModel):
    """Mass and stiffness matrices of one torus-weight slice of the basis."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    weight: TorusWeight
    indices: list[int]
    mass: np.ndarray
    stiffness: np.ndarray
    filtered_rank: int = Field(ge=0)

    @field_validator("mass", "stiffness", mode="before")
    @classmethod
    def _freeze(cls, value):
        return _frozen(value, complex)

    @model_validator(mode="after")
    def _check_block(self):
        size = len(self.indices)
        for name, matrix in (("mass", self.mass), ("stiffness", self.stiffness)):
            if matrix.shape != (size, size):
                raise ValueError(f"{name} matrix must be {size}x{size}")
            scale = max(1.0, float(np.max(np.abs(matrix)))) if size else 1.0
            if size and np.max(np.abs(matrix - matrix.conj().T)) > HERMITIAN_TOL * scale:
                raise ValueError(f"{name} matrix is not hermitian")
        if size:
            lowest = float(np.min(np.linalg.eigvalsh(self.mass)))
            if lowest < -HERMITIAN_TOL * max(1.0, float(np.max(np.abs(self.mass)))):
                raise ValueError("mass matrix is not positive semi-definite")
        if self.filtered_rank > size:
            raise ValueError("filtered rank exceeds the block size")
        return self


class WeightedPolynomial(BaseModel):
    """Polynomial sum_i c_i * basis[i], used as a test function."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    basis: MonomialBasis
    coefficients: np.ndarray

    @field_validator("coefficients", mode="before")
    @classmethod
    def _freeze(cls, value):
        return _frozen(value, complex)

    @model_validator(mode="after")
    def _check_length(self):
        if self.coefficients.shape != (len(self.basis),):
            raise ValueError("one coefficient per basis monomial is required")
        return self

    def pure_weight(self) -> TorusWeight | None:
        """Weight of the polynomial, or None for the zero polynomial.

        Raises:
            MixedWeightError: if monomials of two different weights occur
        """
        basis_weights = self.basis.weights
        weights = {basis_weights[i].as_tuple() for i in np.flatnonzero(self.coefficients)}
        if len(weights) > 1:
            raise MixedWeightError(f"polynomial mixes weights {sorted(weights)}")
        if not weights:
            return None
        m1, m2 = weights.pop()
        return TorusWeight(m1=m1, m2=m2)


class QuadratureMeta(BaseModel):
    orders: list[int]
    K: int
    radial_order: int


class BlockSpectrum(BaseModel):
    weight: tuple[int, int]
    eigenvalues: list[float]
    filtered_rank: int


class WeightGap(BaseModel):
    weight: tuple[int, int]
    max_gap: float


class ComparisonVerdict(BaseModel):
    max_gap: float
    ok: bool
    tol: float
    per_weight: list[WeightGap] = []


class SpectrumReport(BaseModel):
    """Per-weight Galerkin spectra of one metric (plus a verdict when compared)."""

    label: str = ""
    surface: str
    m: int
    N: int
    quadrature: QuadratureMeta
    blocks: list[BlockSpectrum]
    comparison: ComparisonVerdict | None = None
    seed: int | None = None

    @model_validator(mode="after")
    def _check_sorted(self):
        for block in self.blocks:
            if block.eigenvalues != sorted(block.eigenvalues):
                raise ValueError(f"eigenvalues of block {block.weight} are not sorted")
            if len(block.eigenvalues) != block.filtered_rank:
                raise ValueError(f"block {block.weight} has {len(block.eigenvalues)} eigenvalues, rank {block.filtered_rank}")
        return self

    def metadata(self) -> tuple:
        return (self.surface, self.m, self.N, self.quadrature.K, self.quadrature.radial_order)

    def block_map(self) -> dict[tuple[int, int], list[float]]:
        return {tuple(block.weight): block.eigenvalues for block in self.blocks}
