"""/src/isospec/geometry/models.py"""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from isospec.algebra.models import SkewMapPair, SymMapPair

POINT_TOL = 1e-12
GRAM_TOL = 1e-12
DET_TOL = 1e-10


def _frozen(value) -> np.ndarray:
    array = np.array(value, dtype=float, copy=True)
    array.setflags(write=False)
    return array


class Surface(BaseModel):
    """Where points live: the unit sphere S^{2m+1}, a torus-orbit product M_{a,b},
    or the closed unit ball B^{2m+2} (codimension 0, the whole ambient frame).
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["sphere", "product", "ball"] = "sphere"
    a: float = Field(default=0.0, ge=0.0)
    b: float = Field(default=0.0, ge=0.0)

    @classmethod
    def sphere(cls) -> "Surface":
        return cls(kind="sphere")

    @classmethod
    def product(cls, a: float, b: float) -> "Surface":
        return cls(kind="product", a=a, b=b)

    @classmethod
    def ball(cls) -> "Surface":
        return cls(kind="ball")

    @property
    def codimension(self) -> int:
        return {"ball": 0, "sphere": 1, "product": 2}[self.kind]

    def label(self) -> str:
        if self.kind == "product":
            return f"product:{self.a:g},{self.b:g}"
        return self.kind


class AmbientPoint(BaseModel):
    """Point of R^{2m+2} = C^m + C, coordinates ordered (x1, y1, ..., x_{m+1}, y_{m+1})."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: int = Field(ge=1)
    coords: np.ndarray
    surface: Surface | None = None

    @field_validator("coords", mode="before")
    @classmethod
    def _freeze(cls, value):
        return _frozen(value)

    @model_validator(mode="after")
    def _check_surface(self):
        if self.coords.shape != (2 * self.m + 2,):
            raise ValueError(f"expected {2 * self.m + 2} coordinates, got {self.coords.shape}")
        if self.surface is None:
            return self
        p_norm = float(np.linalg.norm(self.coords[:-2]))
        q_norm = float(np.linalg.norm(self.coords[-2:]))
        if self.surface.kind == "ball":
            if p_norm**2 + q_norm**2 > 1.0 + POINT_TOL:
                raise ValueError("point is outside the unit ball")
        elif self.surface.kind == "sphere":
            if abs(p_norm**2 + q_norm**2 - 1.0) > POINT_TOL:
                raise ValueError("point is not on the unit sphere")
        elif abs(p_norm - self.surface.a) > POINT_TOL or abs(q_norm - self.surface.b) > POINT_TOL:
            raise ValueError(f"point is not on M_{{{self.surface.a},{self.surface.b}}}")
        return self

    @property
    def p(self) -> np.ndarray:
        return self.coords[:-2:2] + 1j * self.coords[1:-2:2]

    @property
    def q(self) -> complex:
        return complex(self.coords[-2], self.coords[-1])


class TangentVector(BaseModel):
    """Vector (X, U) in T_p R^{2m} + T_q R^2 attached to a base point."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    base: AmbientPoint
    vector: np.ndarray

    @field_validator("vector", mode="before")
    @classmethod
    def _freeze(cls, value):
        return _frozen(value)

    @model_validator(mode="after")
    def _check_tangent(self):
        if self.vector.shape != self.base.coords.shape:
            raise ValueError("vector and base point dimensions differ")
        surface = self.base.surface
        if surface is None or surface.kind == "ball":
            return self
        scale = POINT_TOL * max(1.0, float(np.linalg.norm(self.vector)))
        x, v = self.base.coords, self.vector
        if surface.kind == "sphere":
            if abs(float(x @ v)) > scale:
                raise ValueError("vector is not tangent to the sphere")
        elif abs(float(x[:-2] @ v[:-2])) > scale or abs(float(x[-2:] @ v[-2:])) > scale:
            raise ValueError("vector is not tangent to M_{a,b}")
        return self


class BumpProfile(BaseModel):
    """Smooth phi on [0,1]^2 supported in center +- radii, peak value = amplitude."""

    model_config = ConfigDict(frozen=True)

    center: tuple[float, float]
    radii: tuple[float, float]
    amplitude: float = 1.0

    @model_validator(mode="after")
    def _check_profile(self):
        if not all(0.0 <= c <= 1.0 for c in self.center):
            raise ValueError("bump center must lie in [0,1]^2")
        if not all(r > 0.0 for r in self.radii):
            raise ValueError("bump radii must be positive")
        if self.amplitude == 0.0:
            raise ValueError("bump amplitude must be nonzero")
        return self

    def meets_sphere(self) -> bool:
        """True when the open support meets the segment {(s, 1-s)} of sphere values."""
        (s0, u0), (r1, r2) = self.center, self.radii
        lo_s, hi_s = max(s0 - r1, 0.0), min(s0 + r1, 1.0)
        # on the segment u = 1 - s, so s must also satisfy |1 - s - u0| < r2
        lo_s, hi_s = max(lo_s, 1.0 - u0 - r2), min(hi_s, 1.0 - u0 + r2)
        return lo_s < hi_s


class AdmissibleForm(BaseModel):
    """h-valued 1-form of type (4) (SkewMapPair) or type (5) (SymMapPair)."""

    model_config = ConfigDict(frozen=True)

    pair: SkewMapPair | SymMapPair
    bump: BumpProfile | None = None

    @property
    def kind(self) -> str:
        return self.pair.kind

    @property
    def m(self) -> int:
        return self.pair.m if self.pair.kind == "su" else 2

    def with_bump(self, bump: BumpProfile | None) -> "AdmissibleForm":
        return AdmissibleForm(pair=self.pair, bump=bump)

    def is_zero(self) -> bool:
        return all(not np.any(matrix) for matrix in self.pair.matrices)


class MetricSample(BaseModel):
    """Gram matrix of g_lambda in a tangent frame at one point."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    base: AmbientPoint
    frame: np.ndarray
    gram: np.ndarray

    @field_validator("frame", "gram", mode="before")
    @classmethod
    def _freeze(cls, value):
        return _frozen(value)

    @model_validator(mode="after")
    def _check_gram(self):
        if np.max(np.abs(self.gram - self.gram.T)) > GRAM_TOL * max(1.0, float(np.max(np.abs(self.gram)))):
            raise ValueError("gram matrix is not symmetric")
        if np.min(np.linalg.eigvalsh(self.gram)) <= 0.0:
            raise ValueError("gram matrix is not positive definite")
        reference = np.linalg.det(self.frame @ self.frame.T)
        if abs(np.linalg.det(self.gram) - reference) > DET_TOL * max(1.0, abs(reference)):
            raise ValueError("g_lambda does not preserve the volume element")
        return self

    @property
    def dimension(self) -> int:
        return self.frame.shape[0]
