"""/src/isospec/algebra/models.py"""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

MatrixKind = Literal["su", "sym"]

ALGEBRA_TOL = 1e-12
GROUP_TOL = 1e-10


def _frozen_array(value, dtype) -> np.ndarray:
    array = np.array(value, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


class SkewMapPair(BaseModel):
    """Linear map j: R^2 -> su(m), stored as its values J1, J2 on Z1, Z2."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    J1: np.ndarray
    J2: np.ndarray

    @field_validator("J1", "J2", mode="before")
    @classmethod
    def _as_complex(cls, value):
        return _frozen_array(value, complex)

    @model_validator(mode="after")
    def _check_su(self):
        if self.J1.ndim != 2 or self.J1.shape[0] != self.J1.shape[1]:
            raise ValueError("J1 must be a square matrix")
        if self.J1.shape != self.J2.shape:
            raise ValueError("J1 and J2 must have the same shape")
        if self.J1.shape[0] < 2:
            raise ValueError("m must be at least 2")
        for name, matrix in (("J1", self.J1), ("J2", self.J2)):
            if np.max(np.abs(matrix.conj().T + matrix)) > ALGEBRA_TOL:
                raise ValueError(f"{name} is not skew-hermitian")
            if abs(np.trace(matrix)) > ALGEBRA_TOL:
                raise ValueError(f"{name} is not traceless")
        return self

    @property
    def m(self) -> int:
        return self.J1.shape[0]

    @property
    def size(self) -> int:
        return self.m

    @property
    def kind(self) -> MatrixKind:
        return "su"

    @property
    def matrices(self) -> tuple[np.ndarray, np.ndarray]:
        return self.J1, self.J2


class SymMapPair(BaseModel):
    """Linear map c: R^2 -> Sym_0(R^3), stored as C1 = c(Z1), C2 = c(Z2)."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    C1: np.ndarray
    C2: np.ndarray

    @field_validator("C1", "C2", mode="before")
    @classmethod
    def _as_real(cls, value):
        array = np.asarray(value)
        if np.iscomplexobj(array):
            if np.max(np.abs(array.imag), initial=0.0) > ALGEBRA_TOL:
                raise ValueError("symmetric maps must be real")
            array = array.real
        return _frozen_array(array, float)

    @model_validator(mode="after")
    def _check_sym0(self):
        for name, matrix in (("C1", self.C1), ("C2", self.C2)):
            if matrix.shape != (3, 3):
                raise ValueError(f"{name} must be 3x3")
            if np.max(np.abs(matrix - matrix.T)) > ALGEBRA_TOL:
                raise ValueError(f"{name} is not symmetric")
            if abs(np.trace(matrix)) > ALGEBRA_TOL:
                raise ValueError(f"{name} is not traceless")
        return self

    @property
    def size(self) -> int:
        return 3

    @property
    def kind(self) -> MatrixKind:
        return "sym"

    @property
    def matrices(self) -> tuple[np.ndarray, np.ndarray]:
        return self.C1, self.C2


MapPair = SkewMapPair | SymMapPair


class TorusWeight(BaseModel):
    """Weight mu in the dual lattice, in the basis dual to {Z1, Z2}."""

    model_config = ConfigDict(frozen=True)

    m1: int
    m2: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.m1, self.m2)


class ConjugationWitness(BaseModel):
    """Special unitary (or special orthogonal) A with A X A^-1 = X'."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    A: np.ndarray
    residual: float = Field(ge=0.0)

    @field_validator("A", mode="before")
    @classmethod
    def _freeze(cls, value):
        array = np.asarray(value)
        return _frozen_array(array, complex if np.iscomplexobj(array) else float)

    @model_validator(mode="after")
    def _check_group(self):
        n = self.A.shape[0]
        if np.max(np.abs(self.A.conj().T @ self.A - np.eye(n))) > GROUP_TOL:
            raise ValueError("witness is not unitary")
        if abs(np.linalg.det(self.A) - 1.0) > GROUP_TOL:
            raise ValueError("witness does not have determinant 1")
        return self


class SignSymmetry(BaseModel):
    """Element of the group of four sign changes of (Z1, Z2)."""

    model_config = ConfigDict(frozen=True)

    eps1: Literal[1, -1] = 1
    eps2: Literal[1, -1] = 1


class IsospectralCertificate(BaseModel):
    ok: bool
    max_coeff_gap: float
    grid_points: int


class NonequivalenceCertificate(BaseModel):
    separated: bool
    invariant_a: float
    invariant_b: float
