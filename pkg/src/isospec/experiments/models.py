"""/src/isospec/experiments/models.py"""

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from isospec import config
from isospec.geometry.models import BumpProfile, Surface
from isospec.spectral.models import ComparisonVerdict, SpectrumReport

Command = Literal["invariants", "spectrum", "verify", "bump"]
Example = Literal["s5-pair", "s7-family", "custom"]
OutputFormat = Literal["json", "csv", "both"]

INVARIANT_T_VALUES = [0.0, 0.3, math.pi / 2]
FAMILY_T_VALUES = [0.0, 0.7]


def parse_surface(value: str) -> Surface:
    """'sphere' or 'product:<a>,<b>'."""
    value = value.strip()
    if value == "sphere":
        return Surface.sphere()
    if value.startswith("product:"):
        a, _, b = value.removeprefix("product:").partition(",")
        return Surface.product(float(a), float(b))
    raise ValueError(f"unknown surface {value!r}")


class ExperimentConfig(BaseModel):
    """Merged settings for one command: defaults < config file < CLI flags."""

    model_config = ConfigDict(frozen=True)

    command: Command
    example: Example = "s5-pair"
    pair_a: str | None = None  # pair token, custom example only
    pair_b: str | None = None
    t_values: list[float] | None = None  # s7-family parameters
    degree: int | None = Field(default=None, ge=1)  # basis degree N
    quad_orders: list[int] | None = None  # circle orders K, coarse to fine
    tol: float | None = Field(default=None, gt=0.0)  # spectrum comparison
    verify_tol: float = Field(default=1e-9, gt=0.0)  # verify_star / Rayleigh residuals
    eps: float | None = Field(default=None, gt=0.0)  # bump volume bound, default 1% of vol
    weight_bound: int = Field(default=5, ge=0)
    samples: int = Field(default=1000, ge=1)  # tangent samples per weight
    test_polynomials: int = Field(default=20, ge=1)
    points: int = Field(default=200, ge=1)
    mc_samples: int = Field(default=1_000_000, ge=1)
    bump_center: tuple[float, float] = (0.02, 0.98)
    bump_radii: tuple[float, float] = (0.05, 0.05)
    bump_amplitude: float = 1.0
    surface: str = "sphere"
    seed: int = config.ISOSPEC_SEED
    out: str = config.ISOSPEC_OUT_DIR
    format: OutputFormat = "both"

    @field_validator("quad_orders")
    @classmethod
    def _check_orders(cls, value):
        if value is not None and (not value or any(k < 1 for k in value)):
            raise ValueError("quadrature orders must be positive integers")
        return value

    @field_validator("surface")
    @classmethod
    def _check_surface(cls, value):
        parse_surface(value)
        return value

    @model_validator(mode="before")
    @classmethod
    def _fill_defaults(cls, data):
        if not isinstance(data, dict):
            return data
        data = {key: value for key, value in data.items() if value is not None}
        example = data.get("example", "s5-pair")
        family = example == "s7-family"
        if "degree" not in data:
            data["degree"] = 2 if family else 3
        if "t_values" not in data and family:
            data["t_values"] = INVARIANT_T_VALUES if data.get("command") == "invariants" else FAMILY_T_VALUES
        if "tol" not in data:
            data["tol"] = 1e-5 if family else 1e-6
        return data

    @model_validator(mode="after")
    def _check_example(self):
        if self.example == "custom" and not self.pair_a:
            raise ValueError("the custom example needs pair_a")
        if self.example == "s7-family" and not self.t_values:
            raise ValueError("the s7-family example needs t_values")
        return self

    @property
    def label(self) -> str:
        return self.example

    def target_surface(self) -> Surface:
        return parse_surface(self.surface)

    def bump_profile(self) -> BumpProfile:
        return BumpProfile(center=self.bump_center, radii=self.bump_radii, amplitude=self.bump_amplitude)


class InvariantsRow(BaseModel):
    label: str
    invariant: float
    commutant_dimension: int
    generic: bool
    expected_generic: bool | None = None


class IsospectralCheck(BaseModel):
    label_a: str
    label_b: str
    ok: bool
    max_coeff_gap: float
    separated: bool


class InvariantsReport(BaseModel):
    example: str
    seed: int
    rows: list[InvariantsRow]
    checks: list[IsospectralCheck]
    isospectral_ok: bool
    separation_present: bool
    genericity_ok: bool
    ok: bool


class PairComparison(BaseModel):
    K: int
    label_a: str
    label_b: str
    verdict: ComparisonVerdict


class RoundCheck(BaseModel):
    expected: list[tuple[float, int]]
    max_deviation: float
    ok: bool


class SpectrumExperimentReport(BaseModel):
    example: str
    seed: int
    N: int
    quad_orders: list[int]
    reports: list[SpectrumReport]
    comparisons: list[PairComparison]
    monotone: bool
    round_check: RoundCheck | None = None
    ok: bool


class WeightResidual(BaseModel):
    weight: tuple[int, int]
    residual: float


class PairResiduals(BaseModel):
    label_a: str
    label_b: str
    star: list[WeightResidual]
    rayleigh: list[WeightResidual]
    max_star: float
    max_rayleigh: float


class VerifyReport(BaseModel):
    example: str
    seed: int
    surface: str
    weight_bound: int
    samples: int
    pairs: list[PairResiduals]
    max_residual: float
    tol: float
    ok: bool


class BumpReport(BaseModel):
    example: str
    seed: int
    profile: BumpProfile
    surface_volume: float
    mc_samples: int
    support_volume: float
    standard_error: float
    eps: float
    volume_ok: bool  # estimate + 3 standard errors < eps
    off_support_points: int
    off_support_deviation: float  # must be exactly 0
    star_max_residual: float
    tol: float
    ok: bool
