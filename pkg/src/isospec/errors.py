"""/src/isospec/errors.py"""


class IsospecError(Exception):
    """Base class for every error raised by the library."""


class ConfigError(IsospecError):
    pass


class DimensionMismatchError(IsospecError):
    pass


class NotIsospectralError(IsospecError):
    pass


class NotARotationError(IsospecError):
    pass


class NonTangentError(IsospecError):
    pass


class DegeneratePointError(IsospecError):
    pass


class OffSurfaceError(IsospecError):
    pass


class QuadratureSymmetryError(IsospecError):
    pass


class MetadataMismatchError(IsospecError):
    pass


class MixedWeightError(IsospecError):
    pass


class EmptySupportError(IsospecError):
    pass


class SolverError(IsospecError):
    pass


class WitnessError(IsospecError):
    """No usable conjugation witness for a torus weight."""

    def __init__(self, weight: tuple[int, int], message: str):
        self.weight = weight
        super().__init__(f"weight {weight}: {message}")
