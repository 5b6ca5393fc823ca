"""/src/isospec/spectral/witnesses.py"""

import logging

import numpy as np

from isospec.algebra import conjugation_witness, dual_vector, pencil, su2_lift
from isospec.algebra.models import ConjugationWitness, MapPair, TorusWeight
from isospec.errors import DimensionMismatchError, IsospecError, WitnessError

logger = logging.getLogger(__name__)

WITNESS_TOL = 1e-8


class ConjugationWitnessProvider:
    """Supplies A_Z in SU(m) with j'_Z = A_Z j_Z A_Z^-1 for Z dual to a weight.

    For pairs c, c' the rotation E_Z with c'_Z = E_Z c_Z E_Z^-1 is lifted
    to SU(2), so the returned matrix always acts on the p-factor C^m.
    Witnesses are cached per weight.
    """

    def __init__(self, pair_a: MapPair, pair_b: MapPair):
        if pair_a.kind != pair_b.kind or pair_a.size != pair_b.size:
            raise DimensionMismatchError("witnesses need two pairs of the same kind and size")
        self.pair_a = pair_a
        self.pair_b = pair_b
        self._cache: dict[tuple[int, int], ConjugationWitness] = {}

    @property
    def m(self) -> int:
        return self.pair_a.size if self.pair_a.kind == "su" else 2

    def identity(self) -> np.ndarray:
        return np.eye(self.m, dtype=complex)

    def witness(self, mu: TorusWeight) -> ConjugationWitness:
        """Witness for the weight mu (identity for mu = 0).

        Raises:
            WitnessError: if j_Z and j'_Z are not conjugate, or the witness
                residual exceeds 1e-8
        """
        key = mu.as_tuple()
        if key in self._cache:
            return self._cache[key]
        if key == (0, 0):
            found = ConjugationWitness(A=self.identity(), residual=0.0)
        else:
            found = self._find(mu)
        self._cache[key] = found
        return found

    def _find(self, mu: TorusWeight) -> ConjugationWitness:
        s, u = dual_vector(mu)
        X, X_prime = pencil(self.pair_a, s, u), pencil(self.pair_b, s, u)
        try:
            found = conjugation_witness(X, X_prime, kind=self.pair_a.kind)
        except IsospecError as exc:
            raise WitnessError(mu.as_tuple(), str(exc)) from exc
        if found.residual > WITNESS_TOL:
            raise WitnessError(mu.as_tuple(), f"residual {found.residual:.3e} exceeds {WITNESS_TOL}")
        if self.pair_a.kind == "sym":
            try:
                lifted = su2_lift(found.A)
            except IsospecError as exc:
                raise WitnessError(mu.as_tuple(), str(exc)) from exc
            found = ConjugationWitness(A=lifted, residual=found.residual)
        logger.debug("witness for weight %s: residual %.3e", mu.as_tuple(), found.residual)
        return found
