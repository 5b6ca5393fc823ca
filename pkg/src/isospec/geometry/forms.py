"""/src/isospec/geometry/forms.py

Evaluation of the admissible forms

    type (4): lambda^k(X, U) = |p|^2 <j_k p, X> - <X, ip> <j_k p, ip>
    type (5): lambda^k(X, U) = <c_k P(p) x P(p), P_*p(X)>

optionally multiplied by a bump f(p, q).
"""

import numpy as np

from isospec.errors import DimensionMismatchError

from .bump import bump_values
from .coords import rdot, split, to_complex
from .hopf import hopf_dP, hopf_P
from .models import AdmissibleForm, TangentVector


def _su_values(pair, coords: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    p, _ = split(coords)
    X = to_complex(vectors)[..., :-1]
    if p.shape[-1] != pair.m:
        raise DimensionMismatchError(f"form acts on C^{pair.m}, point lives in C^{p.shape[-1]}")
    norm_sq = rdot(p, p)
    ip = 1j * p
    x_ip = rdot(X, ip)
    values = []
    for J in pair.matrices:
        jp = p @ J.T
        values.append(norm_sq * rdot(jp, X) - x_ip * rdot(jp, ip))
    return np.stack(values, axis=-1)


def _sym_values(pair, coords: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    if coords.shape[-1] != 6:
        raise DimensionMismatchError("forms of type (5) live on C^2 + C")
    P = hopf_P(coords[..., :4])
    dP = hopf_dP(coords[..., :4], vectors[..., :4])
    values = []
    for C in pair.matrices:
        values.append(np.sum(np.cross(P @ C.T, P) * dP, axis=-1))
    return np.stack(values, axis=-1)


def form_values(form: AdmissibleForm, coords: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """(lambda^1, lambda^2) for stacked points and vectors; shape (..., 2)."""
    coords = np.asarray(coords, dtype=float)
    vectors = np.asarray(vectors, dtype=float)
    if form.kind == "su":
        values = _su_values(form.pair, coords, vectors)
    else:
        values = _sym_values(form.pair, coords, vectors)
    if form.bump is not None:
        values = values * bump_values(form.bump, coords)[..., None]
    return values


def form_covectors(form: AdmissibleForm, coords: np.ndarray) -> np.ndarray:
    """Ambient covectors l^k with lambda^k(v) = <l^k, v>; shape (..., 2, 2m+2).

    lambda is linear in v, so the covector is read off on the standard basis.
    """
    coords = np.asarray(coords, dtype=float)
    size = coords.shape[-1]
    basis = np.broadcast_to(np.eye(size), coords.shape[:-1] + (size, size))
    values = form_values(form, coords[..., None, :], basis)
    return np.swapaxes(values, -1, -2)


def eval_form(form: AdmissibleForm, v: TangentVector) -> tuple[float, float]:
    values = form_values(form, v.base.coords, v.vector)
    return float(values[0]), float(values[1])
