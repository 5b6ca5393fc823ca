"""/src/isospec/geometry/metric.py

Tangent frames of S^{2m+1}, M_{a,b} and the ball B^{2m+2}, and the metrics

    g_lambda(X, Y) = g_0(X + lambda(X)*, Y + lambda(Y)*)

in those frames. Everything except the single-point wrappers at the bottom
works on stacks of points with the coordinate axis last.
"""

import logging
from collections.abc import Sequence

import numpy as np

from isospec.errors import DegeneratePointError, NonTangentError

from .forms import form_values
from .models import AdmissibleForm, AmbientPoint, MetricSample, Surface, TangentVector
from .torus import vertical_vectors

logger = logging.getLogger(__name__)

DEGENERATE_TOL = 1e-12
TANGENT_TOL = 1e-12


def normals(coords: np.ndarray, surface: Surface) -> np.ndarray:
    """Unit normals of the surface at each point; shape (..., codim, 2m+2).

    The ball has no normals; its frame is the ambient basis.

    Raises:
        DegeneratePointError: on M_{a,b} when |p| = 0 or |q| = 0
    """
    coords = np.asarray(coords, dtype=float)
    if surface.kind == "ball":
        return np.zeros(coords.shape[:-1] + (0, coords.shape[-1]))
    if surface.kind == "sphere":
        radius = np.linalg.norm(coords, axis=-1, keepdims=True)
        return (coords / radius)[..., None, :]
    p_part = np.zeros_like(coords)
    q_part = np.zeros_like(coords)
    p_part[..., :-2] = coords[..., :-2]
    q_part[..., -2:] = coords[..., -2:]
    p_norm = np.linalg.norm(p_part, axis=-1, keepdims=True)
    q_norm = np.linalg.norm(q_part, axis=-1, keepdims=True)
    if np.any(p_norm <= DEGENERATE_TOL) or np.any(q_norm <= DEGENERATE_TOL):
        raise DegeneratePointError("M_{a,b} frames need |p| > 0 and |q| > 0")
    return np.stack([p_part / p_norm, q_part / q_norm], axis=-2)


def project_tangent(coords: np.ndarray, vectors: np.ndarray, surface: Surface) -> np.ndarray:
    """Orthogonal projection of ambient vectors (..., k, 2m+2) onto the tangent space."""
    n = normals(coords, surface)
    coefficients = vectors @ np.swapaxes(n, -1, -2)
    return vectors - coefficients @ n


def tangent_frames(coords: np.ndarray, surface: Surface) -> np.ndarray:
    """Orthonormal tangent frames; shape (..., d, 2m+2).

    Gram-Schmidt over the projected ambient basis, always taking the
    remaining candidate of largest norm next (first index on ties).
    """
    coords = np.asarray(coords, dtype=float)
    size = coords.shape[-1]
    d = size - surface.codimension
    eye = np.broadcast_to(np.eye(size), coords.shape[:-1] + (size, size))
    candidates = project_tangent(coords, eye, surface).copy()
    frame = np.empty(coords.shape[:-1] + (d, size))
    for k in range(d):
        norms = np.linalg.norm(candidates, axis=-1)
        pivot = np.argmax(norms, axis=-1)[..., None]
        length = np.take_along_axis(norms, pivot, axis=-1)
        if np.any(length <= DEGENERATE_TOL):
            raise DegeneratePointError("tangent candidates are linearly dependent")
        vector = np.take_along_axis(candidates, pivot[..., None], axis=-2)[..., 0, :] / length
        frame[..., k, :] = vector
        overlap = candidates @ vector[..., None]
        candidates = candidates - overlap * vector[..., None, :]
    return frame


def vertical_shifts(form: AdmissibleForm, coords: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """lambda(v)* for each vector; vectors (..., k, 2m+2) at points (..., 2m+2)."""
    coords = np.broadcast_to(np.asarray(coords, dtype=float)[..., None, :], vectors.shape)
    values = form_values(form, coords, vectors)
    return vertical_vectors(coords, values[..., 0], values[..., 1])


def gram_matrices(form: AdmissibleForm, coords: np.ndarray, frames: np.ndarray) -> np.ndarray:
    """Gram matrices of g_lambda in the given frames; shape (..., d, d)."""
    shifted = frames + vertical_shifts(form, coords, frames)
    gram = shifted @ np.swapaxes(shifted, -1, -2)
    return 0.5 * (gram + np.swapaxes(gram, -1, -2))


def inverse_gram_matrices(form: AdmissibleForm, coords: np.ndarray, frames: np.ndarray) -> np.ndarray:
    """Cometric of g_lambda in orthonormal frames.

    In such a frame the gram is (I + L)(I + L)^T with L nilpotent, so the
    inverse is taken through the triangular factor rather than by a generic
    inversion of the gram.
    """
    shifts = vertical_shifts(form, coords, frames)
    L = shifts @ np.swapaxes(frames, -1, -2)
    factor = np.linalg.inv(np.eye(frames.shape[-2]) + L)
    inverse = np.swapaxes(factor, -1, -2) @ factor
    return 0.5 * (inverse + np.swapaxes(inverse, -1, -2))


def _frame_array(frame) -> np.ndarray:
    if isinstance(frame, np.ndarray):
        return np.asarray(frame, dtype=float)
    return np.stack([np.asarray(v.vector if isinstance(v, TangentVector) else v, dtype=float) for v in frame])


def _check_tangent(pt: AmbientPoint, vectors: np.ndarray, surface: Surface) -> None:
    n = normals(pt.coords, surface)
    residual = np.abs(vectors @ n.T)
    scale = TANGENT_TOL * np.maximum(1.0, np.linalg.norm(vectors, axis=-1))[:, None]
    if np.any(residual > scale):
        raise NonTangentError(f"frame vector is not tangent to {surface.label()}")


def _surface_of(pt: AmbientPoint) -> Surface:
    """pt.surface, else the sphere for unit points and the ball for interior ones."""
    if pt.surface is not None:
        return pt.surface
    radius = float(np.linalg.norm(pt.coords))
    return Surface.ball() if radius < 1.0 - TANGENT_TOL else Surface.sphere()


def tangent_frame(pt: AmbientPoint, surface: Surface | None = None) -> list[TangentVector]:
    """Deterministic g_0-orthonormal frame at pt (2m+1 vectors on the sphere, 2m on M_{a,b}, 2m+2 in the ball)."""
    surface = surface or _surface_of(pt)
    frame = tangent_frames(pt.coords, surface)
    return [TangentVector(base=pt, vector=v) for v in frame]


def metric_gram(form: AdmissibleForm, pt: AmbientPoint, frame: Sequence[TangentVector] | np.ndarray) -> MetricSample:
    """Gram matrix of g_lambda at pt in the given frame.

    Raises:
        NonTangentError: if a frame vector is not tangent at pt
    """
    vectors = _frame_array(frame)
    _check_tangent(pt, vectors, _surface_of(pt))
    gram = gram_matrices(form, pt.coords, vectors)
    logger.debug("metric gram at %s: det %.3e", pt.coords, np.linalg.det(gram))
    return MetricSample(base=pt, frame=vectors, gram=gram)
