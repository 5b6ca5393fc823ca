"""/src/isospec/geometry/sampling.py"""

import numpy as np

from .metric import project_tangent
from .models import Surface


def random_sphere_points(m: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform points of S^{2m+1}; shape (count, 2m+2)."""
    points = rng.standard_normal((count, 2 * m + 2))
    return points / np.linalg.norm(points, axis=-1, keepdims=True)


def random_product_points(m: int, a: float, b: float, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform points of M_{a,b} = S^{2m-1}_a x S^1_b."""
    points = rng.standard_normal((count, 2 * m + 2))
    points[:, :-2] *= a / np.linalg.norm(points[:, :-2], axis=-1, keepdims=True)
    points[:, -2:] *= b / np.linalg.norm(points[:, -2:], axis=-1, keepdims=True)
    return points


def random_ball_points(m: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform points of the closed unit ball B^{2m+2}."""
    radii = rng.random((count, 1)) ** (1.0 / (2 * m + 2))
    return radii * random_sphere_points(m, count, rng)


def random_surface_points(m: int, surface: Surface, count: int, rng: np.random.Generator) -> np.ndarray:
    if surface.kind == "sphere":
        return random_sphere_points(m, count, rng)
    if surface.kind == "ball":
        return random_ball_points(m, count, rng)
    return random_product_points(m, surface.a, surface.b, count, rng)


def random_tangent_vectors(points: np.ndarray, rng: np.random.Generator, surface: Surface | None = None) -> np.ndarray:
    """Gaussian tangent vectors at each point (projected ambient normals)."""
    surface = surface or Surface.sphere()
    points = np.asarray(points, dtype=float)
    vectors = rng.standard_normal(points.shape)
    return project_tangent(points, vectors[..., None, :], surface)[..., 0, :]
