"""/src/isospec/geometry/bump.py

Torus-invariant cutoff f(p, q) = phi(|p|^2, |q|^2) built from a product of
standard mollifiers.
"""

import numpy as np

from .models import AmbientPoint, BumpProfile


def _mollifier(w: np.ndarray) -> np.ndarray:
    # exp(1 - 1/(1 - w^2)) on |w| < 1, peak 1 at w = 0, exactly 0 outside
    inside = np.abs(w) < 1.0
    safe = np.where(inside, w, 0.0)
    return np.where(inside, np.exp(1.0 - 1.0 / (1.0 - safe**2)), 0.0)


def profile_value(profile: BumpProfile, s, u) -> np.ndarray:
    """phi(s, u) for arrays of squared norms s = |p|^2, u = |q|^2."""
    s = np.asarray(s, dtype=float)
    u = np.asarray(u, dtype=float)
    (s0, u0), (r1, r2) = profile.center, profile.radii
    return profile.amplitude * _mollifier((s - s0) / r1) * _mollifier((u - u0) / r2)


def support_contains(profile: BumpProfile, s, u) -> np.ndarray:
    (s0, u0), (r1, r2) = profile.center, profile.radii
    return (np.abs(np.asarray(s) - s0) < r1) & (np.abs(np.asarray(u) - u0) < r2)


def bump_values(profile: BumpProfile, coords: np.ndarray) -> np.ndarray:
    coords = np.asarray(coords, dtype=float)
    s = np.sum(coords[..., :-2] ** 2, axis=-1)
    u = np.sum(coords[..., -2:] ** 2, axis=-1)
    return profile_value(profile, s, u)


def bump_eval(profile: BumpProfile, pt: AmbientPoint) -> float:
    """f(p, q) = phi(|p|^2, |q|^2)."""
    return float(bump_values(profile, pt.coords))
