"""Test the torus-invariant bump f(p, q) = phi(|p|^2, |q|^2)"""

import math
import sys

import numpy as np
import pytest
from pydantic import ValidationError

from isospec.geometry import (
    AmbientPoint,
    BumpProfile,
    Surface,
    bump_eval,
    bump_values,
    random_sphere_points,
    support_contains,
    torus_act,
)

PROFILE = BumpProfile(center=(0.02, 0.98), radii=(0.05, 0.05), amplitude=1.5)


def _point_with(s: float) -> AmbientPoint:
    coords = np.zeros(6)
    coords[0] = math.sqrt(s)
    coords[4] = math.sqrt(1.0 - s)
    return AmbientPoint(m=2, coords=coords, surface=Surface.sphere())


def test_peak_equals_amplitude():
    assert abs(bump_eval(PROFILE, _point_with(0.02)) - 1.5) < 1e-12, "Peak value must equal the amplitude"
    print("✓ bump peak", file=sys.stderr)


def test_exactly_zero_outside_support():
    for s in (0.07, 0.2, 0.5, 1.0):
        assert bump_eval(PROFILE, _point_with(s)) == 0.0, f"f must vanish exactly at s={s}"


def test_profile_shape():
    """exp(1 - 1/(1 - w^2)) in each variable."""
    profile = BumpProfile(center=(0.5, 0.5), radii=(0.2, 0.2))
    value = bump_eval(profile, _point_with(0.6))
    w = 0.1 / 0.2
    assert abs(value - math.exp(1.0 - 1.0 / (1.0 - w * w)) ** 2) < 1e-12, f"Unexpected value {value}"


def test_torus_invariance():
    rng = np.random.default_rng(51)
    profile = BumpProfile(center=(0.4, 0.6), radii=(0.3, 0.3))
    for x in random_sphere_points(2, 20, rng):
        pt = AmbientPoint(m=2, coords=x, surface=Surface.sphere())
        assert abs(bump_eval(profile, torus_act(1.1, -0.4, pt)) - bump_eval(profile, pt)) < 1e-12


def test_torus_invariance_near_sharp_peak():
    """Rotated coordinates are rounded, so |p|^2 moves by ulps; f must not move by more than 1e-12."""
    rng = np.random.default_rng(53)
    s = rng.uniform(0.0, 0.08, 500)
    points = random_sphere_points(2, 500, rng)
    points[:, :-2] *= (np.sqrt(s) / np.linalg.norm(points[:, :-2], axis=1))[:, None]
    points[:, -2:] *= (np.sqrt(1.0 - s) / np.linalg.norm(points[:, -2:], axis=1))[:, None]
    angles = rng.uniform(-math.pi, math.pi, (500, 2))
    worst = 0.0
    for x, (a, b) in zip(points, angles):
        pt = AmbientPoint(m=2, coords=x, surface=Surface.sphere())
        worst = max(worst, abs(bump_eval(PROFILE, torus_act(a, b, pt)) - bump_eval(PROFILE, pt)))
    assert worst <= 1e-12 * PROFILE.amplitude, f"Torus action moved f by {worst:.2e}"
    print(f"✓ bump torus invariance within {worst:.1e}", file=sys.stderr)


def test_support_is_open_rectangle():
    inside = support_contains(PROFILE, np.array([0.02, 0.069, 0.08, 0.0]), np.array([0.98, 0.98, 0.98, 1.04]))
    assert inside.tolist() == [True, True, False, False], f"Got {inside.tolist()}"
    points = random_sphere_points(2, 1000, np.random.default_rng(52))
    s = np.sum(points[:, :-2] ** 2, axis=1)
    u = np.sum(points[:, -2:] ** 2, axis=1)
    values = bump_values(PROFILE, points)
    assert np.all(values[~support_contains(PROFILE, s, u)] == 0.0), "Bump must vanish off its support"


def test_meets_sphere():
    assert PROFILE.meets_sphere()
    assert not BumpProfile(center=(0.9, 0.9), radii=(0.05, 0.05)).meets_sphere(), "s + u = 1 misses this box"


def test_profile_validation():
    with pytest.raises(ValidationError):
        BumpProfile(center=(1.2, 0.0), radii=(0.1, 0.1))
    with pytest.raises(ValidationError):
        BumpProfile(center=(0.5, 0.5), radii=(0.0, 0.1))
    with pytest.raises(ValidationError):
        BumpProfile(center=(0.5, 0.5), radii=(0.1, 0.1), amplitude=0.0)


if __name__ == "__main__":
    try:
        test_peak_equals_amplitude()
        test_exactly_zero_outside_support()
        test_profile_shape()
        test_torus_invariance()
        test_torus_invariance_near_sharp_peak()
        test_support_is_open_rectangle()
        test_meets_sphere()
        test_profile_validation()
        print("✓ Test passed")
    except Exception as e:
        print(f"✗ Test failed: {e}", file=sys.stderr)
        sys.exit(1)
