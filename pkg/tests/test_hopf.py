"""Test the Hopf projection P and its differential"""

import sys

import numpy as np

from isospec.geometry import hopf_dP, hopf_P, to_complex, to_real


def test_sphere_maps_to_sphere():
    """|P(p)| = |p|^2 / 2."""
    rng = np.random.default_rng(11)
    points = rng.standard_normal((50, 4))
    radii = np.linalg.norm(points, axis=1)
    assert np.allclose(np.linalg.norm(hopf_P(points), axis=1), radii**2 / 2), "P scales quadratically"
    print("✓ Hopf projection maps spheres to spheres", file=sys.stderr)


def test_fibres_are_circles():
    rng = np.random.default_rng(12)
    points = rng.standard_normal((20, 4))
    for angle in (0.3, 1.7, np.pi):
        moved = to_real(np.exp(1j * angle) * to_complex(points))
        assert np.allclose(hopf_P(moved), hopf_P(points), atol=1e-12), "P is constant on U(1) orbits"


def test_differential_matches_difference_quotient():
    rng = np.random.default_rng(13)
    p = rng.standard_normal((10, 4))
    X = rng.standard_normal((10, 4))
    h = 1e-3
    # P is quadratic, so the central quotient is exact up to rounding
    quotient = (hopf_P(p + h * X) - hopf_P(p - h * X)) / (2 * h)
    assert np.allclose(hopf_dP(p, X), quotient, atol=1e-10), "dP disagrees with the difference quotient"


def test_differential_kills_vertical_directions():
    rng = np.random.default_rng(14)
    p = rng.standard_normal((10, 4))
    vertical = to_real(1j * to_complex(p))
    assert np.allclose(hopf_dP(p, vertical), 0.0, atol=1e-13), "dP vanishes on the fibre direction"


if __name__ == "__main__":
    try:
        test_sphere_maps_to_sphere()
        test_fibres_are_circles()
        test_differential_matches_difference_quotient()
        test_differential_kills_vertical_directions()
        print("✓ Test passed")
    except Exception as e:
        print(f"✗ Test failed: {e}", file=sys.stderr)
        sys.exit(1)
