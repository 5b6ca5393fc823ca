"""Test the torus-symmetric product quadrature rules"""

import math
import sys

import numpy as np
import pytest

from isospec.geometry import Surface, split
from isospec.geometry.coords import to_complex
from isospec.spectral import build_quadrature, exact_symmetry_order, orbit_representatives, radial_order, surface_volume


def _integrate(quad, function) -> complex:
    p, q = split(quad.nodes)
    return complex(np.sum(quad.weights * function(p, q)))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_sphere_volume_and_size(m):
    quad = build_quadrature(m, Surface.sphere(), (5, 3))
    assert len(quad) == 5 ** (m + 1) * 3**m, f"Unexpected node count {len(quad)}"
    assert abs(np.sum(quad.weights) - 2 * math.pi ** (m + 1) / math.factorial(m)) < 1e-10
    assert np.allclose(np.linalg.norm(quad.nodes, axis=1), 1.0, atol=1e-14), "Nodes must lie on the sphere"


def test_sphere_moments():
    """Exact moments of the unit sphere in C^3."""
    quad = build_quadrature(2, Surface.sphere(), (7, 4))
    volume = math.pi**3
    assert abs(_integrate(quad, lambda p, q: np.abs(p[:, 0]) ** 2) - volume / 3) < 1e-12
    assert abs(_integrate(quad, lambda p, q: np.abs(q) ** 4) - volume / 6) < 1e-12
    assert abs(_integrate(quad, lambda p, q: np.abs(p[:, 0] * p[:, 1]) ** 2) - volume / 12) < 1e-12
    print("✓ sphere moments", file=sys.stderr)


def test_mixed_weights_cancel():
    quad = build_quadrature(2, Surface.sphere(), (7, 4))
    for function in (
        lambda p, q: p[:, 0] * np.conj(q),
        lambda p, q: p[:, 0] ** 2 * np.conj(p[:, 1]) ** 2,
        lambda p, q: q**3 * np.conj(p[:, 1]),
    ):
        assert abs(_integrate(quad, function)) < 1e-12, "Nonzero-weight monomials integrate to 0"

def test_p1_against_q_vanishes():
    quad = build_quadrature(2, Surface.sphere(), (7, 4))
    value = _integrate(quad, lambda p, q: p[:, 0] * np.conj(q))
    assert abs(value) < 1e-14, f"p1 conj(q) must integrate to 0, got {abs(value):.1e}"


@pytest.mark.parametrize("surface", [Surface.sphere(), Surface.product(0.6, 1.3)])
def test_orbit_representatives(surface):
    K = 7
    quad = build_quadrature(2, surface, (K, 4))
    nodes, weights = orbit_representatives(quad)
    assert len(weights) * K * K == len(quad), f"{len(weights)} representatives for {len(quad)} nodes"
    assert abs(np.sum(weights) - surface_volume(2, surface)) < 1e-10
    z = to_complex(nodes)
    assert np.all(z[:, 1].imag == 0.0) and np.all(z[:, 2].imag == 0.0), "Representatives have phase 0"
    # torus-invariant integrand
    full = _integrate(quad, lambda p, q: np.abs(p[:, 0]) ** 2 * np.abs(q) ** 2 + np.abs(p[:, 0] * p[:, 1]) ** 2)
    p, q = split(nodes)
    reduced = np.sum(weights * (np.abs(p[:, 0]) ** 2 * np.abs(q) ** 2 + np.abs(p[:, 0] * p[:, 1]) ** 2))
    assert abs(reduced - full.real) < 1e-12, f"Reduced sum {reduced} differs from {full.real}"
    print(f"✓ {len(weights)} representatives on {surface.label()}", file=sys.stderr)



def test_product_rule():
    a, b = 0.6, 1.3
    surface = Surface.product(a, b)
    quad = build_quadrature(2, surface, (6, 3))
    assert len(quad) == 6**3 * 3, f"Unexpected node count {len(quad)}"
    p, q = split(quad.nodes)
    assert np.allclose(np.linalg.norm(p, axis=1), a) and np.allclose(np.abs(q), b)
    assert abs(np.sum(quad.weights) - surface_volume(2, surface)) < 1e-10
    assert abs(surface_volume(2, surface) - 2 * math.pi**2 * a**3 * 2 * math.pi * b) < 1e-12
    # |p1|^2 averages to a^2 / 2 over S^3_a
    assert abs(_integrate(quad, lambda p, q: np.abs(p[:, 0]) ** 2) - surface_volume(2, surface) * a**2 / 2) < 1e-10


def test_orders():
    assert exact_symmetry_order(3, "sym") == 19
    assert exact_symmetry_order(2, "su") == 13
    assert exact_symmetry_order(3, "zero") == 7
    assert radial_order(3, 2) == 6 and radial_order(2, 3) == 6
    with pytest.raises(ValueError):
        exact_symmetry_order(3, "other")


def test_invalid_orders():
    with pytest.raises(ValueError):
        build_quadrature(2, Surface.sphere(), (0, 3))
    with pytest.raises(ValueError):
        build_quadrature(2, Surface.product(1.0, 0.0), (5, 3))


if __name__ == "__main__":
    try:
        for m in (1, 2, 3):
            test_sphere_volume_and_size(m)
        test_sphere_moments()
        test_mixed_weights_cancel()
        test_p1_against_q_vanishes()
        test_orbit_representatives(Surface.sphere())
        test_orbit_representatives(Surface.product(0.6, 1.3))
        test_product_rule()
        test_orders()
        test_invalid_orders()
        print("✓ Test passed")
    except Exception as e:
        print(f"✗ Test failed: {e}", file=sys.stderr)
        sys.exit(1)
