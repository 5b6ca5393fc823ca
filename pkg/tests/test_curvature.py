"""Test the closed curvature formulas for d(lambda) against finite differences"""

import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from isospec.algebra import family_j, pair_c
from isospec.errors import DegeneratePointError, OffSurfaceError
from isospec.geometry import (
    AdmissibleForm,
    AmbientPoint,
    BumpProfile,
    Surface,
    connection_form_0,
    curvature_dlambda,
    curvature_dlambda_fd,
    random_product_points,
    random_tangent_vectors,
    vertical_field,
)

from helpers import random_skew_pair, random_sym_pair

SURFACES = [(0.6, 0.8), (0.5, 1.3), (1.2, 0.4)]


def _setup(m: int, a: float, b: float, rng: np.random.Generator):
    surface = Surface.product(a, b)
    x = random_product_points(m, a, b, 1, rng)
    X, Y = random_tangent_vectors(np.repeat(x, 2, axis=0), rng, surface)
    return AmbientPoint(m=m, coords=x[0], surface=surface), X, Y


def _close(closed, fd) -> bool:
    scale = max(1.0, float(np.max(np.abs(closed))))
    return bool(np.max(np.abs(np.array(closed) - np.array(fd))) <= 1e-7 * scale)


@pytest.mark.parametrize("a,b", SURFACES)
def test_type4_family_matches_fd(a, b):
    rng = np.random.default_rng(41)
    form = AdmissibleForm(pair=family_j(0.8))
    pt, X, Y = _setup(3, a, b, rng)
    closed = curvature_dlambda(form, pt, X, Y)
    fd = curvature_dlambda_fd(form, pt, X, Y)
    assert _close(closed, fd), f"M_{{{a},{b}}}: closed {closed}, fd {fd}"


@pytest.mark.parametrize("a,b", SURFACES)
def test_type5_pair_matches_fd(a, b):
    rng = np.random.default_rng(42)
    for pair in pair_c():
        form = AdmissibleForm(pair=pair)
        pt, X, Y = _setup(2, a, b, rng)
        closed = curvature_dlambda(form, pt, X, Y)
        fd = curvature_dlambda_fd(form, pt, X, Y)
        assert _close(closed, fd), f"M_{{{a},{b}}}: closed {closed}, fd {fd}"
    print(f"✓ type (5) curvature on M_{{{a},{b}}}", file=sys.stderr)


@settings(max_examples=200, derandomize=True, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1), m=st.integers(min_value=2, max_value=4))
def test_random_type4_matches_fd(seed, m):
    rng = np.random.default_rng(seed)
    form = AdmissibleForm(pair=random_skew_pair(m, rng))
    pt, X, Y = _setup(m, 0.6, 0.8, rng)
    closed = curvature_dlambda(form, pt, X, Y)
    assert _close(closed, curvature_dlambda_fd(form, pt, X, Y)), f"m={m}"

@settings(max_examples=200, derandomize=True, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1), surface=st.sampled_from(SURFACES))
def test_random_type5_matches_fd(seed, surface):
    rng = np.random.default_rng(seed)
    form = AdmissibleForm(pair=random_sym_pair(rng))
    pt, X, Y = _setup(2, *surface, rng)
    closed = curvature_dlambda(form, pt, X, Y)
    assert _close(closed, curvature_dlambda_fd(form, pt, X, Y)), f"M_{{{surface[0]},{surface[1]}}}"



def test_antisymmetry():
    rng = np.random.default_rng(43)
    form = AdmissibleForm(pair=family_j(0.3))
    pt, X, Y = _setup(3, 0.6, 0.8, rng)
    forward = curvature_dlambda(form, pt, X, Y)
    backward = curvature_dlambda(form, pt, Y, X)
    assert np.allclose(forward, -np.array(backward), atol=1e-13), "d(lambda) is a 2-form"
    assert np.allclose(curvature_dlambda(form, pt, X, X), 0.0, atol=1e-13)


def test_errors():
    rng = np.random.default_rng(44)
    pt, X, Y = _setup(2, 0.6, 0.8, rng)
    form = AdmissibleForm(pair=pair_c()[0])
    with pytest.raises(OffSurfaceError):
        curvature_dlambda(form, pt, pt.coords, Y)
    bumped = form.with_bump(BumpProfile(center=(0.36, 0.64), radii=(0.1, 0.1)))
    with pytest.raises(ValueError):
        curvature_dlambda(bumped, pt, X, Y)
    coords = np.zeros(6)
    coords[0] = 1.0
    with pytest.raises(DegeneratePointError):
        curvature_dlambda(form, AmbientPoint(m=2, coords=coords), X, Y)


def test_connection_form_on_vertical_fields():
    """omega_0(Z*) = Z."""
    rng = np.random.default_rng(45)
    pt, X, _ = _setup(3, 0.5, 1.3, rng)
    for z in ((1.0, 0.0), (0.0, 1.0), (-0.4, 2.5)):
        assert np.allclose(connection_form_0(pt, vertical_field(z, pt)), z, atol=1e-13)
    print("✓ connection form reproduces Z", file=sys.stderr)


if __name__ == "__main__":
    try:
        for a, b in SURFACES:
            test_type4_family_matches_fd(a, b)
            test_type5_pair_matches_fd(a, b)
        test_random_type4_matches_fd()
        test_random_type5_matches_fd()
        test_antisymmetry()
        test_errors()
        test_connection_form_on_vertical_fields()
        print("✓ Test passed")
    except Exception as e:
        print(f"✗ Test failed: {e}", file=sys.stderr)
        sys.exit(1)
