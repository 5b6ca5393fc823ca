"""Test the isospectrality certificate on pencil grids"""

import math
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from isospec.algebra import (
    SkewMapPair,
    char_poly_at,
    check_isospectral,
    family_j,
    pair_c,
    transform_pair,
    zero_skew_pair,
)
from isospec.errors import DimensionMismatchError

from helpers import random_skew_pair, random_special_unitary


def test_family_j_is_isospectral():
    for t in (0.3, 1.0, math.pi / 2):
        certificate = check_isospectral(family_j(0.0), family_j(t))
        assert certificate.ok, f"j(0) and j({t}) must be isospectral, gap {certificate.max_coeff_gap}"
        assert certificate.max_coeff_gap < 1e-12, f"Gap too large: {certificate.max_coeff_gap}"
    print("✓ j(t) family is isospectral", file=sys.stderr)


def test_pair_c_is_isospectral():
    c, c_prime = pair_c()
    certificate = check_isospectral(c, c_prime)
    assert certificate.ok, f"c and c' must be isospectral, gap {certificate.max_coeff_gap}"
    assert certificate.grid_points == 16, f"Expected a 4x4 grid, got {certificate.grid_points}"
    print("✓ c and c' are isospectral", file=sys.stderr)


def test_scaled_second_map_is_rejected():
    """Doubling J2 changes the x coefficient from s^2 + 2u^2 to s^2 + 8u^2."""
    base = family_j(0.0)
    scaled = SkewMapPair(J1=base.J1, J2=2 * base.J2)
    gap = np.max(np.abs(char_poly_at(base, 0.0, 1.0) - char_poly_at(scaled, 0.0, 1.0)))
    assert abs(gap - 6.0) < 1e-12, f"Expected gap 6 at Z2, got {gap}"
    certificate = check_isospectral(base, scaled)
    assert not certificate.ok, "Scaled pair must not be certified"
    assert certificate.max_coeff_gap > 1.0, f"Gap too small: {certificate.max_coeff_gap}"
    print("✓ non-isospectral pair rejected", file=sys.stderr)


def test_requested_grid_size():
    certificate = check_isospectral(family_j(0.0), family_j(0.5), grid_size=100)
    assert certificate.grid_points == 100, f"Expected 10x10 grid, got {certificate.grid_points}"
    small = check_isospectral(family_j(0.0), family_j(0.5), grid_size=4)
    assert small.grid_points == 16, "Grid never drops below (size+1)^2 points"


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        check_isospectral(family_j(0.0), zero_skew_pair(4))


@settings(max_examples=200, derandomize=True, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1), m=st.integers(min_value=2, max_value=4))
def test_conjugated_pairs_are_isospectral(seed, m):
    """A j A^-1 is isospectral to j for every A in SU(m)."""
    rng = np.random.default_rng(seed)
    pair = random_skew_pair(m, rng)
    moved = transform_pair(pair, random_special_unitary(m, rng))
    certificate = check_isospectral(pair, moved, tol=1e-9)
    assert certificate.ok, f"m={m}: gap {certificate.max_coeff_gap}"


if __name__ == "__main__":
    try:
        test_family_j_is_isospectral()
        test_pair_c_is_isospectral()
        test_scaled_second_map_is_rejected()
        test_requested_grid_size()
        test_dimension_mismatch()
        test_conjugated_pairs_are_isospectral()
        print("✓ Test passed")
    except Exception as e:
        print(f"✗ Test failed: {e}", file=sys.stderr)
        sys.exit(1)
