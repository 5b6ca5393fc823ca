"""Test evaluation of the admissible forms lambda = (lambda^1, lambda^2)"""

import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from isospec.algebra import family_j, pair_c
from isospec.errors import DimensionMismatchError
from isospec.geometry import (
    AdmissibleForm,
    AmbientPoint,
    BumpProfile,
    Surface,
    TangentVector,
    bump_values,
    eval_form,
    form_values,
    hopf_dP,
    hopf_P,
    random_sphere_points,
    random_tangent_vectors,
    split,
    to_complex,
    torus_pushforward,
    vertical_field,
)
from isospec.geometry.forms import form_covectors

from helpers import random_skew_pair


def _reference_su(pair, x: np.ndarray, v: np.ndarray) -> list[float]:
    p, _ = split(x)
    X = to_complex(v)[:-1]
    ip = 1j * p
    values = []
    for J in pair.matrices:
        jp = J @ p
        values.append(np.vdot(p, p).real * np.vdot(jp, X).real - np.vdot(X, ip).real * np.vdot(jp, ip).real)
    return values


def _tangent(m: int, rng: np.random.Generator) -> TangentVector:
    x = random_sphere_points(m, 1, rng)[0]
    pt = AmbientPoint(m=m, coords=x, surface=Surface.sphere())
    return TangentVector(base=pt, vector=random_tangent_vectors(x[None, :], rng)[0])


@settings(max_examples=200, derandomize=True, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1), m=st.integers(min_value=2, max_value=4))
def test_su_form_matches_formula(seed, m):
    rng = np.random.default_rng(seed)
    pair = random_skew_pair(m, rng)
    v = _tangent(m, rng)
    values = eval_form(AdmissibleForm(pair=pair), v)
    assert np.allclose(values, _reference_su(pair, v.base.coords, v.vector), atol=1e-12)


def test_sym_form_matches_formula():
    rng = np.random.default_rng(21)
    c, _ = pair_c()
    v = _tangent(2, rng)
    P = hopf_P(v.base.coords[:4])
    dP = hopf_dP(v.base.coords[:4], v.vector[:4])
    expected = [np.dot(np.cross(C @ P, P), dP) for C in c.matrices]
    assert np.allclose(eval_form(AdmissibleForm(pair=c), v), expected, atol=1e-13)
    print("✓ type (5) form evaluation", file=sys.stderr)


@pytest.mark.parametrize("pair", [family_j(0.4), pair_c()[1]])
def test_forms_vanish_on_vertical_vectors(pair):
    rng = np.random.default_rng(22)
    form = AdmissibleForm(pair=pair)
    for z in ((1.0, 0.0), (0.0, 1.0), (0.7, -2.0)):
        v = vertical_field(z, _tangent(form.m, rng).base)
        assert np.allclose(eval_form(form, v), 0.0, atol=1e-13), f"lambda(Z*) != 0 for Z={z}"


@pytest.mark.parametrize("pair", [family_j(1.2), pair_c()[0]])
def test_forms_are_torus_invariant(pair):
    rng = np.random.default_rng(23)
    form = AdmissibleForm(pair=pair)
    v = _tangent(form.m, rng)
    moved = torus_pushforward(0.9, -2.4, v)
    assert np.allclose(eval_form(form, moved), eval_form(form, v), atol=1e-13), "lambda must be torus invariant"


def test_bump_multiplies_values():
    rng = np.random.default_rng(24)
    profile = BumpProfile(center=(0.5, 0.5), radii=(0.4, 0.4), amplitude=2.0)
    points = random_sphere_points(3, 30, rng)
    vectors = random_tangent_vectors(points, rng)
    plain = form_values(AdmissibleForm(pair=family_j(0.3)), points, vectors)
    bumped = form_values(AdmissibleForm(pair=family_j(0.3), bump=profile), points, vectors)
    assert np.allclose(bumped, plain * bump_values(profile, points)[:, None], atol=1e-14)


def test_covectors_reproduce_values():
    rng = np.random.default_rng(25)
    form = AdmissibleForm(pair=pair_c()[0])
    points = random_sphere_points(2, 10, rng)
    vectors = random_tangent_vectors(points, rng)
    covectors = form_covectors(form, points)
    assert covectors.shape == (10, 2, 6)
    assert np.allclose(np.einsum("nkd,nd->nk", covectors, vectors), form_values(form, points, vectors), atol=1e-13)


def test_dimension_mismatch():
    rng = np.random.default_rng(26)
    points = random_sphere_points(2, 3, rng)
    with pytest.raises(DimensionMismatchError):
        form_values(AdmissibleForm(pair=family_j(0.0)), points, points)
    with pytest.raises(DimensionMismatchError):
        points = random_sphere_points(3, 3, rng)
        form_values(AdmissibleForm(pair=pair_c()[0]), points, points)


if __name__ == "__main__":
    try:
        test_su_form_matches_formula()
        test_sym_form_matches_formula()
        for pair in (family_j(0.4), pair_c()[1]):
            test_forms_vanish_on_vertical_vectors(pair)
        for pair in (family_j(1.2), pair_c()[0]):
            test_forms_are_torus_invariant(pair)
        test_bump_multiplies_values()
        test_covectors_reproduce_values()
        test_dimension_mismatch()
        print("✓ Test passed")
    except Exception as e:
        print(f"✗ Test failed: {e}", file=sys.stderr)
        sys.exit(1)
