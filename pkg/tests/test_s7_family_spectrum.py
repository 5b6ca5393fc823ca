"""Test block spectra of the continuous family j(t) on S^7"""

import sys

import numpy as np

from isospec.algebra import family_j
from isospec.geometry import AdmissibleForm
from isospec.spectral import compare_spectra, compute_spectrum, exact_symmetry_order, pooled_eigenvalues

N = 1
K = exact_symmetry_order(N, "su")


def test_family_spectra_agree():
    """Nonequivalent j(0), j(0.7) give identical Galerkin spectra in every weight block."""
    report_a = compute_spectrum(AdmissibleForm(pair=family_j(0.0)), N, K, label="j(0)")
    report_b = compute_spectrum(AdmissibleForm(pair=family_j(0.7)), N, K, label="j(0.7)")
    verdict = compare_spectra(report_a, report_b, tol=1e-5)
    assert verdict.ok, f"j(0) and j(0.7) must be isospectral, gap {verdict.max_gap}"
    assert verdict.max_gap < 1e-8, f"Gap should be at rounding level, got {verdict.max_gap}"
    # degree <= 1 functions: constants and the 8 coordinates
    assert len(pooled_eigenvalues(report_a)) == 9
    assert abs(pooled_eigenvalues(report_a)[0]) < 1e-9, "Constants have eigenvalue 0"
    print(f"✓ j(0) vs j(0.7) max gap {verdict.max_gap:.2e}", file=sys.stderr)


def test_family_differs_from_round():
    """The metrics are not round: some degree-1 block moves away from 7."""
    report = compute_spectrum(AdmissibleForm(pair=family_j(0.0)), N, K)
    values = np.array(pooled_eigenvalues(report)[1:])
    assert np.max(np.abs(values - 7.0)) > 1e-6, "g_lambda must change the spectrum of the coordinates"


if __name__ == "__main__":
    try:
        test_family_spectra_agree()
        test_family_differs_from_round()
        print("✓ Test passed")
    except Exception as e:
        print(f"✗ Test failed: {e}", file=sys.stderr)
        sys.exit(1)
