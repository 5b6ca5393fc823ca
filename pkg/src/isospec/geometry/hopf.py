"""/src/isospec/geometry/hopf.py"""

import numpy as np


def hopf_P(p: np.ndarray) -> np.ndarray:
    """Hopf projection R^4 -> R^3, extended quadratically off S^3.

    P(a, b, c, d) = ((a^2 + b^2 - c^2 - d^2)/2, ac + bd, ad - bc); maps the
    3-sphere of radius r onto the 2-sphere of radius r^2/2.
    """
    p = np.asarray(p, dtype=float)
    a, b, c, d = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    return np.stack(
        [0.5 * (a * a + b * b - c * c - d * d), a * c + b * d, a * d - b * c],
        axis=-1,
    )


def hopf_dP(p: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Directional derivative of P at p along X (exact, bilinear in p and X)."""
    p = np.asarray(p, dtype=float)
    X = np.asarray(X, dtype=float)
    a, b, c, d = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    da, db, dc, dd = X[..., 0], X[..., 1], X[..., 2], X[..., 3]
    return np.stack(
        [
            a * da + b * db - c * dc - d * dd,
            da * c + a * dc + db * d + b * dd,
            da * d + a * dd - db * c - b * dc,
        ],
        axis=-1,
    )
