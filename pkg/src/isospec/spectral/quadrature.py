"""/src/isospec/spectral/quadrature.py

Torus-symmetric product rules. The unit sphere of C^n is parametrized as

    z = (sqrt(s) * sigma, sqrt(1 - s) * e^{i phi}),  sigma in S^{2n-3}, s in [0, 1],

with dvol = s^{n-2}/2 ds dsigma dphi. Gauss-Legendre nodes in s and uniform
K-point circles in every angle make the rule exact for polynomials whose
degree in each angle is below K once the radial order is high enough.
"""

import logging
import math

import numpy as np
from numpy.polynomial.legendre import leggauss

from isospec.geometry.coords import to_complex, to_real
from isospec.geometry.models import AdmissibleForm, Surface

from .models import QuadratureRule

logger = logging.getLogger(__name__)


def exact_symmetry_order(N: int, kind: str) -> int:
    """Circle order K for which every block integrand is integrated exactly.

    The g_lambda stiffness integrand is a polynomial in the coordinates of
    degree at most 2N+12 (forms of type (5)) or 2N+8 (type (4)); the round
    metric needs only 2N.
    """
    if kind == "sym":
        return 2 * N + 13
    if kind == "su":
        return 2 * N + 9
    if kind == "zero":
        return 2 * N + 1
    raise ValueError(f"unknown form kind {kind!r}")


def form_order_kind(form: AdmissibleForm) -> str:
    return "zero" if form.is_zero() else form.kind


def radial_order(N: int, m: int) -> int:
    """Gauss-Legendre points in each radial variable s."""
    return math.ceil((N + m + 6) / 2)


def _circle(K: int) -> tuple[np.ndarray, np.ndarray]:
    angles = 2 * np.pi * np.arange(K) / K
    return np.exp(1j * angles), np.full(K, 2 * np.pi / K)


def _radial(n: int, count: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = leggauss(count)
    s = 0.5 * (x + 1.0)
    return s, 0.5 * w * s ** (n - 2) / 2


def sphere_rule(n: int, K: int, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes (complex, shape (size, n)) and weights of the rule on the unit sphere of C^n."""
    circle, circle_weights = _circle(K)
    if n == 1:
        return circle[:, None], circle_weights
    inner, inner_weights = sphere_rule(n - 1, K, count)
    s, s_weights = _radial(n, count)
    head = np.sqrt(s)[:, None, None, None] * inner[None, :, None, :]
    tail = np.sqrt(1.0 - s)[:, None, None, None] * circle[None, None, :, None]
    shape = (len(s), len(inner), K)
    nodes = np.concatenate([np.broadcast_to(head, shape + (n - 1,)), np.broadcast_to(tail, shape + (1,))], axis=-1)
    weights = s_weights[:, None, None] * inner_weights[None, :, None] * circle_weights[None, None, :]
    return nodes.reshape(-1, n), weights.reshape(-1)


def build_quadrature(m: int, surface: Surface, orders: tuple[int, int]) -> QuadratureRule:
    """Product rule on S^{2m+1} or M_{a,b}.

    Parameters:
        m: p lives in C^m
        surface: Surface.sphere() or Surface.product(a, b)
        orders: (K, radial order); K points on every circle

    Returns:
        QuadratureRule with K^{m+1} * radial^m nodes on the sphere and
        K^{m+1} * radial^{m-1} nodes on M_{a,b}
    """
    K, count = orders
    if K < 1 or count < 1:
        raise ValueError(f"quadrature orders must be positive, got {orders}")
    if surface.kind == "ball":
        raise ValueError("ball metrics are not discretized; use the sphere or M_{a,b}")
    if surface.kind == "sphere":
        z, weights = sphere_rule(m + 1, K, count)
    else:
        if surface.a <= 0.0 or surface.b <= 0.0:
            raise ValueError("M_{a,b} quadrature needs a > 0 and b > 0")
        sigma, sigma_weights = sphere_rule(m, K, count)
        circle, circle_weights = _circle(K)
        p = surface.a * sigma[:, None, :]
        q = surface.b * circle[None, :, None]
        shape = (len(sigma), K)
        z = np.concatenate([np.broadcast_to(p, shape + (m,)), np.broadcast_to(q, shape + (1,))], axis=-1).reshape(-1, m + 1)
        scale = surface.a ** (2 * m - 1) * surface.b
        weights = (scale * sigma_weights[:, None] * circle_weights[None, :]).reshape(-1)
    logger.debug("quadrature on %s: K=%d radial=%d nodes=%d", surface.label(), K, count, len(weights))
    return QuadratureRule(
        m=m,
        surface=surface,
        nodes=to_real(z),
        weights=weights,
        symmetry_order=K,
        radial_order=count,
    )


def orbit_representatives(quad: QuadratureRule) -> tuple[np.ndarray, np.ndarray]:
    """One node per orbit of the discrete torus Z_K x Z_K acting on the rule.

    Every node of a product rule is (e^{2 pi i j/K} p, e^{2 pi i k/K} q) applied
    to exactly one node whose last p-coordinate and q both have phase 0, and
    all K^2 nodes of an orbit carry the same weight. For torus-invariant
    integrands (every same-weight block entry) summing the representatives
    with weights times K^2 gives the full rule's sum.

    Returns:
        (coords, weights) of the representatives
    """
    K = quad.symmetry_order
    z = to_complex(quad.nodes)
    m = quad.m
    phase_free = (z[:, m - 1].imag == 0.0) & (z[:, m - 1].real > 0.0) & (z[:, m].imag == 0.0) & (z[:, m].real > 0.0)
    if np.count_nonzero(phase_free) * K * K != len(quad):
        logger.warning("rule is not a K x K torus product; using all %d nodes", len(quad))
        return quad.nodes, quad.weights
    return quad.nodes[phase_free], quad.weights[phase_free] * (K * K)
