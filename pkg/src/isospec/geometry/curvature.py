"""/src/isospec/geometry/curvature.py

Closed formulas for d(lambda) on M_{a,b}, a finite-difference exterior
derivative used to check them, and the connection form of g_0.
"""

import numpy as np

from isospec.errors import DegeneratePointError, OffSurfaceError

from .coords import rdot, split, to_complex
from .forms import form_values
from .hopf import hopf_dP, hopf_P
from .models import AdmissibleForm, AmbientPoint, TangentVector

SURFACE_TOL = 1e-10
FD_STEP = 1e-4


def _radii(pt: AmbientPoint) -> tuple[float, float]:
    p, q = split(pt.coords)
    a, b = float(np.linalg.norm(p)), abs(complex(q))
    if a * b <= SURFACE_TOL:
        raise DegeneratePointError("M_{a,b} needs a > 0 and b > 0")
    return a, b


def _check_on_product(pt: AmbientPoint, vectors: list[np.ndarray]) -> tuple[float, float]:
    a, b = _radii(pt)
    if pt.surface is not None and pt.surface.kind == "product":
        if abs(a - pt.surface.a) > SURFACE_TOL or abs(b - pt.surface.b) > SURFACE_TOL:
            raise OffSurfaceError(f"point is not on {pt.surface.label()}")
    x = pt.coords
    for v in vectors:
        scale = SURFACE_TOL * max(1.0, float(np.linalg.norm(v)))
        if abs(float(x[:-2] @ v[:-2])) > scale or abs(float(x[-2:] @ v[-2:])) > scale:
            raise OffSurfaceError(f"vector is not tangent to M_{{{a:g},{b:g}}}")
    return a, b


def _vector(v) -> np.ndarray:
    return np.asarray(v.vector if isinstance(v, TangentVector) else v, dtype=float)


def curvature_dlambda(form: AdmissibleForm, pt: AmbientPoint, X, Y) -> tuple[float, float]:
    """d(lambda^k)(X, Y) for X, Y tangent to M_{a,b} at pt.

    Type (4): 2a^2 <j_k X^h, Y^h> - 2 <j_k p, ip> <iX, Y>, with X^h the part
    of X orthogonal to ip.
    Type (5): 3a^3 <c_k x x pi_*X, pi_*Y> with x = P(p)/a and pi_* = P_*/a,
    i.e. the quotient form pulled back to M_{a,b}.

    Raises:
        OffSurfaceError: if pt or the vectors leave M_{a,b}
        DegeneratePointError: if a * b = 0
    """
    if form.bump is not None:
        raise ValueError("closed curvature formulas are for forms without a bump")
    X, Y = _vector(X), _vector(Y)
    a, _ = _check_on_product(pt, [X, Y])
    if form.kind == "su":
        p, _ = split(pt.coords)
        Xc, Yc = to_complex(X)[:-1], to_complex(Y)[:-1]
        ip = 1j * p
        Xh = Xc - rdot(Xc, ip) * ip / a**2
        Yh = Yc - rdot(Yc, ip) * ip / a**2
        values = [
            2 * a**2 * rdot(J @ Xh, Yh) - 2 * rdot(J @ p, ip) * rdot(1j * Xc, Yc)
            for J in form.pair.matrices
        ]
    else:
        x = hopf_P(pt.coords[:4]) / a
        dX = hopf_dP(pt.coords[:4], X[:4]) / a
        dY = hopf_dP(pt.coords[:4], Y[:4]) / a
        values = [3 * a**3 * float(np.cross(C @ x, dX) @ dY) for C in form.pair.matrices]
    return float(values[0]), float(values[1])


def _directional(form: AdmissibleForm, x: np.ndarray, direction: np.ndarray, argument: np.ndarray, h: float) -> np.ndarray:
    points = np.stack([x + h * direction, x - h * direction])
    values = form_values(form, points, np.broadcast_to(argument, points.shape))
    return (values[0] - values[1]) / (2 * h)


def curvature_dlambda_fd(form: AdmissibleForm, pt: AmbientPoint, X, Y, step: float = FD_STEP) -> tuple[float, float]:
    """X(lambda(Y)) - Y(lambda(X)) by central differences plus one Richardson step.

    X and Y are extended as constant ambient fields, so [X, Y] = 0; the
    restriction of the ambient d(lambda) to tangent vectors is d of the
    restricted form.
    """
    X, Y = _vector(X), _vector(Y)
    x = np.asarray(pt.coords, dtype=float)

    def exterior(h: float) -> np.ndarray:
        return _directional(form, x, X, Y, h) - _directional(form, x, Y, X, h)

    coarse, fine = exterior(step), exterior(step / 2)
    value = (4 * fine - coarse) / 3
    return float(value[0]), float(value[1])


def connection_form_0(pt: AmbientPoint, v) -> tuple[float, float]:
    """(omega_0^1, omega_0^2) = (<X, ip>/a^2, <U, iq>/b^2).

    Raises:
        DegeneratePointError: if a * b = 0
    """
    a, b = _radii(pt)
    p, q = split(pt.coords)
    X, U = split(_vector(v))
    return float(rdot(X, 1j * p)) / a**2, float(np.real(np.conj(U) * 1j * q)) / b**2
