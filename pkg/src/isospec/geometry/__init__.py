"""/src/isospec/geometry/__init__.py"""

from .models import AdmissibleForm, AmbientPoint, BumpProfile, MetricSample, Surface, TangentVector
from .bump import bump_eval, bump_values, support_contains
from .coords import rdot, split, to_complex, to_real
from .curvature import connection_form_0, curvature_dlambda, curvature_dlambda_fd
from .forms import eval_form, form_values
from .hopf import hopf_dP, hopf_P
from .metric import gram_matrices, inverse_gram_matrices, metric_gram, normals, tangent_frame, tangent_frames
from .sampling import random_ball_points, random_product_points, random_sphere_points, random_surface_points, random_tangent_vectors
from .torus import apply_isometry, isometry_matrix, torus_act, torus_pushforward, vertical_field

__all__ = [
    "AdmissibleForm",
    "AmbientPoint",
    "BumpProfile",
    "MetricSample",
    "Surface",
    "TangentVector",
    "apply_isometry",
    "bump_eval",
    "bump_values",
    "connection_form_0",
    "curvature_dlambda",
    "curvature_dlambda_fd",
    "eval_form",
    "form_values",
    "gram_matrices",
    "hopf_P",
    "hopf_dP",
    "inverse_gram_matrices",
    "isometry_matrix",
    "metric_gram",
    "normals",
    "random_ball_points",
    "random_product_points",
    "random_sphere_points",
    "random_surface_points",
    "random_tangent_vectors",
    "rdot",
    "split",
    "support_contains",
    "tangent_frame",
    "tangent_frames",
    "to_complex",
    "to_real",
    "torus_act",
    "torus_pushforward",
    "vertical_field",
]
