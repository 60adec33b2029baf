"""Exact secant/tangent composition on cubic surfaces and related experiments."""

from .geometry import (
    CubicForm,
    Field,
    Hyperplane3,
    Line2,
    ProjPoint,
    RATIONALS,
    eval_form,
    gradient,
    hyperplane3,
    line2,
    line_through,
    meet,
    normalize,
    polar_coeffs,
)
from .surface import (
    CubicSurface,
    SurfacePoint,
    height,
    on_tangent_section,
    secant_compose,
    surface_point,
    translate,
)
from .enumeration import (
    PointRegistry,
    brute_force_oracle,
    enumerate_points,
    load_registry,
    save_registry,
)
from .decompose import (
    CompositionTable,
    DecompositionReport,
    Scheme,
    build_report,
    build_table,
    generators,
    render_scheme,
    strong_decompositions,
    weak_closure,
)
from .planecubic import PlaneCubic, cubic_compose, curve_points, group_add
from .splitplane import (
    BlowupModel,
    check_general_position,
    cubic_system_basis,
    embed,
    modified_compose,
    plane_closure,
    quaternary_star,
    recover_cubic_equation,
    twisted_cubic_samples,
    verify_claim1,
)

__version__ = "0.1.0"
