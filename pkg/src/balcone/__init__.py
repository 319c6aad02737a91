"""Exact intersection numbers and balanced-cone duality for complete
intersections in products of projective spaces."""

from .cones import (
    Cone2D,
    Pairing,
    Ray,
    cone_new,
    det2,
    dual_cone,
    is_subcone,
    ray_normalize,
)
from .errors import (
    ComputationError,
    DegeneratePairingError,
    DegreeMismatchError,
    GeometryError,
    ScenarioError,
    UnknownNameError,
    ValidationError,
)
from .pipeline import (
    GapReport,
    Scenario,
    balanced_cone,
    balanced_image_closure,
    divisor_bound_functional,
    express_in_basis,
    gap_report,
    quintic_conifold_scenario,
)
from .ring import (
    AmbientSpace,
    CohomClass,
    divisor_class,
    integrate,
    linear_combination,
    space_new,
)
from .scenario_io import (
    DEMO_SCENARIO_JSON,
    parse_scenario,
    scenario_to_document,
    serialize_scenario,
)
from .variety import CompleteIntersection, PairingMatrix

__version__ = "0.1.0"

__all__ = [
    "AmbientSpace",
    "CohomClass",
    "CompleteIntersection",
    "Cone2D",
    "ComputationError",
    "DEMO_SCENARIO_JSON",
    "DegeneratePairingError",
    "DegreeMismatchError",
    "GapReport",
    "GeometryError",
    "Pairing",
    "PairingMatrix",
    "Ray",
    "Scenario",
    "ScenarioError",
    "UnknownNameError",
    "ValidationError",
    "balanced_cone",
    "balanced_image_closure",
    "cone_new",
    "det2",
    "divisor_bound_functional",
    "divisor_class",
    "dual_cone",
    "express_in_basis",
    "gap_report",
    "integrate",
    "is_subcone",
    "linear_combination",
    "parse_scenario",
    "quintic_conifold_scenario",
    "ray_normalize",
    "scenario_to_document",
    "serialize_scenario",
    "space_new",
]
