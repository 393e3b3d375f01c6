"""toricnef: exact-arithmetic toolkit for complete simplicial fans.

Validates fans, computes walls and divisor-class data, decides nef-ness of
torus-invariant divisors, computes nef cones, verifies maps of fans, and
ships a catalog of named fans with a full verification suite.
"""

from .divisor import (
    Divisor,
    ample_divisor,
    anticanonical,
    cartier_data,
    has_no_nontrivial_nef,
    is_nef,
    is_nef_via_cartier,
    is_projective,
    is_trivial_class,
    nef_cone,
    nef_system,
    polytope,
    support_min_check,
)
from .fan import (
    Fan,
    FanValidationError,
    Wall,
    fan_from_dict,
    fan_to_dict,
    is_complete,
    is_smooth,
    load_fan,
    picard_rank,
    star_subdivision,
    validate,
    walls,
)
from .fanmap import (
    FanMap,
    fan_map,
    is_fan_map,
    is_refinement,
    pullback,
    weighted_projective_weights,
)
from .lattice import determinant, positively_spans, primitive, smith_normal_form
from .polyhedra import (
    HCone,
    Polyhedron,
    VCone,
    cone_is_trivial_modulo,
    dd_convert,
    strict_feasible,
    vertices,
)

__version__ = "0.1.0"
