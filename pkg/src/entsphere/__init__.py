"""Sphere-model description of two entangled spin-1/2 systems."""

from .bipartite import (
    BipartiteState,
    ConstraintMap,
    SchmidtForm,
    apply_F12,
    apply_F21,
    compose_constraints,
    constraint_maps,
    density_first,
    density_second,
    entanglement_parameter,
    rebase,
    schmidt_decompose,
    schmidt_state,
    state_from_schmidt,
)
from .errors import (
    DomainError,
    EntSphereError,
    InvalidBasis,
    InvalidDensity,
    InvalidSchmidtForm,
    InvalidState,
    NonHermitianInput,
    ParseError,
    ZeroProbabilityBranch,
)
from .measurement import (
    CollapseOutcome,
    NonCollapseResult,
    collapse_pair,
    constraint_image_norm_sq,
    luder_pair,
    map_sphere_grid,
    orthogonality_defect,
    partner_polar_cosine,
    sample_collapse,
)
from .sphere import (
    Direction,
    RayState,
    SphericalPoint,
    born_probabilities,
    density_from_point,
    little_sphere_locus,
    luder_single,
    point_from_density,
    project_onto_direction,
    ray_from_angles,
)

__version__ = "0.1.0"

__all__ = [
    "apply_F12",
    "apply_F21",
    "BipartiteState",
    "born_probabilities",
    "collapse_pair",
    "CollapseOutcome",
    "compose_constraints",
    "constraint_image_norm_sq",
    "constraint_maps",
    "ConstraintMap",
    "density_first",
    "density_from_point",
    "density_second",
    "Direction",
    "DomainError",
    "entanglement_parameter",
    "EntSphereError",
    "InvalidBasis",
    "InvalidDensity",
    "InvalidSchmidtForm",
    "InvalidState",
    "little_sphere_locus",
    "luder_pair",
    "luder_single",
    "map_sphere_grid",
    "NonCollapseResult",
    "NonHermitianInput",
    "orthogonality_defect",
    "ParseError",
    "partner_polar_cosine",
    "point_from_density",
    "project_onto_direction",
    "ray_from_angles",
    "RayState",
    "rebase",
    "sample_collapse",
    "schmidt_decompose",
    "schmidt_state",
    "SchmidtForm",
    "SphericalPoint",
    "state_from_schmidt",
    "ZeroProbabilityBranch",
]
