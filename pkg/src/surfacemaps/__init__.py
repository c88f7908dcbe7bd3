"""Triangulated closed orientable surfaces and simplicial-map degrees.

The package is organized around one combinatorial pipeline: build or load
a triangulated surface, certify that it is a closed surface, orient it,
define vertex maps between surfaces, and count signed facet preimages to
read off the topological degree.  On top of that sit the constructions
(polygon quotients and connected-sum towers mapping onto a 7-vertex
torus), exhaustive enumeration of simplicial maps, and degree bounds.
"""

from .surface import (
    FVector,
    InvalidSurfaceError,
    NonOrientableError,
    Orientation,
    TriangulatedSurface,
    ValidityReport,
    Violation,
    ascending,
    connected_components,
    euler_characteristic,
    f_vector,
    genus,
    is_orientable,
    orient,
    require_valid,
    triple_parity,
    validate_closed_surface,
)
from .maps import (
    DegreeInconsistencyError,
    DegreeReport,
    MapDefinitionError,
    NotSimplicialError,
    SignedPreimageCount,
    SimplicialVertexMap,
    compose,
    constant_map,
    degree,
    identity_map,
    is_simplicial,
    require_simplicial,
    reverse_orientation,
    validate_simplicial,
)
from .formats import (
    FormatError,
    degree_report_to_dict,
    dump_surface,
    dumps_json,
    load_map,
    load_surface,
    map_from_dict,
    map_to_dict,
    surface_from_dict,
    surface_to_dict,
    surface_to_off,
)
from .constructions import (
    CertificationError,
    ConstructionRecipe,
    ConstructionResult,
    GluingError,
    VariantError,
    VARIANTS,
    build_polygon,
    build_sum_high,
    build_sum_low,
    connected_sum,
    construct,
    quad_patch,
    recipe_for,
    sigma2_10v,
    sigma2_13v,
    split_triangle_with_edge,
    tetrahedron,
    torus7,
)
from .analysis import (
    DegreeRange,
    EnumerationCaps,
    SearchCapExceeded,
    SpectrumReport,
    VertexBound,
    automorphisms,
    available_backends,
    cycle_notation,
    degree_bound,
    degree_spectrum,
    enumerate_simplicial_maps,
    simplicial_volume,
    vertex_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "FVector",
    "InvalidSurfaceError",
    "NonOrientableError",
    "Orientation",
    "TriangulatedSurface",
    "ValidityReport",
    "Violation",
    "ascending",
    "connected_components",
    "euler_characteristic",
    "f_vector",
    "genus",
    "is_orientable",
    "orient",
    "require_valid",
    "triple_parity",
    "validate_closed_surface",
    "DegreeInconsistencyError",
    "DegreeReport",
    "MapDefinitionError",
    "NotSimplicialError",
    "SignedPreimageCount",
    "SimplicialVertexMap",
    "compose",
    "constant_map",
    "degree",
    "identity_map",
    "is_simplicial",
    "require_simplicial",
    "reverse_orientation",
    "validate_simplicial",
    "FormatError",
    "degree_report_to_dict",
    "dump_surface",
    "dumps_json",
    "load_map",
    "load_surface",
    "map_from_dict",
    "map_to_dict",
    "surface_from_dict",
    "surface_to_dict",
    "surface_to_off",
    "CertificationError",
    "ConstructionRecipe",
    "ConstructionResult",
    "GluingError",
    "VariantError",
    "VARIANTS",
    "build_polygon",
    "build_sum_high",
    "build_sum_low",
    "connected_sum",
    "construct",
    "quad_patch",
    "recipe_for",
    "sigma2_10v",
    "sigma2_13v",
    "split_triangle_with_edge",
    "tetrahedron",
    "torus7",
    "DegreeRange",
    "EnumerationCaps",
    "SearchCapExceeded",
    "SpectrumReport",
    "VertexBound",
    "automorphisms",
    "available_backends",
    "cycle_notation",
    "degree_bound",
    "degree_spectrum",
    "enumerate_simplicial_maps",
    "simplicial_volume",
    "vertex_lower_bound",
]
