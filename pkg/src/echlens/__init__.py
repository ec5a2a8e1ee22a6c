"""Exact ECH capacities of concave toric domains in the singular toric
orbifolds M_n with lens-space boundary L(n,1)."""

from .capacities import (
    CapacitySequence,
    ObstructionReport,
    OrbitSetDescriptor,
    ball_sequence,
    capacities_blowup,
    capacities_via_oracle,
    capacities_via_weights,
    ellipsoid_orbit_index,
    ellipsoid_sequence,
    index_bijectivity_check,
    obstruction_report,
    orbit_set_index,
    packing_closed_form,
    singular_ball_capacity,
    singular_ball_closed_form,
    spectrum_from_orbit_indices,
    union_sequence,
)
from .checks import CheckResult, random_concave_domain, run_check
from .domains import (
    ConcaveDomain,
    RotationNumbers,
    boundary_height,
    contains_point,
    domain_area,
    max_blowup_delta,
    omega_length_blowup,
    omega_length_edge,
    omega_length_path,
    parse_domain_file,
    rotation_numbers,
    scale_domain,
    validate_domain,
)
from .errors import EchLensError
from .geometry import cross, format_rational, in_cone, parse_rational
from .paths import (
    ConcaveGenerator,
    IntegralPath,
    coround_corner,
    displacement,
    empty_path,
    enumerate_paths,
    enumerate_paths_up_to,
    generator_index,
    homology_class,
    is_concave_path,
    lattice_count,
    make_path,
    parse_path_text,
    path_from_vertices,
    path_to_text,
)
from .weights import (
    StandardConcaveDomain,
    WeightExpansion,
    singular_weight_expansion,
    split_domain,
    split_standard,
    standard_weight_expansion,
    validate_standard,
)

__version__ = "0.1.0"
