"""Bijections between type-A Fuss-Catalan families: staircase partitions,
Shi tableaux of dominant regions, and m-dissections of a polygon."""
from .bijections import (
    RefinedCountTable,
    omega,
    omega_inverse,
    parabolic_components,
    psi,
    psi_inverse,
    psi_prime,
    refined_count,
    refined_count_table,
)
from .dissections import (
    ColoredRoot,
    Dissection,
    LabeledPolygon,
    alternating_labeling,
    diagonal_to_colored_root,
    diagonals_cross,
    enumerate_dissections,
    fan_dissection,
    initial_points,
    is_m_diagonal,
    negative_roots_contained,
    snake_diagonals,
    snake_dissection,
    standard_labeling,
)
from .exceptions import *  # noqa: F401,F403
from .partitions import (
    StaircasePartition,
    count_partitions,
    count_positive,
    enumerate_partitions,
    max_parts,
    to_lattice_path,
    validate_partition,
)
from .shi import (
    ShiTableau,
    WallProfile,
    check_hook_conditions,
    check_shi_conditions,
    enumerate_regions,
    phi,
    phi_inverse,
    subtableaux,
    wall_profile,
)

__version__ = "0.1.0"
