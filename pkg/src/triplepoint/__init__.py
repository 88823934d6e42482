"""Exact-arithmetic colorful triple partitions: partition 3k colored
lines in convex position (or 3k colored circle points) into k colorful
triples whose triangles share a common point."""

__version__ = "0.1.0"

from .circle import (
    AnnotatedPartition,
    CircleInstance,
    CircleSolution,
    annotate,
    find_uncovered_cut,
    gamma_point_count,
    is_consecutive,
    min_unbounding_partition,
    partition_all_unbounding,
    repartition_nine,
    solve_circle,
)
from .coloring import Coloring, TriplePartition, enumerate_colorful_partitions, transversal_partition
from .geom import (
    Arc,
    CirclePoint,
    CutPosition,
    Line2,
    Rat,
    circular_order,
    classify_triple,
    cross,
    in_clockwise_arc,
)
from .lines import (
    CellWitness,
    LineInstance,
    LineSolution,
    dualize,
    find_witness_cell,
    pull_back,
    solve_lines,
    validate_general_position,
)
from .oracle import oracle_solve
from .space3d import (
    Plane3,
    SignVector,
    bounded_simplex_sign_vector,
    builtin_tangent_planes,
    verify_convex_position_3d,
    verify_table,
)
from .counterexamples import (
    octahedron_cover_search,
    verify_figure1,
    verify_nonconvex_example,
)
from .instancefile import format_instance, generate, parse_instance
from .render import render_svg

__all__ = [
    "AnnotatedPartition",
    "Arc",
    "CellWitness",
    "CircleInstance",
    "CirclePoint",
    "CircleSolution",
    "Coloring",
    "CutPosition",
    "Line2",
    "LineInstance",
    "LineSolution",
    "Plane3",
    "Rat",
    "SignVector",
    "TriplePartition",
    "annotate",
    "bounded_simplex_sign_vector",
    "builtin_tangent_planes",
    "circular_order",
    "classify_triple",
    "cross",
    "dualize",
    "enumerate_colorful_partitions",
    "find_uncovered_cut",
    "find_witness_cell",
    "format_instance",
    "gamma_point_count",
    "generate",
    "in_clockwise_arc",
    "is_consecutive",
    "min_unbounding_partition",
    "octahedron_cover_search",
    "oracle_solve",
    "parse_instance",
    "partition_all_unbounding",
    "pull_back",
    "render_svg",
    "repartition_nine",
    "solve_circle",
    "solve_lines",
    "transversal_partition",
    "validate_general_position",
    "verify_convex_position_3d",
    "verify_figure1",
    "verify_nonconvex_example",
    "verify_table",
]
