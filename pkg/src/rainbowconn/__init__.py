"""Rainbow connection numbers: witness graphs, colorings, verifiers, exact solver, lower-bound audit."""
from .audit import AuditTrace, EarlyRefutation, audit_lower_bound, pigeonhole_margins, separated_pair
from .coloring import EdgeColoring, rc_coloring, restrict_palette_check, src_coloring, used_colors
from .graph import (
    DistanceTable,
    Graph,
    bfs_distances,
    build_complete,
    build_cycle,
    build_path,
    build_star,
    diameter,
    geodesic_dag,
)
from .solver import SolveResult, bounds, canonical_colorings, rc_exact, src_exact
from .verify import (
    VerificationReport,
    exists_rainbow_geodesic,
    exists_rainbow_path,
    is_rainbow_connected,
    is_strong_rainbow_connected,
)
from .witness import WitnessGraph, WitnessParams, build_small_witness, build_witness

__version__ = "0.1.0"
