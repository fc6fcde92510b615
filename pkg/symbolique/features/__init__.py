"""Computations on matroid ideals."""

from symbolique.features.bench import run_benchmark
from symbolique.features.circuit_graph import (
    CircuitGraph,
    circuit_graph,
    is_2_locally_connected,
    is_q_locally_star_connected,
)
from symbolique.features.invariants import (
    InvariantReport,
    a_r,
    alpha_symbolic,
    analyze,
    max_sdefect_report,
    mgrade,
    noether_number,
    paving_equivalences,
    resurgence_bounds,
    sdefect_formula,
    uniformity_threshold,
    waldschmidt,
)
from symbolique.features.matroid_ideals import (
    DetectionReport,
    IdealWithOrigin,
    cover_ideal,
    detect_matroid,
    flats_correspondence,
    sf_symbolic_lcm,
    sf_symbolic_skeleton,
    stanley_reisner,
)
from symbolique.features.oracle import (
    noether_number_bruteforce,
    sdefect_direct,
    symbolic_power_bruteforce,
    symbolic_power_raw,
)
from symbolique.features.sides import Side
from symbolique.features.symbolic_engine import (
    SymbolicType,
    TowerDecomposition,
    max_symbolic_degree,
    symbolic_membership,
    symbolic_power,
    symbolic_type_of,
)

__all__ = [
    "CircuitGraph",
    "DetectionReport",
    "IdealWithOrigin",
    "InvariantReport",
    "Side",
    "SymbolicType",
    "TowerDecomposition",
    "a_r",
    "alpha_symbolic",
    "analyze",
    "circuit_graph",
    "cover_ideal",
    "detect_matroid",
    "flats_correspondence",
    "is_2_locally_connected",
    "is_q_locally_star_connected",
    "max_sdefect_report",
    "max_symbolic_degree",
    "mgrade",
    "noether_number",
    "noether_number_bruteforce",
    "paving_equivalences",
    "resurgence_bounds",
    "run_benchmark",
    "sdefect_direct",
    "sdefect_formula",
    "sf_symbolic_lcm",
    "sf_symbolic_skeleton",
    "stanley_reisner",
    "symbolic_membership",
    "symbolic_power",
    "symbolic_power_bruteforce",
    "symbolic_power_raw",
    "symbolic_type_of",
    "uniformity_threshold",
    "waldschmidt",
]
