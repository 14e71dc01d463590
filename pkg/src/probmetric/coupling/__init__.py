"""
Coupling module — exact optimization over couplings and gluing constructions.
"""

from .gluing import glue, glue_chain
from .transport import (
    TransportProblem,
    TransportSolution,
    bottleneck,
    bottleneck_with_witness,
    mass_above_profile,
    min_mass_above,
    transport_lp,
)
from .vertices import MAX_VERTEX_POINTS, enumerate_vertices, random_vertex

__all__ = [
    "TransportProblem",
    "TransportSolution",
    "transport_lp",
    "min_mass_above",
    "mass_above_profile",
    "bottleneck",
    "bottleneck_with_witness",
    "glue",
    "glue_chain",
    "enumerate_vertices",
    "random_vertex",
    "MAX_VERTEX_POINTS",
]
