"""Exact, approximate and parameterized solvers for Graph Burning."""
from ._kernels import BACKEND
from .approx import approx_burn, separated_set_probe
from .components import solve_by_components
from .exact import (
    CapacityError,
    SetCoverInstance,
    burning_number_exact,
    decide_burning_exact,
    decide_burning_via_set_cover,
    encode_burning_as_set_cover,
    set_cover_exact,
)
from .graph import Graph, GraphError, ball, bfs_distances, connected_components, verify_schedule
from .reductions import setcover_to_burning
from .split import solve_split

__all__ = [
    "BACKEND",
    "CapacityError",
    "Graph",
    "GraphError",
    "SetCoverInstance",
    "approx_burn",
    "ball",
    "bfs_distances",
    "burning_number_exact",
    "connected_components",
    "decide_burning_exact",
    "decide_burning_via_set_cover",
    "encode_burning_as_set_cover",
    "separated_set_probe",
    "set_cover_exact",
    "setcover_to_burning",
    "solve_by_components",
    "solve_split",
    "verify_schedule",
]
