"""Semi-regular (triple crossing) drawings of graphs."""

from .graph import PartitionSpec, Graph, build_complete_multipartite, petersen_graph
from .drawing import PlanarizedDrawing, validate, perturb, face_report
from .oracle import tcr, known_cr
from .search import search, tcr_bounded

__all__ = [
    "PartitionSpec", "Graph", "build_complete_multipartite", "petersen_graph",
    "PlanarizedDrawing", "validate", "perturb", "face_report",
    "tcr", "known_cr", "search", "tcr_bounded",
]
