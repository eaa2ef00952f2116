"""Constructive colourings, each re-verified before it is returned."""

from .blocks import (
    chord_cycle_assignment,
    color_bridgeless,
    color_cycle,
    color_cycle_chord,
    color_general,
    color_tree,
    compose_cut_edge,
    cut_edge_pieces,
    extend_pendants,
    extend_two_attachments,
    strong_color_block,
)
from .common import ColoredCore, PendantSet, StrongColoring
from .dense import (
    BipartiteSpanning,
    color_bipartite_strong,
    color_dense_three,
    color_dense_two,
    extract_bipartite_spanning,
    strong_two_coloring,
)
from .hamiltonian import color_dirac_pc2, color_ore_pc2, ore_edge_bound

__all__ = [
    "BipartiteSpanning",
    "ColoredCore",
    "PendantSet",
    "StrongColoring",
    "chord_cycle_assignment",
    "color_bipartite_strong",
    "color_bridgeless",
    "color_cycle",
    "color_cycle_chord",
    "color_dense_three",
    "color_dense_two",
    "color_dirac_pc2",
    "color_general",
    "color_ore_pc2",
    "color_tree",
    "compose_cut_edge",
    "cut_edge_pieces",
    "extend_pendants",
    "extend_two_attachments",
    "extract_bipartite_spanning",
    "ore_edge_bound",
    "strong_color_block",
    "strong_two_coloring",
]
