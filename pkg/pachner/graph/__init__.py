"""Excess-height and path-length analyses of the restricted Pachner graph."""

from pachner.graph.bounds import mijatovic_bound, mijatovic_height_bound
from pachner.graph.height import HeightReport, height_bound, height_bound_two_phase
from pachner.graph.length import LengthReport, length_bound
from pachner.graph.level import LevelGraph
from pachner.graph.unionfind import UnionFind

__all__ = [
    "HeightReport",
    "LengthReport",
    "LevelGraph",
    "UnionFind",
    "height_bound",
    "height_bound_two_phase",
    "length_bound",
    "mijatovic_bound",
    "mijatovic_height_bound",
]
