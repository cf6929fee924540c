"""Census enumeration and one-vertex 3-sphere search."""

from pachner.census.enumerate import (
    CensusRow,
    CensusSpec,
    census_counts,
    enumerate_closed,
    raw_gluing_count,
)
from pachner.census.spheres import SphereClosure, sphere_closure

__all__ = [
    "CensusRow",
    "CensusSpec",
    "SphereClosure",
    "census_counts",
    "enumerate_closed",
    "raw_gluing_count",
    "sphere_closure",
]
