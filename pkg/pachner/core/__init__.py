"""Triangulation data model, skeleton, validity checks and homology."""

from pachner.core.homology import HomologyProfile, homology_h1
from pachner.core.perm import Perm4
from pachner.core.skeleton import Skeleton, is_closed_3manifold, skeleton
from pachner.core.triangulation import (
    Triangulation,
    build_triangulation,
    canonical_sphere,
    format_gluing_table,
    layered_sphere,
    parse_gluing_table,
    relabel,
)

__all__ = [
    "HomologyProfile",
    "Perm4",
    "Skeleton",
    "Triangulation",
    "build_triangulation",
    "canonical_sphere",
    "format_gluing_table",
    "homology_h1",
    "is_closed_3manifold",
    "layered_sphere",
    "parse_gluing_table",
    "relabel",
    "skeleton",
]
