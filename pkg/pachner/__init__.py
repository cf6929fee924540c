"""Pachner - 3-manifold triangulations and the Pachner graph.

Triangulations, Pachner moves, isomorphism signatures, isomorph-free census
enumeration and the excess-height / path-length analyses of the restricted
Pachner graph of the 3-sphere.
"""

__version__ = "0.1.0"

# Bumped whenever the isomorphism signature byte layout changes.
FORMAT_VERSION = "1"
