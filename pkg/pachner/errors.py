"""Exception hierarchy shared by every pachner module."""


class PachnerError(Exception):
    """Base class for all domain errors raised by pachner."""


class TriangulationError(PachnerError, ValueError):
    """A gluing table does not describe a valid closed triangulation."""


class InvolutionViolation(TriangulationError):
    """Two face gluings are not mutually inverse."""


class NotClosed(TriangulationError):
    """Some tetrahedron face has no gluing."""


class Disconnected(TriangulationError):
    """The face-adjacency graph of the tetrahedra is not connected."""


class UnsupportedSize(TriangulationError):
    """A constructor was asked for a size it does not provide."""


class NotAManifold(TriangulationError):
    """The triangulation is not a closed 3-manifold triangulation."""


class MalformedSignature(PachnerError, ValueError):
    """An isomorphism signature could not be decoded."""


class IllegalMove(PachnerError):
    """A Pachner move was requested at a site where it is not legal."""


class SizeAboveCeiling(PachnerError):
    """A census was requested above the configured feasibility ceiling."""


class EmptyLevel(PachnerError):
    """A Pachner-graph analysis was given an empty level."""


class ConfigError(PachnerError):
    """The run configuration is invalid."""
