"""Exception types raised by the geometry routines.

Every error carries a short ``code`` string; the command line reports
failed centers by that code.
"""


class GeometryError(ValueError):
    """Base class for every failure raised by :mod:`ccm`."""

    code = "GeometryError"


class DegenerateError(GeometryError):
    code = "Degenerate"


class AllCoincidentError(GeometryError):
    code = "AllCoincident"


class ZeroTotalMassError(GeometryError):
    code = "ZeroTotalMass"


# planar polygons

class ZeroAreaError(GeometryError):
    code = "ZeroArea"


class DangerousTriangulationError(GeometryError):
    code = "DangerousTriangulation"


class ParallelBisectorsError(GeometryError):
    code = "ParallelBisectors"


class InvalidCutError(GeometryError):
    code = "InvalidCut"


class ZeroAreaPieceError(GeometryError):
    code = "ZeroAreaPiece"


# polytopes

class DegenerateSimplexError(GeometryError):
    code = "DegenerateSimplex"


class DangerousConeError(GeometryError):
    code = "DangerousCone"


class ZeroVolumeError(GeometryError):
    code = "ZeroVolume"


class ZeroVolumePieceError(GeometryError):
    code = "ZeroVolumePiece"


class InvalidBoundaryError(GeometryError):
    """Facet table is malformed or the facets do not close up."""

    code = "InvalidBoundary"


# sphere and hyperboloid

class GreatCircleDegenerateError(GeometryError):
    code = "GreatCircleDegenerate"


class BalancedConfigurationError(GeometryError):
    code = "BalancedConfiguration"


class AntipodalPairError(GeometryError):
    code = "AntipodalPair"


class DegeneratePolygonError(GeometryError):
    code = "DegeneratePolygon"


class DegenerateBoundaryError(GeometryError):
    code = "DegenerateBoundary"


class ConstraintViolationError(GeometryError):
    code = "ConstraintViolation"


# height functions

class PoleAngleError(GeometryError):
    code = "PoleAngle"


class DegenerateKiteError(GeometryError):
    code = "DegenerateKite"


class DegeneratePairError(GeometryError):
    code = "DegeneratePair"


# command line

class ParseError(GeometryError):
    code = "ParseError"


class UnknownSuiteError(GeometryError):
    code = "UnknownSuite"


class UnsupportedKindError(GeometryError):
    code = "UnsupportedKind"
