"""Exception types shared across the geometry kernel."""


class GeometryError(Exception):
    """Base class for every failure raised by this package."""


class ZeroVectorError(GeometryError):
    """All components of a vector are below the zero threshold."""


class NotUnitError(GeometryError):
    """A vector expected to satisfy abs(<v,v>) = 1 does not."""


class NullInputError(GeometryError):
    """A null vector was passed where a definite causal type is required."""


class NotTimeLikeError(GeometryError):
    """A time-like vector was required."""


class NullSpanError(GeometryError):
    """The plane spanned by two vectors is degenerate (null)."""


class DegeneratePairError(GeometryError):
    """Two vectors are too close to parallel to define a normal."""


class NotSpaceLikePositionError(GeometryError):
    """A position vector with <v,v> > 0 was required for projection."""


class CoincidentPointsError(GeometryError):
    """Two quadric points coincide (or are antipodal) within tolerance."""


class NullTangentError(GeometryError):
    """The direction from one point toward another is null."""


class UnsupportedKindError(GeometryError):
    """The segment kind does not support the requested operation."""


class DegenerateTriangleError(GeometryError):
    """Triangle vertices are coincident or lie on a single geodesic."""


class ImpossibleEdgeError(GeometryError):
    """A vertex pair admits no connecting geodesic (<p,q> < -1)."""


class NullEdgeError(GeometryError):
    """An edge is a null line; no triangle object is built for these."""


class NotSpatiolateralError(GeometryError):
    """A triangle with three space-like edges was required."""


class BoundaryCaseError(GeometryError):
    """Edge-length sum sits inside the tolerance band at 2*pi."""


class NoPolarTriangleError(GeometryError):
    """Polar triangles exist only for the four null-free types."""


class NotApplicableError(GeometryError):
    """No distinguished vertex is defined for this triangle type."""


class NonContractibleError(GeometryError):
    """A non-contractible three-space-like-edge triangle bounds no area."""


class UnsupportedTriangleTypeError(GeometryError):
    """Area machinery covers only the four null-free triangle types."""


class NonConvergentError(GeometryError):
    """The grid refinement loop failed to shrink the error estimate."""


class DegenerateFanError(GeometryError):
    """The fan parameterization from the apex broke down."""


class ExhaustedAttemptsError(GeometryError):
    """Rejection sampling hit the attempt budget without a match."""
