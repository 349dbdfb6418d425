"""Points and geodesic segments on the unit de Sitter quadric <p,p> = 1.

Geodesics are plane sections through the origin.  The inner product of
the endpoints decides the conic: an ellipse arc for values in (-1, 1),
a hyperbola branch above 1, a null straight line at exactly 1, and no
connecting geodesic at all below -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    CoincidentPointsError,
    NotSpaceLikePositionError,
    NotUnitError,
    NullTangentError,
    UnsupportedKindError,
)
from .minkowski import NULL_EPS, UNIT_EPS, ZERO_EPS, CausalType, as_vec3, mink_inner


class SegmentKind(Enum):
    ELLIPSE_PART = "ellipse_part"
    HYPERBOLA_PART = "hyperbola_part"
    NULL_LINE = "null_line"
    IMPOSSIBLE = "impossible"


@dataclass(frozen=True, eq=False)
class DeSitterPoint:
    """Position on the quadric; the stored array is read-only."""

    v: np.ndarray

    def __post_init__(self):
        v = as_vec3(self.v).copy()
        q = mink_inner(v, v)
        if abs(q - 1.0) > UNIT_EPS:
            raise NotUnitError(f"point off the quadric: <v,v> = {q!r}")
        v.setflags(write=False)
        object.__setattr__(self, "v", v)


@dataclass(frozen=True, eq=False)
class GeodesicSegment:
    a: DeSitterPoint
    b: DeSitterPoint
    kind: SegmentKind
    separation: float


def project_to_quadric(v) -> DeSitterPoint:
    """Scale a space-like position vector onto the quadric."""
    v = as_vec3(v)
    q = mink_inner(v, v)
    if q <= NULL_EPS:
        raise NotSpaceLikePositionError(
            f"only space-like positions project to the quadric: <v,v> = {q!r}")
    return DeSitterPoint(v / math.sqrt(q))


def _proportional(p: DeSitterPoint, q: DeSitterPoint) -> str | None:
    if float(np.max(np.abs(p.v - q.v))) < ZERO_EPS:
        return "coincident"
    if float(np.max(np.abs(p.v + q.v))) < ZERO_EPS:
        return "antipodal"
    return None


def tangent_toward(p: DeSitterPoint, q: DeSitterPoint) -> np.ndarray:
    """Unit tangent at p pointing along the geodesic toward q.

    The unnormalized direction is q - <p,q> p; it is null exactly when
    <p,q> = 1 (within the band), in which case no unit tangent exists.
    """
    how = _proportional(p, q)
    if how is not None:
        raise CoincidentPointsError(f"{how} points admit no tangent direction")
    c = mink_inner(p.v, q.v)
    w = q.v - c * p.v
    ww = mink_inner(w, w)
    if abs(ww) <= NULL_EPS:
        raise NullTangentError(f"null direction: <p,q> = {c!r}")
    return w / math.sqrt(abs(ww))


def classify_span(p: DeSitterPoint, q: DeSitterPoint) -> CausalType:
    """Causal type of the plane through the origin spanned by p and q."""
    how = _proportional(p, q)
    if how is not None:
        raise CoincidentPointsError(f"{how} points span no plane")
    c = mink_inner(p.v, q.v)
    if abs(abs(c) - 1.0) <= NULL_EPS:
        return CausalType.NULL
    if abs(c) < 1.0:
        return CausalType.SPACE_LIKE
    return CausalType.TIME_LIKE


def classify_segment(p: DeSitterPoint, q: DeSitterPoint) -> GeodesicSegment:
    """Segment between two quadric points with its conic kind and length.

    Separation is the arc length: arccos<p,q> on an ellipse arc,
    arccosh<p,q> on a hyperbola branch, 0 for the two kinds that carry
    no length.  Inner products at or below -1 admit no geodesic; the
    band around -1 is folded into IMPOSSIBLE since only +1 yields a
    null line.
    """
    how = _proportional(p, q)
    if how is not None:
        raise CoincidentPointsError(f"{how} points form no segment")
    c = mink_inner(p.v, q.v)
    if abs(c - 1.0) <= NULL_EPS:
        return GeodesicSegment(p, q, SegmentKind.NULL_LINE, 0.0)
    if c > 1.0:
        return GeodesicSegment(p, q, SegmentKind.HYPERBOLA_PART, math.acosh(c))
    if c > -1.0 + NULL_EPS:
        return GeodesicSegment(p, q, SegmentKind.ELLIPSE_PART, math.acos(max(c, -1.0)))
    return GeodesicSegment(p, q, SegmentKind.IMPOSSIBLE, 0.0)


def geodesic_point(seg: GeodesicSegment, t: float) -> DeSitterPoint:
    """Point at parameter t in [0, 1] along an ellipse or hyperbola segment."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"parameter outside [0, 1]: {t!r}")
    s = seg.separation
    if seg.kind is SegmentKind.ELLIPSE_PART:
        w = (math.sin((1.0 - t) * s) * seg.a.v + math.sin(t * s) * seg.b.v) / math.sin(s)
    elif seg.kind is SegmentKind.HYPERBOLA_PART:
        w = (math.sinh((1.0 - t) * s) * seg.a.v + math.sinh(t * s) * seg.b.v) / math.sinh(s)
    else:
        raise UnsupportedKindError(f"no interpolation on a {seg.kind.value} segment")
    return DeSitterPoint(w)


def edge_length(seg: GeodesicSegment) -> float:
    if seg.kind in (SegmentKind.ELLIPSE_PART, SegmentKind.HYPERBOLA_PART):
        return seg.separation
    raise UnsupportedKindError(f"a {seg.kind.value} segment carries no length")
