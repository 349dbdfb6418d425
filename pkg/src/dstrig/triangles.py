"""Geodesic triangles on the de Sitter quadric and their causal taxonomy.

A triangle is named by how many of its edges are space-like, time-like
and light-like.  Triangles with a light-like or impossible edge are
classified but never built: tangents and normals exist only for the
four null-free types.

Vertex and edge indexing: edge j is the edge opposite vertex j, joining
the other two vertices.  tangents[j, k] is the unit tangent at vertex j
toward vertex k; normals[j] is the unit outer normal of edge j's plane.
The three normal signs are fixed jointly so that for every vertex j the
identity <tangents[j,k], tangents[j,l]> = <normals[k], normals[l]> holds,
and the residual global flip is resolved by <normals[0], p0> <= 0 (outer
side), falling back to a positive time component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    BoundaryCaseError,
    DegenerateTriangleError,
    GeometryError,
    ImpossibleEdgeError,
    NoPolarTriangleError,
    NonContractibleError,
    NotApplicableError,
    NotSpatiolateralError,
    NullEdgeError,
)
from .geodesics import DeSitterPoint, GeodesicSegment, SegmentKind, classify_segment, tangent_toward
from .minkowski import NULL_EPS, ZERO_EPS, CausalType, causal_type, lorentz_cross, lorentz_normalize, mink_inner

# Near-orthogonal tangent/normal products leave a pairwise sign
# undetermined; below this magnitude the other two identities decide.
_SIGN_TOL = 1e-10


class TriangleKind(Enum):
    PROPER_DE_SITTER = "proper_de_sitter"
    HYPERBOLIC = "hyperbolic"
    ANTIPODAL_HYPERBOLIC = "antipodal_hyperbolic"
    STRANGE = "strange"
    IMPOSSIBLE = "impossible"


class ProperName(Enum):
    SPATIOLATERAL = "spatiolateral"
    TEMPOLATERAL = "tempolateral"
    CHOROSCELES = "chorosceles"
    CHRONOSCELES = "chronosceles"
    LUCILATERAL = "lucilateral"
    MULTIPLE = "multiple"
    PHOTOSCELES_SPACE_BASE = "photosceles_space_base"
    PHOTOSCELES_TIME_BASE = "photosceles_time_base"
    BIMETRICAL_CHRONOSCELES = "bimetrical_chronosceles"
    BIMETRICAL_CHOROSCELES = "bimetrical_chorosceles"
    NONE = "none"


class PolarKind(Enum):
    ON_DE_SITTER = "on_de_sitter"
    ON_H2 = "on_h2"
    ON_ANTI_H2 = "on_anti_h2"


# (space-like, time-like, light-like) edge counts -> name.
_NAME_TABLE = {
    (3, 0, 0): ProperName.SPATIOLATERAL,
    (0, 3, 0): ProperName.TEMPOLATERAL,
    (2, 1, 0): ProperName.CHOROSCELES,
    (1, 2, 0): ProperName.CHRONOSCELES,
    (0, 0, 3): ProperName.LUCILATERAL,
    (1, 1, 1): ProperName.MULTIPLE,
    (1, 0, 2): ProperName.PHOTOSCELES_SPACE_BASE,
    (0, 1, 2): ProperName.PHOTOSCELES_TIME_BASE,
    (0, 2, 1): ProperName.BIMETRICAL_CHRONOSCELES,
    (2, 0, 1): ProperName.BIMETRICAL_CHOROSCELES,
}

_AREA_TYPES = (ProperName.SPATIOLATERAL, ProperName.TEMPOLATERAL,
               ProperName.CHOROSCELES, ProperName.CHRONOSCELES)


@dataclass(frozen=True, eq=False)
class TriangleClass:
    kind: TriangleKind
    edge_counts: tuple[int, int, int]
    proper_name: ProperName
    contractible: bool | None


@dataclass(frozen=True, eq=False)
class DeSitterTriangle:
    points: tuple[DeSitterPoint, DeSitterPoint, DeSitterPoint]
    edges: tuple[GeodesicSegment, GeodesicSegment, GeodesicSegment]
    tangents: np.ndarray  # (3, 3, 3); [j, k] = unit tangent at j toward k
    normals: np.ndarray   # (3, 3);   [j] = unit outer normal of edge j


@dataclass(frozen=True, eq=False)
class PolarTriangle:
    vertices: tuple[np.ndarray, np.ndarray, np.ndarray]
    kinds: tuple[PolarKind, PolarKind, PolarKind]


def _others(j: int) -> tuple[int, int]:
    return (j + 1) % 3, (j + 2) % 3


def _check_distinct(points) -> None:
    for i in range(3):
        for j in range(i + 1, 3):
            d_same = float(np.max(np.abs(points[i].v - points[j].v)))
            d_anti = float(np.max(np.abs(points[i].v + points[j].v)))
            if d_same < ZERO_EPS or d_anti < ZERO_EPS:
                rel = "coincident" if d_same < d_anti else "antipodal"
                raise DegenerateTriangleError(
                    f"vertices {i + 1} and {j + 1} are {rel}")


def _edge_segments(points) -> tuple[GeodesicSegment, ...]:
    segs = []
    for j in range(3):
        k, l = _others(j)
        segs.append(classify_segment(points[k], points[l]))
    return tuple(segs)


def _solve_normal_signs(raw: list[np.ndarray], tangents: np.ndarray) -> list[float]:
    # Pairwise sign products forced by the tangent/normal identity at
    # each vertex; any two reliable products pin all three signs up to
    # one global flip.
    desired = []
    rawprod = []
    for j in range(3):
        k, l = _others(j)
        desired.append(mink_inner(tangents[j, k], tangents[j, l]))
        rawprod.append(mink_inner(raw[k], raw[l]))
    sigma = [None, None, None]
    for j in range(3):
        if min(abs(desired[j]), abs(rawprod[j])) > _SIGN_TOL:
            sigma[j] = 1.0 if desired[j] * rawprod[j] > 0 else -1.0
    signs = [1.0, None, None]
    if sigma[2] is not None:
        signs[1] = sigma[2]
    if sigma[1] is not None:
        signs[2] = sigma[1]
    if signs[1] is None and sigma[0] is not None and signs[2] is not None:
        signs[1] = sigma[0] * signs[2]
    if signs[2] is None and sigma[0] is not None and signs[1] is not None:
        signs[2] = sigma[0] * signs[1]
    # Any product still undetermined is orthogonal on both sides, so the
    # identity holds whichever sign is used.
    signs = [s if s is not None else 1.0 for s in signs]
    return signs


def build_triangle(p1: DeSitterPoint, p2: DeSitterPoint, p3: DeSitterPoint) -> DeSitterTriangle:
    """Assemble a triangle with tangents and consistently signed normals.

    Only the four null-free types can be built; null or impossible edges
    and collinear vertex triples are rejected.
    """
    points = (p1, p2, p3)
    _check_distinct(points)
    edges = _edge_segments(points)
    for j, seg in enumerate(edges):
        if seg.kind is SegmentKind.IMPOSSIBLE:
            raise ImpossibleEdgeError(f"edge opposite vertex {j + 1} admits no geodesic")
        if seg.kind is SegmentKind.NULL_LINE:
            raise NullEdgeError(f"edge opposite vertex {j + 1} is a null line")
    det = float(np.linalg.det(np.stack([p.v for p in points])))
    if abs(det) < ZERO_EPS:
        raise DegenerateTriangleError("vertices lie on a single geodesic")

    tangents = np.zeros((3, 3, 3))
    for j in range(3):
        for k in range(3):
            if j != k:
                tangents[j, k] = tangent_toward(points[j], points[k])

    raw = []
    for j in range(3):
        k, l = _others(j)
        raw.append(lorentz_normalize(lorentz_cross(points[k].v, points[l].v)))
    signs = _solve_normal_signs(raw, tangents)

    # Global flip: the normal of the edge opposite vertex 1 points away
    # from vertex 1; degenerate dot products fall back to future-pointing.
    anchor = signs[0] * mink_inner(raw[0], points[0].v)
    if abs(anchor) > ZERO_EPS:
        flip = anchor > 0.0
    else:
        flip = signs[0] * raw[0][0] < 0.0
    if flip:
        signs = [-s for s in signs]
    normals = np.stack([signs[j] * raw[j] for j in range(3)])

    tangents.setflags(write=False)
    normals.setflags(write=False)
    return DeSitterTriangle(points, edges, tangents, normals)


def _counts(edges) -> tuple[int, int, int]:
    i = sum(1 for e in edges if e.kind is SegmentKind.ELLIPSE_PART)
    j = sum(1 for e in edges if e.kind is SegmentKind.HYPERBOLA_PART)
    k = sum(1 for e in edges if e.kind is SegmentKind.NULL_LINE)
    return i, j, k


def _contractibility(edges) -> bool | None:
    # None inside the tolerance band at 2*pi (undecidable).
    total = sum(e.separation for e in edges)
    if abs(total - 2.0 * math.pi) <= NULL_EPS:
        return None
    return total < 2.0 * math.pi


def classify_triangle(p1: DeSitterPoint, p2: DeSitterPoint, p3: DeSitterPoint) -> TriangleClass:
    """Name a vertex triple from its edge kinds alone.

    Works for all ten named types including the null-edge families; no
    tangent or normal data is computed.  Triples whose three vertices
    lie on one non-null geodesic are rejected as degenerate (null-edge
    families are legitimately coplanar and are not).
    """
    points = (p1, p2, p3)
    _check_distinct(points)
    edges = _edge_segments(points)
    i, j, k = _counts(edges)
    if any(e.kind is SegmentKind.IMPOSSIBLE for e in edges):
        return TriangleClass(TriangleKind.IMPOSSIBLE, (i, j, k), ProperName.NONE, None)
    if k == 0:
        det = float(np.linalg.det(np.stack([p.v for p in points])))
        if abs(det) < ZERO_EPS:
            raise DegenerateTriangleError("vertices lie on a single geodesic")
    name = _NAME_TABLE[(i, j, k)]
    contractible = _contractibility(edges) if name is ProperName.SPATIOLATERAL else None
    return TriangleClass(TriangleKind.PROPER_DE_SITTER, (i, j, k), name, contractible)


def triangle_name(tri: DeSitterTriangle) -> ProperName:
    """Proper name of a built triangle (always one of the four null-free types)."""
    return _NAME_TABLE[_counts(tri.edges)]


def is_contractible(tri: DeSitterTriangle) -> bool:
    """Whether a three-space-like-edge triangle bounds a disk.

    Decided by the edge-length sum against 2*pi; sums inside the
    tolerance band raise instead of guessing a side.
    """
    if triangle_name(tri) is not ProperName.SPATIOLATERAL:
        raise NotSpatiolateralError("contractibility is defined for three space-like edges")
    verdict = _contractibility(tri.edges)
    if verdict is None:
        total = sum(e.separation for e in tri.edges)
        raise BoundaryCaseError(f"edge-length sum {total!r} sits on the 2*pi boundary")
    return verdict


def polar_triangle(tri: DeSitterTriangle) -> PolarTriangle:
    """The triangle's outer normals, tagged by which surface each lies on."""
    name = triangle_name(tri)
    if name not in _AREA_TYPES:
        raise NoPolarTriangleError(f"no polar triangle for {name.value}")
    kinds = []
    for j in range(3):
        u = tri.normals[j]
        if mink_inner(u, u) > 0.0:
            kinds.append(PolarKind.ON_DE_SITTER)
        elif u[0] > 0.0:
            kinds.append(PolarKind.ON_H2)
        else:
            kinds.append(PolarKind.ON_ANTI_H2)
    vertices = tuple(tri.normals[j].copy() for j in range(3))
    return PolarTriangle(vertices, tuple(kinds))


def distinguished_vertex(tri: DeSitterTriangle) -> int:
    """Index of the vertex the area formulas single out.

    Three space-like edges: the unique vertex whose two opposite-edge
    normals share a time cone (contractible triangles only).  Three
    time-like edges: the unique vertex whose two tangents do not share
    a time cone.  Mixed types: the vertex opposite the odd edge out.
    """
    name = triangle_name(tri)
    if name is ProperName.CHOROSCELES:
        return next(j for j in range(3) if tri.edges[j].kind is SegmentKind.HYPERBOLA_PART)
    if name is ProperName.CHRONOSCELES:
        return next(j for j in range(3) if tri.edges[j].kind is SegmentKind.ELLIPSE_PART)
    if name is ProperName.SPATIOLATERAL:
        if not is_contractible(tri):
            raise NonContractibleError(
                "triangle is non-contractible: it bounds no disk and singles out no vertex")
        hits = []
        for j in range(3):
            k, l = _others(j)
            if mink_inner(tri.normals[k], tri.normals[l]) < 0.0:
                hits.append(j)
        if len(hits) != 1:
            raise GeometryError(f"expected one cone-sharing vertex, found {hits!r}")
        return hits[0]
    if name is ProperName.TEMPOLATERAL:
        hits = []
        for j in range(3):
            k, l = _others(j)
            if mink_inner(tri.tangents[j, k], tri.tangents[j, l]) > 0.0:
                hits.append(j)
        if len(hits) != 1:
            raise GeometryError(f"expected one cone-splitting vertex, found {hits!r}")
        return hits[0]
    raise NotApplicableError(f"no distinguished vertex for {name.value}")


def tangent_normal_residual(tri: DeSitterTriangle) -> float:
    """Largest violation of <V_jk, V_jl> = <u_k, u_l> over the vertices."""
    worst = 0.0
    for j in range(3):
        k, l = _others(j)
        lhs = mink_inner(tri.tangents[j, k], tri.tangents[j, l])
        rhs = mink_inner(tri.normals[k], tri.normals[l])
        worst = max(worst, abs(lhs - rhs))
    return worst


def normal_duality_holds(tri: DeSitterTriangle) -> bool:
    """Tangents along an edge are time-like iff the edge's normal is space-like."""
    for m in range(3):
        j, k = _others(m)
        u_space = causal_type(tri.normals[m]) is CausalType.SPACE_LIKE
        for a, b in ((j, k), (k, j)):
            v_time = causal_type(tri.tangents[a, b]) is CausalType.TIME_LIKE
            if v_time != u_space:
                return False
    return True
