"""Numerical area oracle and seeded triangle generators.

The oracle integrates the induced area element over a geodesic fan: the
triangle is swept by geodesics from the distinguished vertex (the apex)
to points of the opposite edge.  The integrand sqrt|det G| uses the
Minkowski first fundamental form G of the parameterization, with the
partial derivatives taken by central differences.  A composite midpoint
rule never samples the patch boundary, so null directions inside the
fan (where det G passes through zero) only cost convergence order, not
validity.  Richardson's rule on consecutive grid doublings supplies the
error estimate; the estimate must shrink between the final two
doublings or the refinement loop keeps going.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .areas import complex_area, girard_area, girard_area_from_products
from .errors import (
    DegenerateFanError,
    ExhaustedAttemptsError,
    GeometryError,
    NonConvergentError,
)
from .geodesics import DeSitterPoint, SegmentKind
from .minkowski import mink_inner
from .triangles import (
    DeSitterTriangle,
    ProperName,
    _AREA_TYPES,
    _others,
    build_triangle,
    classify_triangle,
    distinguished_vertex,
    tangent_normal_residual,
    triangle_name,
)

# Cevian inner products this close to 1 use the straight-line (null)
# interpolation limit; the formulas are continuous across the switch.
_CHORD_BAND = 1e-9
# Below est_error values of this size the Richardson estimate is noise;
# accept without demanding further monotone decrease.
_EST_FLOOR = 1e-10

_DEFAULT_CHECK_GRID = 64


@dataclass(frozen=True, eq=False)
class OracleResult:
    area: float
    est_error: float
    grid: tuple[int, int]
    refinements: int


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    target: ProperName
    u_max: float = 2.0
    max_attempts: int = 20000

    def __post_init__(self):
        if not self.u_max > 0:
            raise ValueError(f"u_max must be positive, got {self.u_max!r}")
        if self.max_attempts < 1:
            raise ValueError(f"max_attempts must be >= 1, got {self.max_attempts!r}")


def _rows_inner(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return -(a[:, 0] * b[:, 0]) + a[:, 1] * b[:, 1] + a[:, 2] * b[:, 2]


def _edge_rows(seg, s: np.ndarray) -> np.ndarray:
    # Points of a fixed ellipse/hyperbola edge at parameters s (vectorized).
    a, b, d = seg.a.v, seg.b.v, seg.separation
    if seg.kind is SegmentKind.ELLIPSE_PART:
        wa = np.sin((1.0 - s) * d) / math.sin(d)
        wb = np.sin(s * d) / math.sin(d)
    else:
        wa = np.sinh((1.0 - s) * d) / math.sinh(d)
        wb = np.sinh(s * d) / math.sinh(d)
    return wa[:, None] * a[None, :] + wb[:, None] * b[None, :]


def _cevian_rows(apex: np.ndarray, q: np.ndarray, t: np.ndarray) -> np.ndarray:
    # Geodesic from the apex to each row of q, evaluated at parameter t.
    # Rows switch between circular and hyperbolic interpolation depending
    # on the apex/row inner product; the near-null band degenerates to the
    # straight chord, the common limit of both.
    c = -(apex[0] * q[:, 0]) + apex[1] * q[:, 1] + apex[2] * q[:, 2]
    if np.any(c <= -1.0 + _CHORD_BAND):
        raise DegenerateFanError(
            "a fan geodesic would need to cross to an antipodal branch")
    wa = np.empty_like(c)
    wb = np.empty_like(c)
    ell = c < 1.0 - _CHORD_BAND
    hyp = c > 1.0 + _CHORD_BAND
    mid = ~(ell | hyp)
    if np.any(ell):
        th = np.arccos(np.clip(c[ell], -1.0, 1.0))
        sn = np.sin(th)
        wa[ell] = np.sin((1.0 - t[ell]) * th) / sn
        wb[ell] = np.sin(t[ell] * th) / sn
    if np.any(hyp):
        dh = np.arccosh(c[hyp])
        sh = np.sinh(dh)
        wa[hyp] = np.sinh((1.0 - t[hyp]) * dh) / sh
        wb[hyp] = np.sinh(t[hyp] * dh) / sh
    if np.any(mid):
        wa[mid] = 1.0 - t[mid]
        wb[mid] = t[mid]
    return wa[:, None] * apex[None, :] + wb[:, None] * q


def _fan_area(tri: DeSitterTriangle, apex_index: int, m: int) -> float:
    seg = tri.edges[apex_index]
    apex = tri.points[apex_index].v

    def surface(s, t):
        return _cevian_rows(apex, _edge_rows(seg, s), t)

    mids = (np.arange(m) + 0.5) / m
    s, t = (g.ravel() for g in np.meshgrid(mids, mids, indexing="ij"))
    h = 1.0 / (4.0 * m)
    xs = (surface(s + h, t) - surface(s - h, t)) / (2.0 * h)
    xt = (surface(s, t + h) - surface(s, t - h)) / (2.0 * h)
    gss = _rows_inner(xs, xs)
    gst = _rows_inner(xs, xt)
    gtt = _rows_inner(xt, xt)
    det = gss * gtt - gst * gst
    return float(np.sum(np.sqrt(np.abs(det)))) / (m * m)


def integrate_area(tri: DeSitterTriangle, n: int = 64, apex: int | None = None,
                   max_refinements: int = 3) -> OracleResult:
    """Numerically integrate the triangle's area over a geodesic fan.

    Runs the midpoint rule at resolutions n/2, n and 2n; the reported
    area is the finest level and est_error = |A_2m - A_m| / 3 is the
    Richardson estimate at the final doubling.  If the estimate failed
    to shrink at that doubling, up to max_refinements further doublings
    are attempted before giving up.
    """
    if n < 8:
        raise ValueError(f"grid must be at least 8, got {n!r}")
    apex_index = distinguished_vertex(tri) if apex is None else apex
    if not 0 <= apex_index <= 2:
        raise ValueError(f"apex index out of range: {apex_index!r}")
    det = float(np.linalg.det(np.stack([p.v for p in tri.points])))
    if abs(det) < 1e-9:
        raise DegenerateFanError("apex too close to the opposite edge's plane")

    levels = [n // 2, n, 2 * n]
    areas = [_fan_area(tri, apex_index, m) for m in levels]
    ests = [abs(areas[i + 1] - areas[i]) / 3.0 for i in range(len(areas) - 1)]
    extra = 0
    while ests[-1] >= ests[-2] and ests[-1] > _EST_FLOOR:
        if extra >= max_refinements:
            raise NonConvergentError(
                f"error estimate stopped shrinking: {ests!r}")
        levels.append(2 * levels[-1])
        areas.append(_fan_area(tri, apex_index, levels[-1]))
        ests.append(abs(areas[-1] - areas[-2]) / 3.0)
        extra += 1
    return OracleResult(area=areas[-1], est_error=ests[-1],
                        grid=(levels[-1], levels[-1]),
                        refinements=len(levels) - 1)


def _chart_point(u: float, psi: float) -> DeSitterPoint:
    return DeSitterPoint(np.array([
        math.sinh(u),
        math.cosh(u) * math.cos(psi),
        math.cosh(u) * math.sin(psi),
    ]))


def random_triangle(cfg: GeneratorConfig) -> DeSitterTriangle:
    """Rejection-sample a triangle of the requested type.

    Vertices come from the chart (sinh u, cosh u cos psi, cosh u sin psi)
    with u uniform on [-u_max, u_max] and psi uniform on [0, 2*pi).  A
    draw is kept when it classifies as the target (for three space-like
    edges: contractible as well).  Identical seeds give identical output.
    """
    if cfg.target not in _AREA_TYPES:
        raise ValueError(f"unsupported generation target: {cfg.target!r}")
    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.max_attempts):
        us = rng.uniform(-cfg.u_max, cfg.u_max, 3)
        psis = rng.uniform(0.0, 2.0 * math.pi, 3)
        pts = tuple(_chart_point(u, p) for u, p in zip(us, psis))
        try:
            kind = classify_triangle(*pts)
        except GeometryError:
            continue
        if kind.proper_name is not cfg.target:
            continue
        if cfg.target is ProperName.SPATIOLATERAL and kind.contractible is not True:
            continue
        return build_triangle(*pts)
    raise ExhaustedAttemptsError(
        f"no {cfg.target.value} triangle in {cfg.max_attempts} attempts")


def random_buildable_triangle(seed: int, u_max: float = 2.0,
                              max_attempts: int = 20000) -> DeSitterTriangle:
    """Any triangle of the four null-free types, seeded like random_triangle."""
    rng = np.random.default_rng(seed)
    for _ in range(max_attempts):
        us = rng.uniform(-u_max, u_max, 3)
        psis = rng.uniform(0.0, 2.0 * math.pi, 3)
        pts = tuple(_chart_point(u, p) for u, p in zip(us, psis))
        try:
            return build_triangle(*pts)
        except GeometryError:
            continue
    raise ExhaustedAttemptsError(f"no buildable triangle in {max_attempts} attempts")


def _structure_ok(tri: DeSitterTriangle, name: ProperName) -> tuple[bool, str]:
    d = distinguished_vertex(tri)
    k, l = _others(d)
    g1 = mink_inner(tri.tangents[d, k], tri.tangents[d, l])
    g2 = mink_inner(tri.tangents[k, d], tri.tangents[k, l])
    g3 = mink_inner(tri.tangents[l, d], tri.tangents[l, k])
    if name is ProperName.SPATIOLATERAL:
        ok = g1 < -1.0 and g2 > 1.0 and g3 > 1.0
        return ok, f"product pattern {g1:.6g}, {g2:.6g}, {g3:.6g}"
    if name is ProperName.TEMPOLATERAL:
        t1 = math.acosh(max(g1, 1.0))
        t2 = math.acosh(max(-g2, 1.0))
        t3 = math.acosh(max(-g3, 1.0))
        ok = g1 > 1.0 and g2 < -1.0 and g3 < -1.0 and t1 > t2 + t3
        return ok, f"angle at apex {t1:.6g} vs {t2 + t3:.6g}"
    if name is ProperName.CHOROSCELES:
        return g1 > 1.0, f"apex product {g1:.6g}"
    return g1 < -1.0, f"apex product {g1:.6g}"


def verify_type(target: ProperName, trials: int, seed: int,
                grid: int = _DEFAULT_CHECK_GRID,
                corrupt_normals: bool = False) -> dict:
    """Generate triangles of one type and check every identity on each.

    Checks per triangle: closed-form area against the fan oracle (within
    max(1e-3, 3 * est_error)); the tangent/normal product identity (1e-8);
    the complex angle sum being purely imaginary, positive, and equal to
    the signed sum (1e-8); the product-form area against the angle-form
    area (1e-9); and the type-specific structure of the distinguished
    vertex.  corrupt_normals deliberately perturbs the normals first and
    is expected to make the identity checks fail.
    """
    if target not in _AREA_TYPES:
        raise ValueError(f"unsupported verification target: {target!r}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials!r}")
    trial_seeds = np.random.SeedSequence(seed).generate_state(trials)
    counts = {
        "oracle_agreement": 0,
        "tangent_normal_identity": 0,
        "complex_area_shape": 0,
        "product_formula_agreement": 0,
        "type_structure": 0,
    }
    worst = {
        "oracle_discrepancy": 0.0,
        "tangent_normal_residual": 0.0,
        "complex_real_part": 0.0,
        "product_formula_gap": 0.0,
    }
    failures = []
    for i in range(trials):
        cfg = GeneratorConfig(seed=int(trial_seeds[i]), target=target)
        tri = random_triangle(cfg)
        if corrupt_normals:
            tri = DeSitterTriangle(tri.points, tri.edges, tri.tangents,
                                   tri.normals + 1e-3)

        res = girard_area(tri)
        prod = girard_area_from_products(tri)
        nabla = complex_area(tri)

        resid = tangent_normal_residual(tri)
        worst["tangent_normal_residual"] = max(worst["tangent_normal_residual"], resid)
        if resid <= 1e-8:
            counts["tangent_normal_identity"] += 1
        else:
            failures.append({"trial": i, "check": "tangent_normal_identity",
                             "detail": f"residual {resid:.3g}"})

        shape = abs(nabla.real)
        worst["complex_real_part"] = max(worst["complex_real_part"], shape)
        if shape <= 1e-8 and nabla.imag > 0 and abs(nabla.imag - res.real_area) <= 1e-8:
            counts["complex_area_shape"] += 1
        else:
            failures.append({"trial": i, "check": "complex_area_shape",
                             "detail": f"angle sum {nabla!r} vs area {res.real_area!r}"})

        gap = abs(prod - res.real_area)
        worst["product_formula_gap"] = max(worst["product_formula_gap"], gap)
        if gap <= 1e-9:
            counts["product_formula_agreement"] += 1
        else:
            failures.append({"trial": i, "check": "product_formula_agreement",
                             "detail": f"gap {gap:.3g}"})

        ok, detail = _structure_ok(tri, target)
        if ok:
            counts["type_structure"] += 1
        else:
            failures.append({"trial": i, "check": "type_structure", "detail": detail})

        try:
            orc = integrate_area(tri, n=grid)
        except (NonConvergentError, DegenerateFanError) as exc:
            failures.append({"trial": i, "check": "oracle_agreement",
                             "detail": f"oracle failed: {exc}"})
            continue
        disc = abs(res.real_area - orc.area)
        worst["oracle_discrepancy"] = max(worst["oracle_discrepancy"], disc)
        if disc <= max(1e-3, 3.0 * orc.est_error):
            counts["oracle_agreement"] += 1
        else:
            failures.append({"trial": i, "check": "oracle_agreement",
                             "detail": f"formula {res.real_area!r} vs oracle {orc.area!r} "
                                       f"(est {orc.est_error:.3g})"})
    return {
        "target": target.value,
        "trials": trials,
        "seed": seed,
        "grid": grid,
        "corrupt_normals": corrupt_normals,
        "counts": counts,
        "worst": worst,
        "failures": failures,
        "passed": all(v == trials for v in counts.values()),
    }
