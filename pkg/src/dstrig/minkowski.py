"""Arithmetic in 3D Minkowski space with signature (-,+,+).

The first coordinate x0 is the time coordinate; "future" means x0 > 0.
Vectors are plain numpy arrays of shape (3,).  Angles between unit
vectors are complex in general: real for a space-like pair in the same
sector, otherwise carrying an imaginary hyperbolic part whose branch is
tracked explicitly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegeneratePairError,
    NotTimeLikeError,
    NotUnitError,
    NullInputError,
    NullSpanError,
    ZeroVectorError,
)

# Width of the null band on <u,u>: values inside are treated as null and
# rejected loudly by operations that need a definite causal type.
NULL_EPS = 1e-9
# Band on abs(<u,u>) - 1 for unit-vector checks.
UNIT_EPS = 1e-9
# Hard zero for component-level degeneracy checks.
ZERO_EPS = 1e-12

METRIC = np.diag([-1.0, 1.0, 1.0])


class CausalType(Enum):
    SPACE_LIKE = "space_like"
    TIME_LIKE = "time_like"
    NULL = "null"


class AngleBranch(Enum):
    """Branch of the complex angle between two unit non-null vectors.

    With t >= 0 (t real for the mixed case) the angle value is:

    REAL_SECTOR        t          space-like pair, inner product in [-1, 1]
    PI_MINUS_IMAG      pi - i*t   space-like pair, inner product < -1
    PURE_IMAG          i*t        space-like pair, inner product > 1
    NEG_IMAG           -i*t       time-like pair, same time cone
    PI_PLUS_IMAG       pi + i*t   time-like pair, different time cones
    HALF_PI_PLUS_IMAG  pi/2 + i*t mixed pair
    """

    REAL_SECTOR = "real_sector"
    PI_MINUS_IMAG = "pi_minus_imag"
    PURE_IMAG = "pure_imag"
    NEG_IMAG = "neg_imag"
    PI_PLUS_IMAG = "pi_plus_imag"
    HALF_PI_PLUS_IMAG = "half_pi_plus_imag"


@dataclass(frozen=True)
class PseudoAngle:
    """Complex angle plus the branch it was taken on."""

    value: complex
    branch: AngleBranch

    @property
    def theta(self) -> float:
        """Real hyperbolic/circular magnitude recovered from the branch."""
        if self.branch is AngleBranch.REAL_SECTOR:
            return self.value.real
        if self.branch in (AngleBranch.PURE_IMAG, AngleBranch.PI_PLUS_IMAG,
                           AngleBranch.HALF_PI_PLUS_IMAG):
            return self.value.imag
        # PI_MINUS_IMAG and NEG_IMAG carry -t in the imaginary part.
        return -self.value.imag

    def cos(self) -> complex:
        return cmath.cos(self.value)


def vec3(x0: float, x1: float, x2: float) -> np.ndarray:
    """Build a Minkowski 3-vector, rejecting non-finite components."""
    v = np.array([x0, x1, x2], dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"non-finite vector components: {v!r}")
    return v


def as_vec3(value) -> np.ndarray:
    v = np.asarray(value, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"non-finite vector components: {v!r}")
    return v


def mink_inner(u, v) -> float:
    """Bilinear form -u0*v0 + u1*v1 + u2*v2."""
    return float(-u[0] * v[0] + u[1] * v[1] + u[2] * v[2])


def causal_type(u) -> CausalType:
    if max(abs(u[0]), abs(u[1]), abs(u[2])) < ZERO_EPS:
        raise ZeroVectorError("causal type of the zero vector is undefined")
    q = mink_inner(u, u)
    if q > NULL_EPS:
        return CausalType.SPACE_LIKE
    if q < -NULL_EPS:
        return CausalType.TIME_LIKE
    return CausalType.NULL


def pseudo_norm(u) -> complex:
    """0 for null input, sqrt|<u,u>| if space-like, i*sqrt|<u,u>| if time-like."""
    kind = causal_type(u)
    if kind is CausalType.NULL:
        return 0j
    root = math.sqrt(abs(mink_inner(u, u)))
    if kind is CausalType.SPACE_LIKE:
        return complex(root, 0.0)
    return complex(0.0, root)


def lorentz_normalize(u) -> np.ndarray:
    """Scale u so abs(<u,u>) = 1; null input cannot be normalized."""
    q = mink_inner(u, u)
    if abs(q) <= ZERO_EPS:
        raise NullInputError("cannot normalize a (near-)null vector")
    return np.asarray(u, dtype=float) / math.sqrt(abs(q))


def _require_unit(u, q, label: str) -> None:
    if abs(abs(q) - 1.0) > UNIT_EPS:
        raise NotUnitError(f"{label} has <v,v> = {q!r}, expected magnitude 1")


def same_time_cone(u, v) -> bool:
    """True when two time-like vectors point into the same time cone."""
    for label, w in (("u", u), ("v", v)):
        if causal_type(w) is not CausalType.TIME_LIKE:
            raise NotTimeLikeError(f"{label} is not time-like")
    return mink_inner(u, v) < 0.0


def pseudo_angle(u, v) -> PseudoAngle:
    """Complex angle between unit non-null vectors, branch tracked.

    Defined through cos(angle) = <u,v> / (pseudo_norm(u) * pseudo_norm(v));
    the branch resolves which complex arc cosine is meant.
    """
    qu = mink_inner(u, u)
    qv = mink_inner(v, v)
    tu = causal_type(u)
    tv = causal_type(v)
    if CausalType.NULL in (tu, tv):
        raise NullInputError("pseudo angle requires non-null vectors")
    _require_unit(u, qu, "u")
    _require_unit(v, qv, "v")
    g = mink_inner(u, v)

    if tu is CausalType.SPACE_LIKE and tv is CausalType.SPACE_LIKE:
        if g > 1.0:
            return PseudoAngle(complex(0.0, math.acosh(g)), AngleBranch.PURE_IMAG)
        if g < -1.0:
            return PseudoAngle(complex(math.pi, -math.acosh(-g)),
                               AngleBranch.PI_MINUS_IMAG)
        return PseudoAngle(complex(math.acos(g), 0.0), AngleBranch.REAL_SECTOR)

    if tu is CausalType.TIME_LIKE and tv is CausalType.TIME_LIKE:
        if g < 0.0:
            t = math.acosh(max(-g, 1.0))
            return PseudoAngle(complex(0.0, -t), AngleBranch.NEG_IMAG)
        t = math.acosh(max(g, 1.0))
        return PseudoAngle(complex(math.pi, t), AngleBranch.PI_PLUS_IMAG)

    return PseudoAngle(complex(math.pi / 2.0, math.asinh(g)),
                       AngleBranch.HALF_PI_PLUS_IMAG)


def real_angle(u, v) -> float:
    """Real angle magnitude between unit non-null vectors.

    Circular arc cosine when the spanned plane is space-like, hyperbolic
    functions when it is time-like.  Signed only in the mixed case.
    """
    qu = mink_inner(u, u)
    qv = mink_inner(v, v)
    tu = causal_type(u)
    tv = causal_type(v)
    if CausalType.NULL in (tu, tv):
        raise NullInputError("real angle requires non-null vectors")
    _require_unit(u, qu, "u")
    _require_unit(v, qv, "v")
    g = mink_inner(u, v)

    if tu is not tv:
        # Mixed pair: the span is always time-like and never degenerate.
        return math.asinh(g)
    if abs(abs(g) - 1.0) <= NULL_EPS:
        raise NullSpanError(f"span is null within tolerance: <u,v> = {g!r}")
    if abs(g) < 1.0:
        if tu is CausalType.TIME_LIKE:
            # Unit time-like pairs always satisfy abs(<u,v>) >= 1.
            raise NullSpanError(f"time-like pair with <u,v> = {g!r}")
        return math.acos(g)
    return math.acosh(abs(g))


def lorentz_cross(u, v) -> np.ndarray:
    """Vector orthogonal (in the Minkowski sense) to both u and v.

    Components: (u2*v1 - u1*v2, u2*v0 - u0*v2, u0*v1 - u1*v0).  Raises
    when the result is (near-)zero, i.e. the inputs are parallel.
    """
    w = np.array([
        u[2] * v[1] - u[1] * v[2],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ], dtype=float)
    if abs(mink_inner(w, w)) < ZERO_EPS * ZERO_EPS:
        raise DegeneratePairError("inputs span no definite normal direction")
    return w


def boost_matrix(rapidity: float) -> np.ndarray:
    """Boost in the (x0, x1) plane; preserves the form and time orientation."""
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    return np.array([[ch, sh, 0.0], [sh, ch, 0.0], [0.0, 0.0, 1.0]])


def rotation_matrix(angle: float) -> np.ndarray:
    """Rotation in the (x1, x2) plane."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def random_lorentz(rng: np.random.Generator, max_rapidity: float = 2.0) -> np.ndarray:
    """Random proper orthochronous transform: rotation * boost * rotation."""
    a = rng.uniform(0.0, 2.0 * math.pi)
    b = rng.uniform(0.0, 2.0 * math.pi)
    chi = rng.uniform(-max_rapidity, max_rapidity)
    return rotation_matrix(a) @ boost_matrix(chi) @ rotation_matrix(b)
