"""Velocity-parametrized linear spacetime transforms, both branches.

The subluminal branch is the familiar Lorentz boost.  The superluminal branch
is the second solution of the same linearity + relativity requirements: it is
antisymmetric in the velocity, carries an overall sign convention (negative by
default), and flips the sign of the spacetime interval.  Everything works in
natural units, K = 1/c**2 with c = 1 by default; operations that take raw
coordinates accept an optional c instead.

All value types are immutable and all functions are pure.  Randomness never
enters this module.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .errors import (
    BranchSpeedViolation,
    DegenerateA,
    LightSpeedResult,
    MixedK,
    NonpositiveK,
    NotConstant,
    PoleError,
    ZeroVelocity,
)

# Speeds within this relative band of c belong to neither branch.
BOUNDARY_BAND = 1e-12


class Branch(Enum):
    SUBLUMINAL = "subluminal"
    SUPERLUMINAL = "superluminal"


class Parity(Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class Event1p1:
    """Event with one time and one space coordinate."""

    t: float
    x: float

    def __post_init__(self) -> None:
        _require_finite("t", self.t)
        _require_finite("x", self.x)


@dataclass(frozen=True)
class Event1p3:
    """Event with one time coordinate and a spatial 3-vector."""

    t: float
    r: tuple[float, float, float]

    def __post_init__(self) -> None:
        _require_finite("t", self.t)
        r = tuple(float(v) for v in self.r)
        if len(r) != 3:
            raise ValueError("r must have exactly three components")
        for v in r:
            _require_finite("r component", v)
        object.__setattr__(self, "r", r)


@dataclass(frozen=True)
class SuperluminalEvent1p3:
    """Image of an Event1p3 under a superluminal transform.

    The roles of time and space are exchanged: tvec is a triple of temporal
    coordinates and x is the single remaining spatial one.  tvec is a
    coordinate triple only; no dynamical meaning is attached to it here.
    """

    tvec: tuple[float, float, float]
    x: float

    def __post_init__(self) -> None:
        tvec = tuple(float(v) for v in self.tvec)
        if len(tvec) != 3:
            raise ValueError("tvec must have exactly three components")
        for v in tvec:
            _require_finite("tvec component", v)
        object.__setattr__(self, "tvec", tvec)
        _require_finite("x", self.x)


def _speed_magnitude(speed) -> float:
    if isinstance(speed, (tuple, list, np.ndarray)):
        return float(np.linalg.norm(np.asarray(speed, dtype=float)))
    return abs(float(speed))


@dataclass(frozen=True)
class Boost:
    """A branch-tagged boost with one shared constant K = 1/c**2.

    speed is a signed scalar for 1+1 work or a 3-vector for 1+3 work.  The
    branch bound is checked at construction: subluminal needs |V| < c and
    superluminal needs |W| > c, with speeds inside a 1e-12 relative band of
    c rejected by both.  math.inf is a valid superluminal speed and denotes
    the exact infinite-speed transform (time and space axes exchanged).
    """

    branch: Branch
    speed: float | tuple[float, float, float]
    K: float = 1.0

    def __post_init__(self) -> None:
        if not (self.K > 0) or not math.isfinite(self.K):
            raise NonpositiveK(f"boosts require K > 0, got K={self.K!r}")
        if isinstance(self.speed, (tuple, list, np.ndarray)):
            vec = tuple(float(v) for v in self.speed)
            if len(vec) != 3:
                raise ValueError("vector speed must have three components")
            for v in vec:
                _require_finite("speed component", v)
            object.__setattr__(self, "speed", vec)
        mag = _speed_magnitude(self.speed)
        c = 1.0 / math.sqrt(self.K)
        if self.branch is Branch.SUBLUMINAL:
            if not mag < c * (1.0 - BOUNDARY_BAND):
                raise BranchSpeedViolation(
                    f"subluminal branch requires |V| < c: |V|={mag!r}, c={c!r}"
                )
        else:
            if not mag > c * (1.0 + BOUNDARY_BAND):
                raise BranchSpeedViolation(
                    f"superluminal branch requires |W| > c: |W|={mag!r}, c={c!r}"
                )

    @classmethod
    def infinite(cls, K: float = 1.0) -> "Boost":
        return cls(Branch.SUPERLUMINAL, math.inf, K)

    def inverse(self) -> "Boost":
        if isinstance(self.speed, tuple):
            return Boost(self.branch, tuple(-v for v in self.speed), self.K)
        return Boost(self.branch, -self.speed, self.K)


@dataclass(frozen=True)
class GeneralTransformFamily:
    """A candidate transform family given by its velocity scale function A.

    The family fixes the map (t, x) -> (A(V)*(t - kappa(V)*V*x), A(V)*(x - V*t))
    where kappa is the K expression computed from A itself.  parity declares
    whether A is even or odd under V -> -V.
    """

    A: Callable[[float], float]
    parity: Parity

    def parity_deviation(self, samples: Sequence[float]) -> float:
        """Worst relative parity violation of A over the sample velocities."""
        worst = 0.0
        for v in samples:
            a, am = self.A(v), self.A(-v)
            diff = a - am if self.parity is Parity.SYMMETRIC else a + am
            scale = max(abs(a), abs(am), 1e-300)
            worst = max(worst, abs(diff) / scale)
        return worst


def lorentz_family(K: float = 1.0) -> GeneralTransformFamily:
    """Symmetric family A(V) = 1/sqrt(1 - K*V**2); K may be <= 0 here."""
    return GeneralTransformFamily(
        A=lambda v: 1.0 / math.sqrt(1.0 - K * v * v), parity=Parity.SYMMETRIC
    )


def galilean_family() -> GeneralTransformFamily:
    return GeneralTransformFamily(A=lambda v: 1.0, parity=Parity.SYMMETRIC)


def superluminal_family(
    K: float = 1.0, positive_convention: bool = False
) -> GeneralTransformFamily:
    """Antisymmetric family A(W) = -(W/|W|)/sqrt(K*W**2 - 1)."""
    sign = 1.0 if positive_convention else -1.0

    def scale(w: float) -> float:
        return sign * math.copysign(1.0, w) / math.sqrt(K * w * w - 1.0)

    return GeneralTransformFamily(A=scale, parity=Parity.ANTISYMMETRIC)


# ---------------------------------------------------------------------------
# 1+1 matrices and boosts.  Matrices act on column vectors (t, x).


def subluminal_matrix(V: float, K: float = 1.0) -> np.ndarray:
    if not (K > 0):
        raise NonpositiveK(f"matrix form requires K > 0, got {K!r}")
    c = 1.0 / math.sqrt(K)
    if not abs(V) < c * (1.0 - BOUNDARY_BAND):
        raise BranchSpeedViolation(f"|V|={abs(V)!r} is not below c={c!r}")
    g = 1.0 / math.sqrt(1.0 - K * V * V)
    return np.array([[g, -g * K * V], [-g * V, g]])


def superluminal_matrix(
    W: float,
    K: float = 1.0,
    *,
    positive_convention: bool = False,
    antisymmetric_term: bool = True,
) -> np.ndarray:
    """Matrix of the superluminal boost, determinant -1.

    The default convention takes the overall sign negative.  The W/|W| factor
    is what makes the family antisymmetric and the inverse law hold;
    antisymmetric_term=False builds the deliberately broken variant (then
    boost(-W) followed by boost(W) is -identity, a point reflection, for
    every W).
    """
    if not (K > 0):
        raise NonpositiveK(f"matrix form requires K > 0, got {K!r}")
    conv = 1.0 if positive_convention else -1.0
    c = 1.0 / math.sqrt(K)
    if math.isinf(W):
        if not antisymmetric_term:
            raise ValueError("the broken variant has no infinite-speed limit")
        rc = 1.0 / c
        return np.array([[0.0, -conv * rc], [-conv * c, 0.0]])
    if not abs(W) > c * (1.0 + BOUNDARY_BAND):
        raise BranchSpeedViolation(f"|W|={abs(W)!r} is not above c={c!r}")
    a = conv / math.sqrt(K * W * W - 1.0)
    if antisymmetric_term:
        a *= math.copysign(1.0, W)
    return np.array([[a, -a * K * W], [-a * W, a]])


def boost_matrix_1p1(
    b: Boost, *, positive_convention: bool = False, antisymmetric_term: bool = True
) -> np.ndarray:
    if isinstance(b.speed, tuple):
        raise TypeError("1+1 operations require a scalar-speed boost")
    if b.branch is Branch.SUBLUMINAL:
        return subluminal_matrix(b.speed, b.K)
    return superluminal_matrix(
        b.speed,
        b.K,
        positive_convention=positive_convention,
        antisymmetric_term=antisymmetric_term,
    )


def apply_matrix_1p1(M: np.ndarray, e: Event1p1) -> Event1p1:
    t, x = M @ np.array([e.t, e.x])
    return Event1p1(float(t), float(x))


def boost_1p1(e: Event1p1, b: Boost, *, positive_convention: bool = False) -> Event1p1:
    """Transform an event into the frame moving at b.speed."""
    return apply_matrix_1p1(
        boost_matrix_1p1(b, positive_convention=positive_convention), e
    )


def velocity_of_matrix(M: np.ndarray) -> float:
    """Velocity of the frame a boost matrix maps into.

    Read off as minus the ratio of the x-row coefficients (t column over
    x column); the overall scale of the matrix cancels.  A vanishing x-x
    entry, relative to its row, means the matrix is the axis swap of the
    infinite-speed frame (possibly up to rounding) and has no velocity.
    """
    scale = max(abs(float(M[1, 0])), abs(float(M[1, 1])))
    if scale == 0.0 or abs(M[1, 1]) < 1e-14 * scale:
        raise PoleError("matrix maps onto the infinite-speed frame")
    return float(-M[1, 0] / M[1, 1])


def branch_of_matrix(M: np.ndarray) -> Branch:
    det = float(M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0])
    return Branch.SUBLUMINAL if det > 0 else Branch.SUPERLUMINAL


def compose_boosts_1p1(b1: Boost, b2: Boost) -> Boost:
    """Single boost equivalent to applying b1 and then b2.

    The branch of the result follows the exclusive-or rule: composing within
    one branch lands subluminal, mixing the branches lands superluminal
    (determinants multiply).  Raises MixedK when the operands disagree on K
    and PoleError when the composition is the infinite-speed axis swap.
    """
    if b1.K != b2.K:
        raise MixedK(f"operands carry different K: {b1.K!r} vs {b2.K!r}")
    M = boost_matrix_1p1(b2) @ boost_matrix_1p1(b1)
    return Boost(branch_of_matrix(M), velocity_of_matrix(M), b1.K)


def compose_velocities_1p1(
    V1: float, V2: float, K: float = 1.0, *, light_tol: float = 1e-12
) -> float:
    """Relative velocity of frame 2 with respect to the rest frame.

    Computed as (V1 + V2)/(1 + K*V1*V2), the ratio of the composed transform's
    coefficients, in which the scale functions cancel.  Emits a
    LightSpeedResult warning when the result lies within light_tol of the
    light cone, and raises PoleError at 1 + K*V1*V2 = 0.
    """
    den = 1.0 + K * V1 * V2
    if abs(den) < 1e-15 * (1.0 + abs(K * V1 * V2)):
        raise PoleError(
            f"composition pole 1 + K*V1*V2 = 0 at V1={V1!r}, V2={V2!r}, K={K!r}"
        )
    v = (V1 + V2) / den
    if abs(abs(v) * math.sqrt(K) - 1.0) <= light_tol:
        warnings.warn(
            f"composed velocity {v!r} lies on the light cone", LightSpeedResult
        )
    return v


def rapidity(b: Boost) -> float:
    """Hyperbolic-rotation angle of a boost.

    Subluminal boosts map to arctan(V/c) in (-pi/4, pi/4); superluminal ones
    to pi/2 - arctan(c/W) in (pi/4, 3*pi/4).  The two bands meet continuously
    at the light cone, and W -> +/-inf gives pi/2 from either side, matching
    the direction-independent infinite-speed frame.  Vector speeds use their
    magnitude.
    """
    c = 1.0 / math.sqrt(b.K)
    v = _speed_magnitude(b.speed) if isinstance(b.speed, tuple) else float(b.speed)
    if b.branch is Branch.SUBLUMINAL:
        return math.atan(v / c)
    if math.isinf(v):
        return math.pi / 2.0
    return math.pi / 2.0 - math.atan(c / v)


def interval_1p1(e1: Event1p1, e2: Event1p1, c: float = 1.0) -> float:
    dt = e2.t - e1.t
    dx = e2.x - e1.x
    return c * c * dt * dt - dx * dx


# ---------------------------------------------------------------------------
# General transform family: apply and extract K.


def _k_expression(fam: GeneralTransformFamily, V: float) -> float:
    a, am = fam.A(V), fam.A(-V)
    if not (math.isfinite(a) and math.isfinite(am)) or abs(a * am) < 1e-300:
        raise DegenerateA(f"A(V)*A(-V) degenerate at V={V!r}: A(V)={a!r}, A(-V)={am!r}")
    return (a * am - 1.0) / (V * V * a * am)


def general_boost_1p1(e: Event1p1, fam: GeneralTransformFamily, V: float) -> Event1p1:
    """Apply the family's transform at velocity V without assuming a branch.

    t' = A(V)*(t - kappa*V*x) and x' = A(V)*(x - V*t), with kappa the K
    expression computed from A at this V.
    """
    if V == 0:
        raise ZeroVelocity("the general transform is undefined at V = 0")
    a = fam.A(V)
    if not math.isfinite(a) or abs(a) < 1e-300:
        raise DegenerateA(f"A({V!r}) = {a!r}")
    kappa = _k_expression(fam, V)
    return Event1p1(a * (e.t - kappa * V * e.x), a * (e.x - V * e.t))


def extract_K(
    fam: GeneralTransformFamily,
    samples: Sequence[float],
    rtol: float = 1e-8,
    atol: float = 1e-10,
) -> float:
    """Evaluate the K expression on the samples and require it constant.

    Returns the shared value; raises NotConstant when the spread exceeds
    atol + rtol * max|value|, and ZeroVelocity for a zero sample.
    """
    sam = [float(v) for v in samples]
    if len(set(sam)) < 2:
        raise ValueError("need at least two distinct sample velocities")
    if any(v == 0 for v in sam):
        raise ZeroVelocity("K extraction samples must be nonzero")
    values = [_k_expression(fam, v) for v in sam]
    spread = max(values) - min(values)
    scale = max(abs(v) for v in values)
    if spread > atol + rtol * max(1.0, scale):
        raise NotConstant(
            f"K expression varies over samples: spread={spread!r}, values={values!r}"
        )
    return float(np.mean(values))


# ---------------------------------------------------------------------------
# 1+3 transforms.


def _as_vec3(v) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise ValueError("expected a 3-vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector components must be finite")
    return arr


def boost_1p3_subluminal(e: Event1p3, V, c: float = 1.0) -> Event1p3:
    """Boost along an arbitrary direction; the component of r along V mixes
    with t and the perpendicular part is untouched.  V = 0 is the identity."""
    vel = _as_vec3(V)
    speed = float(np.linalg.norm(vel))
    if speed == 0.0:
        return Event1p3(e.t, e.r)
    if not speed < c * (1.0 - BOUNDARY_BAND):
        raise BranchSpeedViolation(f"subluminal branch requires |V| < c: |V|={speed!r}")
    r = np.asarray(e.r)
    g = 1.0 / math.sqrt(1.0 - (speed / c) ** 2)
    vr = float(vel @ r)
    rp = r - (vr / speed**2) * vel + ((vr / speed**2 - e.t) * g) * vel
    tp = g * (e.t - vr / c**2)
    return Event1p3(float(tp), tuple(rp))


def boost_1p3_superluminal(e: Event1p3, W, c: float = 1.0) -> SuperluminalEvent1p3:
    """Superluminal transform along an arbitrary direction.

    Maps (t, r) to one spatial coordinate x' along W and a temporal triple
    tvec'.  As |W| grows the result approaches x' = c*t, tvec' = r/c for
    every direction of W.
    """
    wvec = _as_vec3(W)
    w = float(np.linalg.norm(wvec))
    if not math.isfinite(w):
        raise ValueError("W must be finite; approximate the infinite-speed "
                         "transform with a large |W|")
    if not w > c * (1.0 + BOUNDARY_BAND):
        raise BranchSpeedViolation(f"superluminal branch requires |W| > c: |W|={w!r}")
    r = np.asarray(e.r)
    g = 1.0 / math.sqrt((w / c) ** 2 - 1.0)
    wr = float(wvec @ r)
    xp = (w * e.t - wr / w) * g
    tvec = (r - (wr / w**2) * wvec + ((wr / (w * c) - c * e.t / w) * g) * wvec) / c
    return SuperluminalEvent1p3(tuple(tvec), float(xp))


def interval_nm(dts: Sequence[float], drs: Sequence[float], c: float = 1.0) -> float:
    """Quadratic form with n temporal and m spatial increments:
    c**2 * sum(dt**2) - sum(dr**2)."""
    dts = np.asarray(dts, dtype=float)
    drs = np.asarray(drs, dtype=float)
    return float(c * c * np.sum(dts * dts) - np.sum(drs * drs))
