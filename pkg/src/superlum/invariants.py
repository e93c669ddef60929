"""Path phases, the two-sided exponential invariant family, and amplitudes.

A phase set is any 1-D array of real numbers, one phase per path.  The
invariant family

    P = n**(-beta) * (sum_k exp(alpha*phi_k))**gamma
                   * (sum_k exp(-alpha*phi_k))**gamma

is permutation symmetric and even under phi -> -phi for every (alpha, beta,
gamma), and multiplicative over pairwise phase sums.  Only purely imaginary
alpha keeps |P| bounded as the number of paths grows when the normalization
matches the coherent scaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import SuperluminalSegment
from .kinematics import Event1p1
from .report import CheckReport, relative_deviation


def as_phases(phases) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(phases, dtype=float))
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("a phase set is a non-empty 1-D array of reals")
    if not np.all(np.isfinite(arr)):
        raise ValueError("phases must be finite")
    return arr


@dataclass(frozen=True)
class Path:
    """Piecewise-straight trajectory with strictly increasing coordinate time."""

    vertices: tuple[Event1p1, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        if len(verts) < 2:
            raise ValueError("a path needs at least two vertices")
        for a, b in zip(verts, verts[1:]):
            if not b.t > a.t:
                raise ValueError("path vertices must have strictly increasing t")
        object.__setattr__(self, "vertices", verts)


def path_phase(p: Path, scale: float = 1.0, c: float = 1.0) -> float:
    """Dimensionless phase of a timelike path: scale times its proper time.

    Each segment contributes dt*sqrt(1 - v**2/c**2).  Segments at or above c
    raise SuperluminalSegment; the phase is additive over concatenation and
    unchanged by subluminal boosts.
    """
    total = 0.0
    for a, b in zip(p.vertices, p.vertices[1:]):
        dt = b.t - a.t
        dx = b.x - a.x
        if abs(dx) >= c * dt:
            raise SuperluminalSegment(
                f"segment speed |{dx/dt!r}| is not below c={c!r}"
            )
        total += dt * math.sqrt(1.0 - (dx / (c * dt)) ** 2)
    return scale * total


@dataclass(frozen=True)
class InvariantSpec:
    alpha: complex
    beta: float
    gamma: float


def invariant_P(spec: InvariantSpec, phases) -> complex:
    """Evaluate the invariant on a phase set.

    The two exponential sums are multiplied before the gamma power is taken,
    which keeps the value exactly real for real alpha (both sums positive)
    and for purely imaginary alpha (the product is |sum|**2 >= 0).
    """
    phi = as_phases(phases)
    n = phi.size
    alpha = complex(spec.alpha)
    splus = complex(np.sum(np.exp(alpha * phi)))
    sminus = complex(np.sum(np.exp(-alpha * phi)))
    return n ** (-spec.beta) * (splus * sminus) ** spec.gamma


def amplitude_invariant(spec: InvariantSpec) -> Callable[[Sequence[float]], complex]:
    """The invariant as a single-argument callable, for the check helpers."""
    return lambda phases: invariant_P(spec, phases)


# ---------------------------------------------------------------------------
# Axiom checks.  Each returns a CheckReport with the worst relative deviation.


def check_symmetry(
    f: Callable,
    phases,
    trials: int = 20,
    rng: np.random.Generator | None = None,
    tol: float = 1e-12,
) -> CheckReport:
    """f must be invariant under random permutations of the phase set."""
    rng = rng or np.random.default_rng(0)
    phi = as_phases(phases)
    base = complex(f(phi))
    worst = 0.0
    for _ in range(trials):
        worst = max(worst, relative_deviation(complex(f(rng.permutation(phi))), base))
    return CheckReport(
        "symmetry", worst, tol, worst <= tol, {"n": int(phi.size), "trials": trials}
    )


def check_time_reversal(f: Callable, phases, tol: float = 1e-12) -> CheckReport:
    """f must agree on the phase set and its negation."""
    phi = as_phases(phases)
    dev = relative_deviation(complex(f(phi)), complex(f(-phi)))
    return CheckReport("time_reversal", dev, tol, dev <= tol, {"n": int(phi.size)})


def pairwise_phase_sums(phases_a, phases_b) -> np.ndarray:
    a, b = as_phases(phases_a), as_phases(phases_b)
    return np.add.outer(a, b).ravel()


def check_multiplicativity(
    f: Callable, phases_a, phases_b, tol: float = 1e-9
) -> CheckReport:
    """f over all pairwise sums must factor into f(a) * f(b).

    For complex alpha the gamma powers use the principal branch, so the
    comparison is meaningful while |Im(alpha) * phi| stays well below pi;
    keep desk-scale inputs in that regime.
    """
    a, b = as_phases(phases_a), as_phases(phases_b)
    lhs = complex(f(pairwise_phase_sums(a, b)))
    rhs = complex(f(a)) * complex(f(b))
    dev = relative_deviation(lhs, rhs)
    return CheckReport(
        "multiplicativity", dev, tol, dev <= tol, {"n": int(a.size), "m": int(b.size)}
    )


# ---------------------------------------------------------------------------
# Finiteness scan.


def uniform_phase_sampler(low: float, high: float) -> Callable:
    """i.i.d. uniform phases on [low, high)."""

    def sample(rng: np.random.Generator, size) -> np.ndarray:
        return rng.uniform(low, high, size)

    sample.low, sample.high = low, high
    return sample


@dataclass(frozen=True)
class ScanResult:
    n_values: tuple[int, ...]
    median_abs: tuple[float, ...]
    slope: float
    classification: str

    def rows(self) -> list[tuple[int, float, str]]:
        return [
            (n, med, self.classification)
            for n, med in zip(self.n_values, self.median_abs)
        ]


def finiteness_scan(
    spec: InvariantSpec,
    n_values: Sequence[int],
    phase_sampler: Callable,
    trials: int = 100,
    rng: np.random.Generator | None = None,
    slope_threshold: float = 0.2,
) -> ScanResult:
    """Monte-Carlo growth scan of |P| with the number of paths.

    For each n the median of |P| over the trials is recorded; the
    least-squares slope of log median against log n classifies the spec as
    diverging (slope > threshold), vanishing (slope < -threshold) or bounded.
    This is a finite-n statement only, not a limit claim.
    """
    rng = rng or np.random.default_rng(0)
    ns = [int(n) for n in n_values]
    if len(ns) < 2 or any(n < 1 for n in ns):
        raise ValueError("need at least two positive n values")
    if trials < 1 or max(ns) > 10**4 or trials > 100:
        raise ValueError("scan budget: n <= 10**4 and trials <= 100")
    alpha = complex(spec.alpha)
    medians = []
    for n in ns:
        phi = phase_sampler(rng, (trials, n))
        splus = np.exp(alpha * phi).sum(axis=1)
        sminus = np.exp(-alpha * phi).sum(axis=1)
        vals = float(n) ** (-spec.beta) * (splus * sminus) ** spec.gamma
        medians.append(float(np.median(np.abs(vals))))
    logs = np.log(np.maximum(medians, 1e-300))
    slope = float(np.polyfit(np.log(ns), logs, 1)[0])
    if slope > slope_threshold:
        label = "diverging"
    elif slope < -slope_threshold:
        label = "vanishing"
    else:
        label = "bounded"
    return ScanResult(tuple(ns), tuple(medians), slope, label)


# ---------------------------------------------------------------------------
# Amplitudes.


@dataclass(frozen=True)
class Amplitude:
    value: complex
    n_paths: int


def amplitude(phases, alpha_mag: float = 1.0) -> Amplitude:
    """Equal-weight sum over paths of exp(i*|alpha|*phi), normalized by n.

    |value| <= 1 always.  For two paths with phases (0, delta) the detection
    probability |value|**2 equals cos(delta/2)**2.
    """
    phi = as_phases(phases)
    val = complex(np.mean(np.exp(1j * alpha_mag * phi)))
    return Amplitude(val, int(phi.size))
