"""Seeded verification suite spanning kinematics, invariants and sympoly.

Every check returns a CheckReport; run_suite strings them together with all
randomness drawn from one seeded generator so a fixed seed gives a
bit-identical report.  The two sabotage switches exist to demonstrate that
the suite actually bites: break_antisymmetric_term drops the W/|W| factor
from superluminal matrices (the inverse law then fails for every W), and
perturb_cauchy shifts one expansion coefficient (the factorial product
condition then fails).
"""

from __future__ import annotations

import math

import numpy as np

from . import kinematics as kin
from .invariants import (
    InvariantSpec,
    Path,
    amplitude,
    amplitude_invariant,
    check_multiplicativity,
    check_symmetry,
    check_time_reversal,
    invariant_P,
    path_phase,
)
from .kinematics import Boost, Branch, Event1p1, Event1p3
from .report import CheckReport, relative_deviation
from .sympoly import (
    CoefficientTensor,
    cauchy_condition_check,
    closed_product,
    closure_checks,
    expansion_reconstruction_check,
    newton_convolution_check,
)

IDENTITY = np.eye(2)


def _matrix_dev(M: np.ndarray, N: np.ndarray) -> float:
    return float(np.max(np.abs(M - N)))


def _random_subluminal(rng: np.random.Generator) -> float:
    return float(rng.uniform(-0.95, 0.95))


def _random_superluminal(rng: np.random.Generator) -> float:
    w = float(rng.uniform(1.05, 20.0))
    return w if rng.uniform() < 0.5 else -w


def _check_inverse_law(
    rng: np.random.Generator, branch: Branch, trials: int, tol: float,
    antisymmetric_term: bool = True,
) -> CheckReport:
    worst = 0.0
    for _ in range(trials):
        if branch is Branch.SUBLUMINAL:
            v = _random_subluminal(rng)
            fwd = kin.subluminal_matrix(v)
            back = kin.subluminal_matrix(-v)
        else:
            v = _random_superluminal(rng)
            fwd = kin.superluminal_matrix(v, antisymmetric_term=antisymmetric_term)
            back = kin.superluminal_matrix(-v, antisymmetric_term=antisymmetric_term)
        worst = max(worst, _matrix_dev(back @ fwd, IDENTITY))
    name = f"{branch.value}_inverse_law"
    return CheckReport(name, worst, tol, worst <= tol,
                       {"trials": trials, "antisymmetric_term": antisymmetric_term})


def _random_boost(rng: np.random.Generator) -> Boost:
    if rng.uniform() < 0.5:
        return Boost(Branch.SUBLUMINAL, _random_subluminal(rng))
    return Boost(Branch.SUPERLUMINAL, _random_superluminal(rng))


def _check_light_cone(rng: np.random.Generator, trials: int, tol: float) -> CheckReport:
    worst = 0.0
    for _ in range(trials):
        b = _random_boost(rng)
        e1 = Event1p1(*rng.uniform(-2, 2, 2))
        dt = float(rng.uniform(0.1, 2.0))
        e2 = Event1p1(e1.t + dt, e1.x + math.copysign(dt, rng.uniform(-1, 1)))
        s2 = kin.interval_1p1(kin.boost_1p1(e1, b), kin.boost_1p1(e2, b))
        worst = max(worst, abs(s2))
    return CheckReport("light_cone_preservation", worst, tol, worst <= tol,
                       {"trials": trials})


def _check_sign_flip_1p1(rng, trials, tol) -> CheckReport:
    worst = 0.0
    for _ in range(trials):
        b = Boost(Branch.SUPERLUMINAL, _random_superluminal(rng))
        e1 = Event1p1(*rng.uniform(-2, 2, 2))
        e2 = Event1p1(*rng.uniform(-2, 2, 2))
        s2 = kin.interval_1p1(e1, e2)
        s2p = kin.interval_1p1(kin.boost_1p1(e1, b), kin.boost_1p1(e2, b))
        worst = max(worst, relative_deviation(s2p, -s2))
    return CheckReport("interval_sign_flip_1p1", worst, tol, worst <= tol,
                       {"trials": trials})


def _check_sign_flip_1p3(rng, trials, tol) -> CheckReport:
    worst = 0.0
    for _ in range(trials):
        w = rng.uniform(-1, 1, 3)
        w *= rng.uniform(1.1, 8.0) / np.linalg.norm(w)
        e1 = Event1p3(float(rng.uniform(-2, 2)), tuple(rng.uniform(-2, 2, 3)))
        e2 = Event1p3(float(rng.uniform(-2, 2)), tuple(rng.uniform(-2, 2, 3)))
        s2 = kin.interval_nm([e2.t - e1.t], np.subtract(e2.r, e1.r))
        f1 = kin.boost_1p3_superluminal(e1, w)
        f2 = kin.boost_1p3_superluminal(e2, w)
        s2p = kin.interval_nm(np.subtract(f2.tvec, f1.tvec), [f2.x - f1.x])
        worst = max(worst, relative_deviation(s2p, -s2))
    return CheckReport("interval_sign_flip_1p3", worst, tol, worst <= tol,
                       {"trials": trials})


def _check_sub_invariance(rng, trials, tol) -> CheckReport:
    worst = 0.0
    for _ in range(trials):
        b = Boost(Branch.SUBLUMINAL, _random_subluminal(rng))
        e1 = Event1p1(*rng.uniform(-2, 2, 2))
        e2 = Event1p1(*rng.uniform(-2, 2, 2))
        s2 = kin.interval_1p1(e1, e2)
        s2p = kin.interval_1p1(kin.boost_1p1(e1, b), kin.boost_1p1(e2, b))
        worst = max(worst, relative_deviation(s2p, s2))
    return CheckReport("subluminal_interval_invariance", worst, tol, worst <= tol,
                       {"trials": trials})


def _check_branch_closure(rng, trials, tol) -> CheckReport:
    worst = 0.0
    ok = True
    for _ in range(trials):
        b1, b2 = _random_boost(rng), _random_boost(rng)
        composed = kin.compose_boosts_1p1(b1, b2)
        expect_sub = b1.branch == b2.branch
        ok = ok and (composed.branch is Branch.SUBLUMINAL) == expect_sub
        e = Event1p1(*rng.uniform(-2, 2, 2))
        direct = kin.boost_1p1(kin.boost_1p1(e, b1), b2)
        via = kin.boost_1p1(e, composed)
        scale = max(abs(direct.t), abs(direct.x), 1.0)
        worst = max(worst, abs(direct.t - via.t) / scale, abs(direct.x - via.x) / scale)
    dev = worst if ok else math.inf
    return CheckReport("branch_closure_xor", dev, tol, ok and worst <= tol,
                       {"trials": trials})


def _check_velocity_antisymmetry(rng, trials, tol) -> CheckReport:
    worst = 0.0
    for _ in range(trials):
        v1 = float(rng.uniform(-0.95, 0.95))
        v2 = float(rng.uniform(-0.95, 0.95))
        worst = max(
            worst,
            abs(
                kin.compose_velocities_1p1(v1, v2)
                + kin.compose_velocities_1p1(-v2, -v1)
            ),
        )
    return CheckReport("velocity_composition_antisymmetry", worst, tol, worst <= tol,
                       {"trials": trials})


def _check_velocity_matrix_agreement(rng, trials, tol) -> CheckReport:
    worst = 0.0
    for _ in range(trials):
        b1, b2 = _random_boost(rng), _random_boost(rng)
        u = kin.compose_velocities_1p1(float(b1.speed), float(b2.speed))
        m = kin.boost_matrix_1p1(b2) @ kin.boost_matrix_1p1(b1)
        worst = max(worst, relative_deviation(kin.velocity_of_matrix(m), u, 1.0))
    return CheckReport("velocity_matrix_agreement", worst, tol, worst <= tol,
                       {"trials": trials})


def _check_rapidity_band(rng, trials, tol) -> CheckReport:
    qpi = math.pi / 4
    ok = True
    for _ in range(trials):
        sub = kin.rapidity(Boost(Branch.SUBLUMINAL, _random_subluminal(rng)))
        ok = ok and -qpi < sub < qpi
        sup = kin.rapidity(Boost(Branch.SUPERLUMINAL, _random_superluminal(rng)))
        ok = ok and qpi < sup < 3 * qpi
    near = kin.rapidity(Boost(Branch.SUBLUMINAL, 1 - 1e-9))
    above = kin.rapidity(Boost(Branch.SUPERLUMINAL, 1 + 1e-9))
    gap = abs(above - near)
    ok = ok and gap <= tol and kin.rapidity(Boost.infinite()) == math.pi / 2
    return CheckReport("rapidity_band", gap, tol, ok, {"trials": trials})


def _check_k_extraction(tol: float) -> CheckReport:
    samples = [0.05, 0.1, 0.2, 0.4]
    worst = 0.0
    for k_true, fam in (
        (1.0, kin.lorentz_family(1.0)),
        (0.0, kin.galilean_family()),
        (-1.0, kin.lorentz_family(-1.0)),
        (1.0, kin.superluminal_family(1.0)),
    ):
        sam = [3.0, 4.0, 5.0] if fam.parity is kin.Parity.ANTISYMMETRIC else samples
        worst = max(worst, abs(kin.extract_K(fam, sam) - k_true))
    return CheckReport("k_extraction", worst, tol, worst <= tol, {})


def _check_infinite_limit(rng, trials, tol) -> CheckReport:
    worst = 0.0
    big = 1e9
    for _ in range(trials):
        e = Event1p1(*rng.uniform(-2, 2, 2))
        w = big if rng.uniform() < 0.5 else -big
        out = kin.boost_1p1(e, Boost(Branch.SUPERLUMINAL, w))
        scale = max(abs(e.t), abs(e.x), 1.0)
        worst = max(worst, abs(out.t - e.x) / scale, abs(out.x - e.t) / scale)
        e3 = Event1p3(float(rng.uniform(-2, 2)), tuple(rng.uniform(-2, 2, 3)))
        direction = rng.uniform(-1, 1, 3)
        direction /= np.linalg.norm(direction)
        out3 = kin.boost_1p3_superluminal(e3, direction * big)
        scale3 = max(abs(e3.t), float(np.max(np.abs(e3.r))), 1.0)
        worst = max(worst, abs(out3.x - e3.t) / scale3)
        worst = max(worst, float(np.max(np.abs(np.subtract(out3.tvec, e3.r)))) / scale3)
    return CheckReport("infinite_speed_limit", worst, tol, worst <= tol,
                       {"trials": trials, "speed": big})


def _random_spec(rng, complex_alpha: bool) -> InvariantSpec:
    re = float(rng.uniform(-1.0, 1.0))
    im = float(rng.uniform(-0.3, 0.3)) if complex_alpha else 0.0
    return InvariantSpec(complex(re, im), float(rng.uniform(0.0, 2.0)),
                         float(rng.uniform(-2.0, 2.0)))


def _check_invariant_axioms(rng, instances, tol) -> list[CheckReport]:
    worst_sym = worst_rev = worst_mult = 0.0
    for i in range(instances):
        spec = _random_spec(rng, complex_alpha=(i % 2 == 0))
        n, m = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        phi = rng.uniform(-1, 1, n)
        xi = rng.uniform(-1, 1, m)
        f = amplitude_invariant(spec)
        worst_sym = max(worst_sym, check_symmetry(f, phi, trials=5, rng=rng).deviation)
        worst_rev = max(worst_rev, check_time_reversal(f, phi).deviation)
        worst_mult = max(worst_mult, check_multiplicativity(f, phi, xi).deviation)
    return [
        CheckReport("invariant_symmetry", worst_sym, tol, worst_sym <= tol,
                    {"instances": instances}),
        CheckReport("invariant_time_reversal", worst_rev, tol, worst_rev <= tol,
                    {"instances": instances}),
        CheckReport("invariant_multiplicativity", worst_mult, tol, worst_mult <= tol,
                    {"instances": instances}),
    ]


def _check_sum_fails(rng, instances, floor) -> CheckReport:
    worst = math.inf
    for _ in range(instances):
        s1 = InvariantSpec(float(rng.uniform(0.2, 1.0)), float(rng.uniform(0.0, 1.0)),
                           float(rng.uniform(0.5, 2.0)))
        s2 = InvariantSpec(float(rng.uniform(0.2, 1.0)) + 1.0,
                           float(rng.uniform(0.0, 1.0)), float(rng.uniform(0.5, 2.0)))
        f1, f2 = amplitude_invariant(s1), amplitude_invariant(s2)
        phi = rng.uniform(-1, 1, int(rng.integers(2, 7)))
        xi = rng.uniform(-1, 1, int(rng.integers(2, 7)))
        rep = check_multiplicativity(lambda p: f1(p) + f2(p), phi, xi)
        worst = min(worst, rep.deviation)
    return CheckReport("sum_fails_multiplicativity", worst, floor, worst > floor,
                       {"instances": instances, "expected": "failure"})


def _check_two_path(tol: float) -> CheckReport:
    worst = 0.0
    for delta in np.linspace(0.0, 2 * math.pi, 100):
        amp = amplitude([0.0, float(delta)])
        worst = max(worst, abs(abs(amp.value) ** 2 - math.cos(delta / 2) ** 2))
    return CheckReport("two_path_interference", worst, tol, worst <= tol,
                       {"deltas": 100})


def _random_timelike_path(rng) -> Path:
    t, x = 0.0, float(rng.uniform(-1, 1))
    verts = [Event1p1(t, x)]
    for _ in range(int(rng.integers(2, 6))):
        dt = float(rng.uniform(0.2, 1.0))
        v = float(rng.uniform(-0.9, 0.9))
        t, x = t + dt, x + v * dt
        verts.append(Event1p1(t, x))
    return Path(tuple(verts))


def _check_phase_invariance(rng, trials, tol) -> CheckReport:
    worst = 0.0
    for _ in range(trials):
        p = _random_timelike_path(rng)
        b = Boost(Branch.SUBLUMINAL, _random_subluminal(rng))
        moved = Path(tuple(kin.boost_1p1(v, b) for v in p.vertices))
        worst = max(worst, relative_deviation(path_phase(moved), path_phase(p)))
    return CheckReport("phase_boost_invariance", worst, tol, worst <= tol,
                       {"trials": trials})


def _check_phase_additivity(rng, trials, tol) -> CheckReport:
    worst = 0.0
    for _ in range(trials):
        p = _random_timelike_path(rng)
        cut = len(p.vertices) // 2
        if cut < 1 or cut >= len(p.vertices) - 1:
            continue
        first = Path(p.vertices[: cut + 1])
        second = Path(p.vertices[cut:])
        worst = max(
            worst,
            relative_deviation(path_phase(first) + path_phase(second), path_phase(p)),
        )
    return CheckReport("phase_additivity", worst, tol, worst <= tol,
                       {"trials": trials})


def _check_newton(rng, instances, tol) -> CheckReport:
    worst = 0.0
    for _ in range(instances):
        n, m = int(rng.integers(9, 13)), int(rng.integers(9, 13))
        phi = rng.uniform(-1, 1, n)
        xi = rng.uniform(-1, 1, m)
        for r in range(9):
            worst = max(worst, newton_convolution_check(r, phi, xi).deviation)
    return CheckReport("newton_convolution", worst, tol, worst <= tol,
                       {"instances": instances, "r_max": 8})


def _check_cauchy(rng, tol, perturb) -> CheckReport:
    a = float(rng.uniform(0.4, 1.0))
    ct2 = CoefficientTensor((a, -a))
    ct4 = CoefficientTensor((0.6, -0.6, 0.4, -0.4), beta_prime=0.5)
    worst = 0.0
    for ct, k, s, n, m in (
        (ct2, (1, 0), (0, 1), 5, 6),
        (ct2, (1, 1), (1, 1), 5, 6),
        (ct2, (2, 1), (1, 2), 7, 5),
        (ct4, (1, 1, 0, 0), (0, 1, 0, 1), 6, 5),
        (ct4, (2, 1, 1, 0), (1, 0, 2, 1), 5, 7),
    ):
        rep = cauchy_condition_check(ct, k, s, n, m, perturb=perturb)
        worst = max(worst, rep.deviation)
    return CheckReport("cauchy_condition", worst, tol, worst <= tol,
                       {"perturb": perturb, "orders": [2, 4]})


def _check_expansion(rng, tol) -> list[CheckReport]:
    phi = rng.uniform(-1, 1, 5)
    real_ct = CoefficientTensor((0.8, -0.8), beta_prime=1.0)
    rep_real = expansion_reconstruction_check(real_ct, phi)
    imag_ct = CoefficientTensor((0.8j, -0.8j), beta_prime=1.0)
    rep_imag = expansion_reconstruction_check(imag_ct, phi)
    cross = relative_deviation(
        closed_product(imag_ct, phi),
        invariant_P(InvariantSpec(0.8j, 1.0, 1.0), phi),
    )
    dev = max(rep_imag.deviation, cross)
    return [
        CheckReport("expansion_reconstruction_real", rep_real.deviation, tol,
                    rep_real.deviation <= tol, {"alphas": "+/-0.8"}),
        CheckReport("expansion_matches_invariant", dev, tol, dev <= tol,
                    {"alphas": "+/-0.8i"}),
    ]


def _check_odd_tensor(floor: float) -> CheckReport:
    ct = CoefficientTensor((0.5, -0.5, 0.3))
    phi = np.array([0.3, 0.7, -0.2, 0.5])
    rep = check_time_reversal(lambda p: closed_product(ct, p), phi)
    return CheckReport("odd_tensor_breaks_time_reversal", rep.deviation, floor,
                       rep.deviation > floor, {"alphas": 3, "expected": "failure"})


def _check_closure(rng, tol) -> list[CheckReport]:
    f1 = amplitude_invariant(InvariantSpec(0.7, 0.4, 1.0))
    f2 = amplitude_invariant(InvariantSpec(0.3, 1.1, 2.0))
    phi = rng.uniform(-1, 1, 4)
    xi = rng.uniform(-1, 1, 3)
    return closure_checks((f1, f2), phi, xi, tol=tol)


def run_suite(
    seed: int = 0,
    tolerance: float | None = None,
    break_antisymmetric_term: bool = False,
    perturb_cauchy: float = 0.0,
) -> list[CheckReport]:
    """Run every check; a fixed seed gives a bit-identical report list.

    tolerance, when given, replaces the default pass tolerance of every
    deviation-style check; expected-failure floors are left alone.
    """
    rng = np.random.default_rng(seed)

    def tl(default: float) -> float:
        return default if tolerance is None else tolerance

    reports: list[CheckReport] = []
    reports.append(_check_inverse_law(rng, Branch.SUBLUMINAL, 200, tl(1e-10)))
    reports.append(
        _check_inverse_law(rng, Branch.SUPERLUMINAL, 200, tl(1e-10),
                           antisymmetric_term=not break_antisymmetric_term)
    )
    reports.append(_check_light_cone(rng, 400, tl(1e-10)))
    reports.append(_check_sign_flip_1p1(rng, 200, tl(1e-10)))
    reports.append(_check_sign_flip_1p3(rng, 200, tl(1e-10)))
    reports.append(_check_sub_invariance(rng, 200, tl(1e-10)))
    reports.append(_check_branch_closure(rng, 200, tl(1e-10)))
    reports.append(_check_velocity_antisymmetry(rng, 200, tl(1e-12)))
    reports.append(_check_velocity_matrix_agreement(rng, 200, tl(1e-10)))
    reports.append(_check_rapidity_band(rng, 200, tl(1e-6)))
    reports.append(_check_k_extraction(tl(1e-10)))
    reports.append(_check_infinite_limit(rng, 100, tl(1e-8)))
    reports.extend(_check_invariant_axioms(rng, 25, tl(1e-9)))
    reports.append(_check_sum_fails(rng, 10, 1e-3))
    reports.append(_check_two_path(tl(1e-12)))
    reports.append(_check_phase_invariance(rng, 100, tl(1e-10)))
    reports.append(_check_phase_additivity(rng, 100, tl(1e-12)))
    reports.append(_check_newton(rng, 10, tl(1e-9)))
    reports.append(_check_cauchy(rng, tl(1e-10), perturb_cauchy))
    reports.extend(_check_expansion(rng, tl(1e-8)))
    reports.append(_check_odd_tensor(1e-3))
    reports.extend(_check_closure(rng, tl(1e-9)))
    return reports


def suite_report(reports: list[CheckReport], seed: int, **run_params) -> dict:
    return {
        "seed": seed,
        "run_params": run_params,
        "checks": [r.to_dict() for r in reports],
        "all_passed": all(r.passed for r in reports),
    }
