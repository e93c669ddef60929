"""Command-line front end.

Subcommands: boost, compose, diagram, verify, scan, amplitude.  Exit codes:
0 success, 1 a verification check failed, 2 bad usage or invalid input.
Reports are JSON on stdout unless --output is given; a fixed --seed makes
them bit-identical across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from .diagrams import (
    FIXTURE_NAMES,
    Scenario,
    count_paths,
    count_paths_auto,
    load_fixture,
    load_scenario,
    resolved_segments,
    role_report,
    terminal_events,
    transform_diagram,
)
from .errors import SuperlumError
from .invariants import (
    InvariantSpec,
    amplitude,
    finiteness_scan,
    uniform_phase_sampler,
)
from .kinematics import (
    Boost,
    Branch,
    Event1p1,
    Event1p3,
    boost_1p1,
    boost_1p3_subluminal,
    boost_1p3_superluminal,
    compose_boosts_1p1,
    compose_velocities_1p1,
)
from .render import render_svg
from .verify import run_suite, suite_report


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(data: dict, output: str | None) -> None:
    _emit(json.dumps(data, indent=2, sort_keys=True), output)


def _parse_boost(obj: dict, K: float) -> Boost:
    branch = Branch(obj["branch"])
    speed = obj["speed"]
    if isinstance(speed, list):
        speed = tuple(float(v) for v in speed)
    else:
        speed = float(speed)
    return Boost(branch, speed, K)


def cmd_boost(args: argparse.Namespace) -> int:
    data = _read_json(args.input)
    c = float(data.get("c", args.c))
    event = [float(v) for v in data["event"]]
    spec = data["boost"]
    if len(event) == 2:
        b = _parse_boost(spec, 1.0 / (c * c))
        out = boost_1p1(Event1p1(*event), b)
        _dump({"event": [out.t, out.x], "branch": b.branch.value}, args.output)
        return 0
    if len(event) != 4:
        raise SuperlumError("event must have 2 or 4 coordinates")
    e = Event1p3(event[0], tuple(event[1:]))
    speed = spec["speed"]
    if not isinstance(speed, list) or len(speed) != 3:
        raise SuperlumError("1+3 boosts need a 3-vector speed")
    if Branch(spec["branch"]) is Branch.SUBLUMINAL:
        out = boost_1p3_subluminal(e, speed, c)
        _dump({"event": [out.t, *out.r], "branch": "subluminal"}, args.output)
    else:
        sup = boost_1p3_superluminal(e, speed, c)
        _dump({"tvec": list(sup.tvec), "x": sup.x, "branch": "superluminal"},
              args.output)
    return 0


def cmd_compose(args: argparse.Namespace) -> int:
    data = _read_json(args.input)
    c = float(data.get("c", args.c))
    K = 1.0 / (c * c)
    boosts = data["boosts"]
    if len(boosts) != 2:
        raise SuperlumError("compose expects exactly two boosts")
    b1, b2 = (_parse_boost(obj, K) for obj in boosts)
    composed = compose_boosts_1p1(b1, b2)
    velocity = compose_velocities_1p1(float(b1.speed), float(b2.speed), K)
    _dump(
        {
            "branch": composed.branch.value,
            "speed": composed.speed,
            "K": composed.K,
            "velocity_composition": velocity,
        },
        args.output,
    )
    return 0


def _diagram_report(sc: Scenario) -> dict:
    d = sc.diagram
    roles = [
        {"event": label, "role": role.value} for label, role in role_report(d)
    ]
    sources, sinks = terminal_events(d)
    auto_count, auto_sets = count_paths_auto(d)
    report = {
        "c": d.c,
        "events": {label: [e.t, e.x] for label, e in sorted(d.events.items())},
        "segments": [
            {"from": s.start_label, "to": s.end_label,
             "speed_class": s.speed_class.value}
            for s in resolved_segments(d)
        ],
        "roles": roles,
        "frame": {
            "sources": list(sources),
            "sinks": list(sinks),
            "path_count": auto_count,
            "paths": [list(p) for ps in auto_sets for p in ps.paths],
        },
    }
    if sc.source is not None and sc.sinks:
        declared_count, declared = count_paths(d, sc.source, sc.sinks)
        report["declared"] = {
            "source": sc.source,
            "sinks": list(sc.sinks),
            "path_count": declared_count,
            "paths": [list(p) for p in declared.paths],
        }
    return report


def cmd_diagram(args: argparse.Namespace) -> int:
    if args.input in FIXTURE_NAMES:
        sc = load_fixture(args.input)
    else:
        sc = load_scenario(args.input)
    d = sc.diagram
    K = 1.0 / (d.c * d.c)
    if args.infinite:
        d = transform_diagram(d, Boost.infinite(K))
    elif args.boost_v is not None:
        d = transform_diagram(d, Boost(Branch.SUBLUMINAL, args.boost_v, K))
    elif args.boost_w is not None:
        d = transform_diagram(d, Boost(Branch.SUPERLUMINAL, args.boost_w, K))
    sc = Scenario(d, sc.source, sc.sinks)
    report = _diagram_report(sc)
    if args.format == "svg":
        svg = render_svg(d, title=args.title)
        if args.output:
            Path(args.output).write_text(svg, encoding="utf-8")
        else:
            sys.stdout.write(svg + "\n")
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suite(
        seed=args.seed,
        tolerance=args.tolerance,
        break_antisymmetric_term=args.break_antisymmetric_term,
        perturb_cauchy=args.perturb_cauchy,
    )
    payload = suite_report(
        reports,
        args.seed,
        tolerance=args.tolerance,
        break_antisymmetric_term=args.break_antisymmetric_term,
        perturb_cauchy=args.perturb_cauchy,
    )
    _dump(payload, args.output)
    return 0 if payload["all_passed"] else 1


def cmd_scan(args: argparse.Namespace) -> int:
    data = _read_json(args.input) if args.input else {}
    alpha = data.get("alpha", [0.0, 1.0])
    if isinstance(alpha, list):
        alpha = complex(float(alpha[0]), float(alpha[1]))
    else:
        alpha = complex(float(alpha), 0.0)
    spec = InvariantSpec(alpha, float(data.get("beta", 2.0)),
                         float(data.get("gamma", 1.0)))
    sampler_cfg = data.get("sampler", {})
    sampler = uniform_phase_sampler(
        float(sampler_cfg.get("low", 0.0)),
        float(sampler_cfg.get("high", np.pi)),
    )
    result = finiteness_scan(
        spec,
        [int(n) for n in data.get("n_values", (100, 1000, 10000))],
        sampler,
        trials=int(data.get("trials", 100)),
        rng=np.random.default_rng(args.seed),
    )
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "median_abs_P", "classification"])
    for n, med, label in result.rows():
        writer.writerow([n, repr(med), label])
    _emit(buf.getvalue(), args.output)
    return 0


def cmd_amplitude(args: argparse.Namespace) -> int:
    data = _read_json(args.input)
    amp = amplitude(data["phases"], float(data.get("alpha_mag", 1.0)))
    _dump(
        {
            "value": [amp.value.real, amp.value.imag],
            "probability": abs(amp.value) ** 2,
            "n_paths": amp.n_paths,
        },
        args.output,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superlum",
        description="Subluminal and superluminal boosts, spacetime diagrams, "
        "and path-count invariants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
        if needs_input:
            p.add_argument("--input", required=True, help="input JSON path")
        p.add_argument("--output", help="output file (default stdout)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tolerance", type=float, default=None)
        p.add_argument("--c", type=float, default=1.0, help="light speed")

    p_boost = sub.add_parser("boost", help="transform one event")
    common(p_boost)
    p_boost.set_defaults(func=cmd_boost)

    p_compose = sub.add_parser("compose", help="compose two boosts")
    common(p_compose)
    p_compose.set_defaults(func=cmd_compose)

    p_diagram = sub.add_parser(
        "diagram", help="render a scenario and report roles and paths"
    )
    p_diagram.add_argument(
        "--input", required=True,
        help=f"scenario JSON path or fixture name {FIXTURE_NAMES}",
    )
    p_diagram.add_argument("--output", help="SVG output path (default stdout)")
    p_diagram.add_argument("--format", choices=("svg", "json"), default="svg")
    p_diagram.add_argument("--seed", type=int, default=0)
    p_diagram.add_argument("--tolerance", type=float, default=None)
    p_diagram.add_argument("--c", type=float, default=1.0)
    p_diagram.add_argument("--title", default=None)
    group = p_diagram.add_mutually_exclusive_group()
    group.add_argument("--boost-v", type=float, default=None,
                       help="apply a subluminal boost before reporting")
    group.add_argument("--boost-w", type=float, default=None,
                       help="apply a superluminal boost before reporting")
    group.add_argument("--infinite", action="store_true",
                       help="apply the infinite-speed axis swap")
    p_diagram.set_defaults(func=cmd_diagram)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    common(p_verify, needs_input=False)
    p_verify.add_argument(
        "--break-antisymmetric-term", action="store_true",
        help="sabotage: drop the W/|W| factor from superluminal matrices",
    )
    p_verify.add_argument(
        "--perturb-cauchy", type=float, default=0.0, metavar="EPS",
        help="sabotage: add EPS to one expansion coefficient",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="finiteness scan over path counts")
    p_scan.add_argument("--input", help="scan parameters JSON path")
    p_scan.add_argument("--output", help="CSV output path (default stdout)")
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--tolerance", type=float, default=None)
    p_scan.add_argument("--c", type=float, default=1.0)
    p_scan.set_defaults(func=cmd_scan)

    p_amp = sub.add_parser("amplitude", help="sum a phase set into an amplitude")
    common(p_amp)
    p_amp.set_defaults(func=cmd_amplitude)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SuperlumError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, KeyError, ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
