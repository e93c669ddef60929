"""Spacetime scenarios: labeled events, directed segments, frame transforms.

A Diagram lives in one frame.  Segment directions follow coordinate time in
that frame; transforming a diagram re-derives directions and ordering, which
is what makes emission and absorption roles frame-dependent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from importlib import resources

from .errors import (
    CyclicDiagram,
    InvalidScenario,
    IsolatedEvent,
    MixedK,
    ZeroExtent,
)
from .kinematics import Boost, Event1p1, boost_1p1

CLASSIFY_TOL = 1e-9


class SpeedClass(Enum):
    SUBLUMINAL = "subluminal"
    LUMINAL = "luminal"
    SUPERLUMINAL = "superluminal"


class Role(Enum):
    EMISSION = "emission"
    ABSORPTION = "absorption"


@dataclass(frozen=True)
class Segment:
    start_label: str
    end_label: str
    start: Event1p1
    end: Event1p1
    speed_class: SpeedClass


def classify_endpoints(
    start: Event1p1, end: Event1p1, c: float = 1.0, tol: float = CLASSIFY_TOL
) -> SpeedClass:
    """Speed class of the straight segment between two events.

    Subluminal when |dx| < c*|dt| - tol, luminal within the tol band around
    the cone, superluminal otherwise.  dt = 0 with dx != 0 is an
    infinite-speed segment and lands superluminal.
    """
    dt = end.t - start.t
    dx = end.x - start.x
    if dt == 0.0 and dx == 0.0:
        raise ZeroExtent("segment endpoints coincide")
    if abs(dx) < c * abs(dt) - tol:
        return SpeedClass.SUBLUMINAL
    if abs(dx) <= c * abs(dt) + tol:
        return SpeedClass.LUMINAL
    return SpeedClass.SUPERLUMINAL


def classify_segment(s: Segment, c: float = 1.0, tol: float = CLASSIFY_TOL) -> SpeedClass:
    return classify_endpoints(s.start, s.end, c, tol)


def _segment_sort_key(events: Mapping[str, Event1p1], pair: tuple[str, str]):
    a, b = events[pair[0]], events[pair[1]]
    return (a.t, a.x, b.t, b.x)


@dataclass(frozen=True)
class Diagram:
    """Events plus directed segments, all in one frame with light speed c.

    Segments are stored ordered by the coordinate time of their start event
    (ties broken by the spatial coordinate).  Zero-length segments are
    rejected; segment labels must name existing events.
    """

    events: dict[str, Event1p1]
    segments: tuple[tuple[str, str], ...] = field(default=())
    c: float = 1.0

    def __post_init__(self) -> None:
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c!r}")
        segs = [tuple(p) for p in self.segments]
        for frm, to in segs:
            if frm not in self.events or to not in self.events:
                raise InvalidScenario(f"segment ({frm!r}, {to!r}) names unknown events")
            a, b = self.events[frm], self.events[to]
            if a.t == b.t and a.x == b.x:
                raise ZeroExtent(f"segment ({frm!r}, {to!r}) has zero extent")
        segs.sort(key=lambda p: _segment_sort_key(self.events, p))
        object.__setattr__(self, "segments", tuple(segs))
        object.__setattr__(self, "events", dict(self.events))


def resolved_segments(d: Diagram, tol: float = CLASSIFY_TOL) -> tuple[Segment, ...]:
    out = []
    for frm, to in d.segments:
        a, b = d.events[frm], d.events[to]
        out.append(Segment(frm, to, a, b, classify_endpoints(a, b, d.c, tol)))
    return tuple(out)


def transform_diagram(d: Diagram, b: Boost) -> Diagram:
    """Apply one boost to every event and re-derive segment directions.

    The boost's K must match the diagram's light speed (K = 1/c**2).  In the
    new frame each segment runs from the earlier endpoint to the later one;
    exactly simultaneous endpoints keep their given direction.  Subluminal
    boosts preserve every speed class; superluminal boosts swap subluminal
    with superluminal and fix luminal.
    """
    if abs(b.K * d.c * d.c - 1.0) > 1e-9:
        raise MixedK(
            f"boost K={b.K!r} is inconsistent with diagram light speed c={d.c!r}"
        )
    new_events = {label: boost_1p1(e, b) for label, e in d.events.items()}
    new_segs = []
    for frm, to in d.segments:
        if new_events[to].t < new_events[frm].t:
            frm, to = to, frm
        new_segs.append((frm, to))
    return Diagram(new_events, tuple(new_segs), d.c)


def role_report(d: Diagram) -> tuple[tuple[str, Role], ...]:
    """Emission and absorption events of the superluminal segments.

    For each superluminal-class segment, the event it leaves is an emission
    and the event it reaches is an absorption, in this frame's time order.
    Worldlines at or below c contribute no roles.  Every event must touch at
    least one segment.
    """
    touched = {label for pair in d.segments for label in pair}
    for label in d.events:
        if label not in touched:
            raise IsolatedEvent(f"event {label!r} touches no segment")
    roles = set()
    for seg in resolved_segments(d):
        if seg.speed_class is SpeedClass.SUPERLUMINAL:
            roles.add((seg.start_label, Role.EMISSION))
            roles.add((seg.end_label, Role.ABSORPTION))
    return tuple(sorted(roles, key=lambda pair: (pair[0], pair[1].value)))


@dataclass(frozen=True)
class PathSet:
    source: str
    sinks: tuple[str, ...]
    paths: tuple[tuple[str, ...], ...]


def _check_acyclic(d: Diagram) -> None:
    adjacency: dict[str, list[str]] = {label: [] for label in d.events}
    for frm, to in d.segments:
        adjacency[frm].append(to)
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {label: WHITE for label in d.events}

    def visit(node: str) -> None:
        color[node] = GRAY
        for nxt in adjacency[node]:
            if color[nxt] == GRAY:
                raise CyclicDiagram(f"directed cycle through {nxt!r}")
            if color[nxt] == WHITE:
                visit(nxt)
        color[node] = BLACK

    for label in d.events:
        if color[label] == WHITE:
            visit(label)


def count_paths(d: Diagram, source: str, sinks: Iterable[str]) -> tuple[int, PathSet]:
    """Count directed chains from source to any sink, and list them.

    A chain may continue through a sink toward another sink; every prefix
    ending on a sink counts once.  The segment graph must be acyclic.
    """
    sink_set = tuple(sorted(set(sinks)))
    if source not in d.events:
        raise InvalidScenario(f"unknown source {source!r}")
    for s in sink_set:
        if s not in d.events:
            raise InvalidScenario(f"unknown sink {s!r}")
    if not sink_set:
        raise InvalidScenario("at least one sink is required")
    _check_acyclic(d)
    adjacency: dict[str, list[str]] = {label: [] for label in d.events}
    for frm, to in d.segments:
        adjacency[frm].append(to)
    for nbrs in adjacency.values():
        nbrs.sort()
    found: list[tuple[str, ...]] = []

    def walk(node: str, trail: tuple[str, ...]) -> None:
        if node in sink_set and len(trail) > 1:
            found.append(trail)
        for nxt in adjacency[node]:
            walk(nxt, trail + (nxt,))

    walk(source, (source,))
    pathset = PathSet(source, sink_set, tuple(found))
    return len(found), pathset


def terminal_events(d: Diagram) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Labels with only outgoing segments, and labels with only incoming."""
    outdeg = {label: 0 for label in d.events}
    indeg = {label: 0 for label in d.events}
    for frm, to in d.segments:
        outdeg[frm] += 1
        indeg[to] += 1
    sources = tuple(sorted(l for l in d.events if outdeg[l] and not indeg[l]))
    sinks = tuple(sorted(l for l in d.events if indeg[l] and not outdeg[l]))
    return sources, sinks


def count_paths_auto(d: Diagram) -> tuple[int, tuple[PathSet, ...]]:
    """Path census of the current frame: chains from every pure start event
    of the segment graph to the pure end events."""
    sources, sinks = terminal_events(d)
    if not sources or not sinks:
        return 0, ()
    total = 0
    sets = []
    for src in sources:
        n, ps = count_paths(d, src, sinks)
        total += n
        sets.append(ps)
    return total, tuple(sets)


# ---------------------------------------------------------------------------
# Scenario JSON.


@dataclass(frozen=True)
class Scenario:
    diagram: Diagram
    source: str | None = None
    sinks: tuple[str, ...] = ()


def scenario_from_dict(data: Mapping) -> Scenario:
    if not isinstance(data, Mapping):
        raise InvalidScenario("scenario must be a JSON object")
    if "events" not in data or "segments" not in data:
        raise InvalidScenario("scenario requires 'events' and 'segments'")
    try:
        c = float(data.get("c", 1.0))
        events = {
            str(label): Event1p1(float(coords[0]), float(coords[1]))
            for label, coords in data["events"].items()
        }
        segments = tuple((str(a), str(b)) for a, b in data["segments"])
    except (TypeError, ValueError, IndexError) as exc:
        raise InvalidScenario(f"malformed scenario: {exc}") from exc
    diagram = Diagram(events, segments, c)
    source = data.get("source")
    sinks = tuple(str(s) for s in data.get("sinks", ()))
    if source is not None and source not in events:
        raise InvalidScenario(f"unknown source {source!r}")
    for s in sinks:
        if s not in events:
            raise InvalidScenario(f"unknown sink {s!r}")
    return Scenario(diagram, source, sinks)


def scenario_to_dict(sc: Scenario) -> dict:
    d = sc.diagram
    out: dict = {
        "c": d.c,
        "events": {label: [e.t, e.x] for label, e in sorted(d.events.items())},
        "segments": [list(pair) for pair in d.segments],
    }
    if sc.source is not None:
        out["source"] = sc.source
    if sc.sinks:
        out["sinks"] = list(sc.sinks)
    return out


def load_scenario(source: str | Path | Mapping) -> Scenario:
    if isinstance(source, Mapping):
        return scenario_from_dict(source)
    try:
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidScenario(f"invalid JSON in {source}: {exc}") from exc
    return scenario_from_dict(data)


FIXTURE_NAMES = ("fig2a", "fig3a", "fig4a", "fig5a")


def load_fixture(name: str) -> Scenario:
    """Load one of the bundled scenarios: fig2a, fig3a, fig4a, fig5a."""
    if name not in FIXTURE_NAMES:
        raise InvalidScenario(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")
    ref = resources.files("superlum").joinpath(f"scenarios/{name}.json")
    return scenario_from_dict(json.loads(ref.read_text(encoding="utf-8")))
