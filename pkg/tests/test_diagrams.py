"""Diagram bookkeeping: speed classes, frame changes, roles, path counts."""

import json

import pytest

from superlum import (
    Boost,
    Branch,
    CyclicDiagram,
    Diagram,
    Event1p1,
    InvalidScenario,
    IsolatedEvent,
    MixedK,
    Role,
    SpeedClass,
    ZeroExtent,
    count_paths,
    count_paths_auto,
    load_fixture,
    load_scenario,
    render_svg,
    role_report,
    transform_diagram,
)
from superlum.diagrams import (
    FIXTURE_NAMES,
    classify_endpoints,
    resolved_segments,
    scenario_from_dict,
    scenario_to_dict,
    terminal_events,
)

E = Event1p1


def _diagram(events, segments, c=1.0):
    return Diagram(
        {k: E(*v) for k, v in events.items()},
        tuple(tuple(s) for s in segments),
        c=c,
    )


# ---------------------------------------------------------------------------
# Classification


def test_classify_speed_bands():
    assert classify_endpoints(E(0, 0), E(1, 0.5)) is SpeedClass.SUBLUMINAL
    assert classify_endpoints(E(0, 0), E(1, 1.0)) is SpeedClass.LUMINAL
    assert classify_endpoints(E(0, 0), E(1, 3.0)) is SpeedClass.SUPERLUMINAL
    # a simultaneous pair is the infinite-speed case
    assert classify_endpoints(E(0, 0), E(0, 1.0)) is SpeedClass.SUPERLUMINAL
    # classification only sees the ratio, not the direction of traversal
    assert classify_endpoints(E(1, 0.5), E(0, 0)) is SpeedClass.SUBLUMINAL


def test_classify_respects_c():
    assert classify_endpoints(E(0, 0), E(1, 1.5), c=2.0) is SpeedClass.SUBLUMINAL
    assert classify_endpoints(E(0, 0), E(1, 2.0), c=2.0) is SpeedClass.LUMINAL


def test_classify_tolerance_band():
    assert classify_endpoints(E(0, 0), E(1, 1.0 + 1e-12)) is SpeedClass.LUMINAL
    assert classify_endpoints(E(0, 0), E(1, 1.0 + 1e-6)) is SpeedClass.SUPERLUMINAL


def test_classify_zero_extent():
    with pytest.raises(ZeroExtent):
        classify_endpoints(E(1, 1), E(1, 1))


# ---------------------------------------------------------------------------
# Diagram construction


def test_diagram_validates_labels_and_extent():
    with pytest.raises(InvalidScenario):
        _diagram({"A": (0, 0)}, [("A", "Z")])
    with pytest.raises(ZeroExtent):
        _diagram({"A": (0, 0), "B": (0, 0)}, [("A", "B")])
    with pytest.raises(ValueError):
        _diagram({"A": (0, 0), "B": (1, 0)}, [("A", "B")], c=0.0)


def test_segments_sorted_by_start_coordinates():
    d = _diagram(
        {"A": (0, 0), "B": (1, 0), "C": (2, 0)},
        [("B", "C"), ("A", "B")],
    )
    assert d.segments == (("A", "B"), ("B", "C"))


# ---------------------------------------------------------------------------
# Frame changes


def test_transform_rejects_mismatched_K():
    sc = load_fixture("fig2a")
    with pytest.raises(MixedK):
        transform_diagram(sc.diagram, Boost(Branch.SUBLUMINAL, 0.5, K=0.25))


def test_transform_flips_direction_when_order_reverses():
    sc = load_fixture("fig2a")
    moved = transform_diagram(sc.diagram, Boost(Branch.SUBLUMINAL, 0.8))
    (seg,) = resolved_segments(moved)
    # B now precedes A in coordinate time, so the segment runs B -> A
    assert (seg.start_label, seg.end_label) == ("B", "A")
    assert moved.events["B"].t == pytest.approx(-7.0 / 3.0, rel=1e-12)
    assert moved.events["B"].x == pytest.approx(11.0 / 3.0, rel=1e-12)


def test_subluminal_boost_preserves_speed_classes():
    for name in FIXTURE_NAMES:
        d = load_fixture(name).diagram
        before = sorted(s.speed_class.value for s in resolved_segments(d))
        for v in (-0.7, 0.3, 0.9):
            after = sorted(
                s.speed_class.value
                for s in resolved_segments(
                    transform_diagram(d, Boost(Branch.SUBLUMINAL, v))
                )
            )
            assert after == before


def test_infinite_boost_makes_fig3_superluminal():
    d = load_fixture("fig3a").diagram
    assert [s.speed_class for s in resolved_segments(d)] == [
        SpeedClass.SUBLUMINAL
    ] * 3
    moved = transform_diagram(d, Boost.infinite())
    assert [s.speed_class for s in resolved_segments(moved)] == [
        SpeedClass.SUPERLUMINAL
    ] * 3


def test_round_trip_boost_restores_coordinates():
    d = load_fixture("fig5a").diagram
    b = Boost(Branch.SUBLUMINAL, 0.6)
    back = transform_diagram(transform_diagram(d, b), b.inverse())
    for label, e in d.events.items():
        assert back.events[label].t == pytest.approx(e.t, abs=1e-12)
        assert back.events[label].x == pytest.approx(e.x, abs=1e-12)


# ---------------------------------------------------------------------------
# Roles


def test_fig2_roles_and_their_swap():
    sc = load_fixture("fig2a")
    assert role_report(sc.diagram) == (
        ("A", Role.EMISSION),
        ("B", Role.ABSORPTION),
    )
    moved = transform_diagram(sc.diagram, Boost(Branch.SUBLUMINAL, 0.8))
    assert role_report(moved) == (
        ("A", Role.ABSORPTION),
        ("B", Role.EMISSION),
    )


def test_roles_ignore_slower_than_light_segments():
    # a vertical worldline emits nothing faster than light
    d = _diagram({"A": (0, 0), "B": (1, 0)}, [("A", "B")])
    assert role_report(d) == ()


def test_role_report_rejects_isolated_events():
    d = _diagram({"A": (0, 0), "B": (1, 3), "lone": (5, 5)}, [("A", "B")])
    with pytest.raises(IsolatedEvent):
        role_report(d)


# ---------------------------------------------------------------------------
# Path counting


def test_fig4_path_counts():
    sc = load_fixture("fig4a")
    count, _ = count_paths(sc.diagram, sc.source, sc.sinks)
    assert count == 1
    moved = transform_diagram(sc.diagram, Boost.infinite())
    auto_count, sets = count_paths_auto(moved)
    assert auto_count == 2
    assert terminal_events(moved) == (("M",), ("A", "B"))
    assert sets[0].paths == (("M", "A"), ("M", "B"))


def test_fig5_path_counts():
    sc = load_fixture("fig5a")
    count, ps = count_paths(sc.diagram, sc.source, sc.sinks)
    assert count == 2
    assert ps.paths == (("A", "S", "B"), ("A", "S", "B2"))
    moved = transform_diagram(sc.diagram, Boost.infinite())
    auto_count, sets = count_paths_auto(moved)
    assert auto_count == 3
    assert sets[0].source == "S"


def test_paths_may_end_on_intermediate_sinks():
    d = _diagram({"A": (0, 0), "B": (1, 0), "C": (2, 0)}, [("A", "B"), ("B", "C")])
    count, ps = count_paths(d, "A", ("B", "C"))
    assert count == 2
    assert ps.paths == (("A", "B"), ("A", "B", "C"))


def test_count_paths_validates_labels():
    d = load_fixture("fig2a").diagram
    with pytest.raises(InvalidScenario):
        count_paths(d, "Z", ("B",))
    with pytest.raises(InvalidScenario):
        count_paths(d, "A", ("Z",))
    with pytest.raises(InvalidScenario):
        count_paths(d, "A", ())


def test_cyclic_diagram_detected():
    d = _diagram({"P": (0, 0), "Q": (0, 1)}, [("P", "Q"), ("Q", "P")])
    with pytest.raises(CyclicDiagram):
        count_paths(d, "P", ("Q",))


# ---------------------------------------------------------------------------
# Scenario serialization


def test_scenario_round_trip():
    data = scenario_to_dict(load_fixture("fig3a"))
    again = scenario_to_dict(scenario_from_dict(data))
    assert again == data


def test_load_scenario_from_file(tmp_path):
    data = scenario_to_dict(load_fixture("fig4a"))
    p = tmp_path / "scene.json"
    p.write_text(json.dumps(data), encoding="utf-8")
    sc = load_scenario(p)
    assert sc.source == "A" and sc.sinks == ("B",)
    assert sc.diagram.events["M"] == E(1.0, -1.0)


def test_scenario_validation():
    with pytest.raises(InvalidScenario):
        scenario_from_dict({"events": {"A": [0, 0]}})
    with pytest.raises(InvalidScenario):
        scenario_from_dict(
            {"events": {"A": [0, 0], "B": [1, 0]}, "segments": [["A", "B"]],
             "source": "Z"}
        )
    with pytest.raises(InvalidScenario):
        load_fixture("fig9z")


def test_load_scenario_rejects_bad_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json", encoding="utf-8")
    with pytest.raises(InvalidScenario):
        load_scenario(p)


# ---------------------------------------------------------------------------
# Rendering


def test_fig2_svg_has_one_dashed_segment():
    svg = render_svg(load_fixture("fig2a").diagram)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count('stroke-dasharray="7,5"') == 1


def test_fig4_svg_renders_luminal_segments_dotted():
    svg = render_svg(load_fixture("fig4a").diagram, title="mirror bounce")
    assert svg.count('stroke-dasharray="2,4"') == 2
    assert "mirror bounce" in svg


def test_svg_labels_every_event():
    d = load_fixture("fig3a").diagram
    svg = render_svg(d)
    for label in d.events:
        assert f">{label}<" in svg
