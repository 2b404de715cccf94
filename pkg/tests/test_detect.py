"""Obstruction detectors, certified materialization, and derived classifiers."""
from __future__ import annotations

from dataclasses import replace

import pytest

from hellymetric import (
    Graph,
    HalfInt,
    MaterializeError,
    NotHellyError,
    ObstructionWitness,
    apsp,
    build_obstruction,
    complete_graph,
    cycle_graph,
    detect_H1,
    detect_H1_or_H3,
    detect_H2,
    family_cells,
    family_hyperbolicity,
    family_size,
    half_hyperbolic_equivalents,
    hb_by_obstructions,
    hb_by_thinness,
    hyperbolicity,
    king_grid,
    materialize,
    path_graph,
    power_characterization,
    resolve_window_quadruple,
)
from hellymetric.families import cell_dist


def diamond():
    return build_obstruction("H2", 0, 0).graph


def sun():
    return build_obstruction("H3", 0, 0).graph


def assert_witness_isometric(g, w: ObstructionWitness) -> None:
    """The placement realizes the family cell metric inside g, exactly."""
    assert len(w.cells) == len(w.placement) == family_size(w.family, w.k, w.l)
    assert w.materialized == tuple(sorted(set(w.placement)))
    assert len(set(w.placement)) == len(w.placement)
    dm = apsp(g)
    for i, ci in enumerate(w.cells):
        for j in range(i + 1, len(w.cells)):
            assert dm.d(w.placement[i], w.placement[j]) == cell_dist(ci, w.cells[j])


# ---------------------------------------------------------------------------
# single-probe golden cases
# ---------------------------------------------------------------------------

def test_diamond_fires_half_probe_at_zero() -> None:
    g = diamond()
    w = detect_H2(g, 0)
    assert w is not None
    assert (w.family, w.k, w.l) == ("H2", 0, 0)
    assert w.materialized == (0, 1, 2, 3)
    assert_witness_isometric(g, w)
    assert detect_H2(g, 1) is None
    assert detect_H1_or_H3(g, 0) is None  # hyperbolicity is only 1/2


def test_sun_fires_wide_probe_as_h3() -> None:
    g = sun()
    w = detect_H1_or_H3(g, 0)
    assert w is not None
    assert (w.family, w.k, w.l) == ("H3", 0, 0)
    assert w.materialized == tuple(range(8))
    assert_witness_isometric(g, w)
    dm = apsp(g)
    x, y, z, t = w.corners
    assert dm.d(x, z) >= 3 and dm.d(y, t) >= 3
    assert detect_H1_or_H3(g, 1) is None


def test_king_grid_inner_square_fires_h1() -> None:
    g = king_grid(3, 3)
    w = detect_H1(g, 0)
    assert w is not None
    assert (w.family, w.k, w.l) == ("H1", 1, 1)
    assert w.corners == (1, 3, 7, 5)
    assert w.materialized == (1, 3, 4, 5, 7)
    assert_witness_isometric(g, w)
    assert detect_H1(g, 1) is None  # 3x3 is too small for a side-2 square


def test_h1_family_detects_itself() -> None:
    fg = build_obstruction("H1", 2, 2)
    w = detect_H1(fg.graph, 1)
    assert w is not None
    assert (w.family, w.k, w.l) == ("H1", 2, 2)
    assert w.materialized == tuple(range(13))  # the copy is the whole graph
    assert_witness_isometric(fg.graph, w)


def test_h2_family_detects_itself_narrow() -> None:
    fg = build_obstruction("H2", 1, 1)
    g = fg.graph
    w = detect_H2(g, 1)
    assert w is not None
    assert (w.family, w.k, w.l) == ("H2", 1, 1)
    dm = apsp(g)
    x, y, z, t = w.corners
    assert (dm.d(x, y), dm.d(y, z), dm.d(z, t), dm.d(t, x)) == (2, 2, 2, 2)
    assert sorted((dm.d(x, z), dm.d(y, t))) == [3, 4]
    assert w.materialized == tuple(range(10))
    assert_witness_isometric(g, w)


def test_phase_two_window_on_h3_family() -> None:
    fg = build_obstruction("H3", 1, 1)
    w = detect_H1_or_H3(fg.graph, 1)
    assert w is not None
    assert w.family in ("H1", "H3")
    assert family_hyperbolicity(w.family, w.k, w.l) == HalfInt.from_int(2)
    assert_witness_isometric(fg.graph, w)


def test_block_graphs_never_fire() -> None:
    edges = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)]
    g_blocks = Graph(7, edges, name="blocks")
    for g in (path_graph(8), complete_graph(5), g_blocks):
        for k in range(3):
            assert detect_H1(g, k) is None
            assert detect_H2(g, k) is None
            assert detect_H1_or_H3(g, k) is None


def test_probe_parameter_validation() -> None:
    g = king_grid(3, 3)
    for det in (detect_H1, detect_H2, detect_H1_or_H3):
        with pytest.raises(ValueError, match="probe parameter"):
            det(g, -1)


# ---------------------------------------------------------------------------
# sound-only behavior on non-Helly input
# ---------------------------------------------------------------------------

def test_non_helly_scan_may_fail_with_infeasible_disks() -> None:
    g = cycle_graph(4)
    with pytest.raises(MaterializeError) as exc:
        detect_H1(g, 0)
    cons = exc.value.constraints
    assert len(cons) >= 4
    assert all(c.radius == 1 for c in cons)
    assert {c.center for c in cons} == {0, 1, 2, 3}


def test_non_helly_scan_may_simply_not_fire() -> None:
    # C5 has unique midpoints, so no probe pattern ever assembles;
    # detectors stay quiet instead of raising about Hellyness
    g = cycle_graph(5)
    for k in range(2):
        assert detect_H1(g, k) is None
        assert detect_H2(g, k) is None
        assert detect_H1_or_H3(g, k) is None


# ---------------------------------------------------------------------------
# materialize: dispatch, fixed point, and rejection
# ---------------------------------------------------------------------------

def test_materialize_is_a_fixed_point_of_detection() -> None:
    cases = [
        (diamond(), detect_H2, 0),
        (sun(), detect_H1_or_H3, 0),
        (king_grid(3, 3), detect_H1, 0),
        (king_grid(4, 4), detect_H1_or_H3, 0),
        (build_obstruction("H2", 1, 1).graph, detect_H2, 1),
        (build_obstruction("H1", 3, 3).graph, detect_H1_or_H3, 2),
        (build_obstruction("H3", 1, 1).graph, detect_H1_or_H3, 1),
    ]
    for g, det, k in cases:
        w = det(g, k)
        assert w is not None
        assert materialize(g, w) == w.materialized


def test_materialize_wide_inner_pair_variant() -> None:
    # corners of H1(2,2) satisfy the wide H2 scan variant (all sides 2,
    # both inner-pair distances 4); the rebuilt copy is the restricted window
    fg = build_obstruction("H1", 2, 2)
    corners = (
        fg.cell_index((0, 0)),
        fg.cell_index((0, 4)),
        fg.cell_index((4, 4)),
        fg.cell_index((4, 0)),
    )
    w = ObstructionWitness("H2", 1, 1, corners, (), (), ())
    got = materialize(fg.graph, w)
    expected = tuple(
        sorted(fg.cell_index((s + 1, t + 1)) for s, t in family_cells("H2", 1, 1))
    )
    assert got == expected
    assert len(got) == family_size("H2", 1, 1) == 10


def test_materialize_rejects_corners_fitting_no_pattern() -> None:
    g = king_grid(3, 3)
    w = detect_H1(g, 0)
    assert w is not None
    fake = replace(w, corners=(0, 1, 2, 3))
    with pytest.raises(MaterializeError, match="no detection pattern"):
        materialize(g, fake)


def test_materialize_rejects_wrong_family_resolution() -> None:
    g = sun()
    w = detect_H1_or_H3(g, 0)
    assert w is not None and w.family == "H3"
    fake = replace(w, family="H1", k=1, l=1)
    with pytest.raises(MaterializeError, match="resolves to"):
        materialize(g, fake)


def test_resolve_window_rejects_out_of_window_quadruple() -> None:
    g = king_grid(3, 3)
    with pytest.raises(ValueError, match="does not fit the probe window"):
        resolve_window_quadruple(g, 0, (0, 1, 2, 3))


# ---------------------------------------------------------------------------
# derived hyperbolicity routes
# ---------------------------------------------------------------------------

def test_hb_by_obstructions_goldens() -> None:
    assert hb_by_obstructions(diamond()) == HalfInt(1)
    assert hb_by_obstructions(sun()) == HalfInt.from_int(1)
    assert hb_by_obstructions(king_grid(3, 3)) == HalfInt.from_int(1)
    assert hb_by_obstructions(path_graph(6)) == HalfInt(0)
    assert hb_by_obstructions(complete_graph(4)) == HalfInt(0)


@pytest.mark.parametrize(
    "family,k,l",
    [("H1", 1, 1), ("H1", 2, 2), ("H2", 0, 0), ("H2", 1, 1), ("H3", 0, 0), ("H3", 1, 1)],
)
def test_hb_routes_agree_on_families(family: str, k: int, l: int) -> None:
    g = build_obstruction(family, k, l).graph
    want = family_hyperbolicity(family, k, l)
    assert hb_by_obstructions(g) == want
    assert hb_by_thinness(g) == want
    direct, _ = hyperbolicity(g)
    assert direct == want


def test_probe_log_records_descending_sweep() -> None:
    probes: list = []
    value = hb_by_obstructions(diamond(), probes_out=probes)
    assert value == HalfInt(1)
    thresholds = [thr for thr, _ in probes]
    assert thresholds == [HalfInt(2), HalfInt(1), HalfInt(0)]
    assert probes[0][1] is None and probes[1][1] is None
    assert probes[2][1] is not None  # the half-probe at 0 fires on a diamond


def test_hb_by_thinness_on_king_grids() -> None:
    assert hb_by_thinness(king_grid(3, 3)) == HalfInt.from_int(1)
    assert hb_by_thinness(diamond()) == HalfInt(1)
    assert hb_by_thinness(path_graph(5)) == HalfInt(0)


def test_aggregates_reject_non_helly_input() -> None:
    g = cycle_graph(5)
    with pytest.raises(NotHellyError):
        hb_by_obstructions(g)
    with pytest.raises(NotHellyError):
        hb_by_thinness(g)
    with pytest.raises(NotHellyError):
        half_hyperbolic_equivalents(g)
    with pytest.raises(NotHellyError):
        power_characterization(g, 1)
    # with the explicit override the sweep runs (soundness then rests on the caller)
    hb_by_obstructions(g, assume_helly=True)


# ---------------------------------------------------------------------------
# power-graph characterization
# ---------------------------------------------------------------------------

def test_power_characterization_goldens() -> None:
    s4 = sun()
    assert power_characterization(s4, HalfInt(1)) is False  # h = 1 > 1/2
    assert power_characterization(s4, 1) is True
    assert power_characterization(s4, 0) is False
    h2 = build_obstruction("H2", 1, 1).graph  # h = 3/2
    assert power_characterization(h2, 1) is False
    assert power_characterization(h2, HalfInt(3)) is True
    assert power_characterization(diamond(), 0) is False
    assert power_characterization(diamond(), HalfInt(1)) is True
    assert power_characterization(path_graph(7), 0) is True
    with pytest.raises(ValueError, match="threshold"):
        power_characterization(path_graph(3), HalfInt(-1))


def test_power_characterization_monotone_in_threshold() -> None:
    g = king_grid(3, 3)  # h = 1
    answers = [power_characterization(g, HalfInt(td)) for td in range(5)]
    assert answers == [False, False, True, True, True]
    assert answers == sorted(answers)


# ---------------------------------------------------------------------------
# half-hyperbolicity equivalents
# ---------------------------------------------------------------------------

EQUIV_KEYS = {
    "hyperbolicity_le_half",
    "no_induced_c4_or_sun_tips",
    "g_and_square_c4_free",
    "thinness_le_1_no_sun_tips",
}


def test_equivalents_all_false_above_half() -> None:
    for g in (king_grid(3, 3), sun()):
        eq = half_hyperbolic_equivalents(g)
        assert set(eq) == EQUIV_KEYS
        assert set(eq.values()) == {False}


def test_equivalents_all_true_at_or_below_half() -> None:
    for g in (path_graph(6), complete_graph(5), diamond()):
        eq = half_hyperbolic_equivalents(g)
        assert set(eq) == EQUIV_KEYS
        assert set(eq.values()) == {True}
