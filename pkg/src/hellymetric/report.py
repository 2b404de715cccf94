"""Whole-graph analysis reports, claim verification, and export helpers.

JSON convention: every half-integral quantity is serialized as its doubled
integer under a key ending in ``_doubled``; no floats appear anywhere, and
timings are integer milliseconds.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .detect import (
    ObstructionWitness,
    detect_H1_or_H3,
    detect_H2,
    half_hyperbolic_equivalents,
    hb_by_obstructions,
    hb_by_thinness,
    power_characterization,
)
from .distances import DistanceMatrix, apsp
from .families import FamilyGraph, cell_to_host, host_side
from .graphs import Graph
from .halfint import HalfInt
from .helly import (
    DiskConstraint,
    EnumerationBudgetError,
    is_helly,
    is_pseudo_modular,
)
from .hull import HullBudgetError, hull, hull_validate
from .hyperbolicity import (
    HyperbolicityWitness,
    ThinnessWitness,
    hyperbolicity,
    interval_thinness,
)


@dataclass
class AnalysisReport:
    """Everything the batch analyzer knows about one input graph."""

    name: str
    n: int
    m: int
    diameter: int
    radius: int
    is_helly: bool
    helly_counterexample: tuple[DiskConstraint, ...] | None
    is_pseudo_modular: bool | None
    pseudo_modular_note: str | None
    hyperbolicity: HalfInt
    hyperbolicity_witness: HyperbolicityWitness
    thinness: int
    thinness_witness: ThinnessWitness
    hb_by_obstructions: HalfInt | None
    hb_by_thinness: HalfInt | None
    power_results: tuple[tuple[HalfInt, bool], ...] | None
    equivalents: dict[str, bool] | None
    classifiers_agree: bool | None
    probes: tuple[tuple[HalfInt, ObstructionWitness | None], ...] | None
    hull: dict[str, object] | None
    timings_ms: dict[str, int]


def _since(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def build_analysis(
    g: Graph,
    *,
    threads: int = 1,
    include_hull: bool = True,
    dm: DistanceMatrix | None = None,
) -> AnalysisReport:
    """Run every analysis phase on one connected graph.

    On non-Helly input the derived classifiers, the probe sweep, and the
    equivalence panel are skipped (reported as absent); the direct
    hyperbolicity and thinness phases always run.  The hull phase is
    attempted unless disabled and degrades to a "skipped" note when the
    enumeration budget stops it.
    """
    timings: dict[str, int] = {}
    t0 = time.perf_counter()
    dm = dm or apsp(g)
    timings["apsp"] = _since(t0)

    t0 = time.perf_counter()
    hc = is_helly(g, dm=dm)
    timings["helly"] = _since(t0)

    t0 = time.perf_counter()
    pm: bool | None
    pm_note: str | None = None
    try:
        pm = bool(is_pseudo_modular(g, dm=dm))
    except EnumerationBudgetError as exc:
        pm = None
        pm_note = str(exc)
    timings["pseudo_modular"] = _since(t0)

    t0 = time.perf_counter()
    hb, hw = hyperbolicity(g, dm=dm, threads=threads)
    timings["hyperbolicity"] = _since(t0)

    t0 = time.perf_counter()
    tau, tw = interval_thinness(g, dm=dm)
    timings["thinness"] = _since(t0)

    ob: HalfInt | None = None
    th: HalfInt | None = None
    power: tuple[tuple[HalfInt, bool], ...] | None = None
    eq: dict[str, bool] | None = None
    agree: bool | None = None
    probes: tuple[tuple[HalfInt, ObstructionWitness | None], ...] | None = None
    t0 = time.perf_counter()
    if hc:
        probe_log: list[tuple[HalfInt, ObstructionWitness | None]] = []
        ob = hb_by_obstructions(g, dm=dm, assume_helly=True, probes_out=probe_log)
        probes = tuple(probe_log)
        th = hb_by_thinness(g, dm=dm, assume_helly=True)
        power_list = []
        power_ok = True
        for td in range(0, hb.doubled + 3):
            t = HalfInt(td)
            within = power_characterization(g, t, dm=dm, assume_helly=True)
            power_list.append((t, within))
            power_ok = power_ok and within == (hb <= t)
        power = tuple(power_list)
        eq = half_hyperbolic_equivalents(g, dm=dm, assume_helly=True)
        eq_vals = set(eq.values())
        eq_ok = len(eq_vals) == 1 and next(iter(eq_vals)) == (hb <= HalfInt(1))
        agree = ob == hb and th == hb and power_ok and eq_ok
    timings["classifiers"] = _since(t0)

    hull_info: dict[str, object] | None = None
    t0 = time.perf_counter()
    if include_hull:
        try:
            res = hull(g, dm=dm)
            checks = hull_validate(g, dm=dm, result=res)
            hull_info = {
                "n": res.graph.n,
                "m": res.graph.m,
                "checks": checks,
            }
        except HullBudgetError as exc:
            hull_info = {"skipped": str(exc)}
    timings["hull"] = _since(t0)

    return AnalysisReport(
        name=g.name or "G",
        n=g.n,
        m=g.m,
        diameter=dm.diam,
        radius=dm.rad,
        is_helly=bool(hc),
        helly_counterexample=hc.counterexample,
        is_pseudo_modular=pm,
        pseudo_modular_note=pm_note,
        hyperbolicity=hb,
        hyperbolicity_witness=hw,
        thinness=tau,
        thinness_witness=tw,
        hb_by_obstructions=ob,
        hb_by_thinness=th,
        power_results=power,
        equivalents=eq,
        classifiers_agree=agree,
        probes=probes,
        hull=hull_info,
        timings_ms=timings,
    )


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def witness_to_dict(
    w: ObstructionWitness, *, include_materialized: bool = True
) -> dict[str, object]:
    out: dict[str, object] = {
        "family": w.family,
        "k": w.k,
        "l": w.l,
        "corners": list(w.corners),
    }
    if include_materialized:
        out["materialized"] = list(w.materialized)
        out["cells"] = [list(c) for c in w.cells]
        out["placement"] = list(w.placement)
    return out


def report_to_dict(r: AnalysisReport) -> dict[str, object]:
    """JSON-ready dict with a stable key set (absent phases stay as null)."""
    cls: dict[str, object] | None = None
    if r.hb_by_obstructions is not None:
        assert r.hb_by_thinness is not None and r.power_results is not None
        cls = {
            "direct_doubled": r.hyperbolicity.doubled,
            "by_obstructions_doubled": r.hb_by_obstructions.doubled,
            "by_thinness_doubled": r.hb_by_thinness.doubled,
            "power": [
                {"threshold_doubled": t.doubled, "within": within}
                for t, within in r.power_results
            ],
            "agree": r.classifiers_agree,
        }
    probes: list[dict[str, object]] | None = None
    if r.probes is not None:
        probes = [
            {
                "threshold_doubled": t.doubled,
                "fired": w is not None,
                "witness": witness_to_dict(w) if w is not None else None,
            }
            for t, w in r.probes
        ]
    return {
        "name": r.name,
        "n": r.n,
        "m": r.m,
        "diameter": r.diameter,
        "radius": r.radius,
        "is_helly": r.is_helly,
        "helly_counterexample": None
        if r.helly_counterexample is None
        else [
            {"center": c.center, "radius": c.radius}
            for c in r.helly_counterexample
        ],
        "is_pseudo_modular": r.is_pseudo_modular,
        "pseudo_modular_note": r.pseudo_modular_note,
        "hyperbolicity_doubled": r.hyperbolicity.doubled,
        "hyperbolicity_witness": {
            "quadruple": list(r.hyperbolicity_witness.quadruple),
            "pairing_sums": list(r.hyperbolicity_witness.sums),
        },
        "thinness": r.thinness,
        "thinness_witness": {
            "endpoints": list(r.thinness_witness.endpoints),
            "slice_index": r.thinness_witness.slice_index,
            "pair": list(r.thinness_witness.pair),
            "distance": r.thinness_witness.distance,
        },
        "classifiers": cls,
        "equivalents": r.equivalents,
        "probes": probes,
        "hull": r.hull,
        "timings_ms": r.timings_ms,
    }


# ---------------------------------------------------------------------------
# Claim verification
# ---------------------------------------------------------------------------

CLAIM_IDS = (
    "Thm3-window",
    "Thm4-int",
    "Thm4-half",
    "Thm5-powers",
    "Cor2-parity",
    "Cor3-equivalents",
)


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    status: str  # "PASS" | "FAIL" | "SKIP"
    detail: str


def verify_claims(g: Graph, *, dm: DistanceMatrix | None = None) -> list[ClaimResult]:
    """Check the six cross-route identities on one Helly graph.

    Non-Helly input yields SKIP for every claim (the identities are only
    asserted for Helly graphs).
    """
    dm = dm or apsp(g)
    if not is_helly(g, dm=dm):
        return [
            ClaimResult(cid, "SKIP", "input graph is not Helly")
            for cid in CLAIM_IDS
        ]

    out: list[ClaimResult] = []
    hb, _ = hyperbolicity(g, dm=dm)
    tau, _ = interval_thinness(g, dm=dm)

    window = tau <= hb.doubled <= tau + 1
    fired_at_tau = (
        detect_H1_or_H3(g, tau // 2, dm=dm) is not None if tau % 2 == 1 else False
    )
    tight = hb.doubled == tau + 1
    ok = window and tight == (tau % 2 == 1 and fired_at_tau)
    out.append(
        ClaimResult(
            "Thm3-window",
            "PASS" if ok else "FAIL",
            f"2h={hb.doubled}, tau={tau}, odd-probe fired={fired_at_tau}",
        )
    )

    kmax = hb.floor() + 1
    bad_int = [
        k
        for k in range(kmax + 1)
        if (detect_H2(g, k, dm=dm) is not None) != (hb >= HalfInt(2 * k + 1))
    ]
    out.append(
        ClaimResult(
            "Thm4-int",
            "PASS" if not bad_int else "FAIL",
            f"k=0..{kmax}"
            + ("" if not bad_int else f", mismatched at k={bad_int[0]}"),
        )
    )

    bad_half = [
        k
        for k in range(kmax + 1)
        if (detect_H1_or_H3(g, k, dm=dm) is not None)
        != (hb >= HalfInt.from_int(k + 1))
    ]
    out.append(
        ClaimResult(
            "Thm4-half",
            "PASS" if not bad_half else "FAIL",
            f"k=0..{kmax}"
            + ("" if not bad_half else f", mismatched at k={bad_half[0]}"),
        )
    )

    bad_pow = [
        td
        for td in range(0, hb.doubled + 3)
        if power_characterization(g, HalfInt(td), dm=dm, assume_helly=True)
        != (hb <= HalfInt(td))
    ]
    out.append(
        ClaimResult(
            "Thm5-powers",
            "PASS" if not bad_pow else "FAIL",
            f"thresholds 0..{HalfInt(hb.doubled + 2)}"
            + ("" if not bad_pow else f", mismatched at {HalfInt(bad_pow[0])}"),
        )
    )

    th = hb_by_thinness(g, dm=dm, assume_helly=True)
    parity_ok = th == hb and (tau % 2 == 1 or hb.doubled == tau)
    out.append(
        ClaimResult(
            "Cor2-parity",
            "PASS" if parity_ok else "FAIL",
            f"thinness route gives {th}, direct {hb}, tau={tau}",
        )
    )

    eq = half_hyperbolic_equivalents(g, dm=dm, assume_helly=True)
    vals = set(eq.values())
    eq_ok = len(vals) == 1 and next(iter(vals)) == (hb <= HalfInt(1))
    out.append(
        ClaimResult(
            "Cor3-equivalents",
            "PASS" if eq_ok else "FAIL",
            ", ".join(f"{k}={v}" for k, v in eq.items()),
        )
    )
    return out


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def family_to_dot(fg: FamilyGraph) -> str:
    """Host king grid with the family copy highlighted in red.

    Host vertices carry coordinate labels and fixed positions; family cells
    are filled red (corners darker, tagged a/b/c/d) and edges between two
    family cells are drawn red and thick.
    """
    fam, k, l = fg.family, fg.k, fg.l
    side = host_side(fam, k, l)
    placed = {cell_to_host(fam, k, l, cell) for cell in fg.cells}
    corner_xy = [cell_to_host(fam, k, l, cell) for cell in fg.corner_cells]
    corner_tag = dict(zip(corner_xy, "abcd"))

    lines = [
        f'graph "{fam}({k},{l})" {{',
        "  node [shape=circle, fontsize=10, width=0.35, fixedsize=true];",
    ]
    for x in range(side):
        for y in range(side):
            attrs = [f'label="{x},{y}"', f'pos="{x},{y}!"']
            if (x, y) in corner_tag:
                attrs += [
                    "style=filled",
                    'fillcolor="red3"',
                    'fontcolor="white"',
                    f'xlabel="{corner_tag[(x, y)]}"',
                ]
            elif (x, y) in placed:
                attrs += ["style=filled", 'fillcolor="red"']
            lines.append(f'  v{x}_{y} [{", ".join(attrs)}];')
    for x in range(side):
        for y in range(side):
            for dx, dy in ((0, 1), (1, -1), (1, 0), (1, 1)):
                nx, ny = x + dx, y + dy
                if 0 <= nx < side and 0 <= ny < side:
                    if (x, y) in placed and (nx, ny) in placed:
                        style = ' [color="red", penwidth=2.0]'
                    else:
                        style = ' [color="gray70"]'
                    lines.append(f"  v{x}_{y} -- v{nx}_{ny}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph) -> str:
    """Plain DOT export with vertex labels."""
    name = g.name or "G"
    lines = [f'graph "{name}" {{', "  node [shape=circle, fontsize=10];"]
    for v in range(g.n):
        label = g.vertex_labels[v] if g.vertex_labels else str(v)
        lines.append(f'  v{v} [label="{label}"];')
    for u in range(g.n):
        for v in g.neighbors[u]:
            if u < v:
                lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
