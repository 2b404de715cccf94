"""Obstruction detection, certified materialization, and the derived
hyperbolicity routes.

Probe semantics on a Helly graph G (h = hyperbolicity):

* ``detect_H2(G, k)`` fires iff h >= k + 1/2; the certified copy is an
  isometric H2(k, k).
* ``detect_H1_or_H3(G, k)`` fires iff h >= k + 1; the certified copy is an
  isometric H1(k+1, k+1) or H3(k, k), whichever the constructive case
  analysis produces.
* ``detect_H1(G, k)`` fires on the exact H1(k+1, k+1) corner pattern (four
  sides k+1, both diagonals 2k+2); at k = 0 this is exactly "G has an
  induced 4-cycle".

Detectors scan distance patterns and do not require Helly input themselves:
a returned witness is always sound (its copy is re-verified isometric), but
absence certifies anything only when the input is Helly.  The aggregate
classifiers (hb_by_obstructions, hb_by_thinness, half_hyperbolic_equivalents,
power_characterization) reject non-Helly input unless told to assume it.

Witness corners are the quadruple the scan fired on; the materialized copy
(always computed) lives in the witness alongside its cell layout.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distances import DistanceMatrix, apsp, graph_power
from .families import (
    Cell,
    cell_dist,
    expected_corner_pattern,
    family_cells,
    family_corner_cells,
)
from .graphs import Graph
from .halfint import HalfInt
from .helly import DiskConstraint, find_median, is_helly, pick_common_vertex
from .hyperbolicity import hyperbolicity, interval_thinness


class NotHellyError(Exception):
    """The operation requires a Helly input graph."""


class InternalInconsistencyError(RuntimeError):
    """Two routes that must agree produced different answers."""


class MaterializeError(Exception):
    """A placement disk system became infeasible (or the copy failed recheck)."""

    def __init__(self, message: str, constraints: tuple[DiskConstraint, ...] = ()):
        super().__init__(message)
        self.constraints = constraints


@dataclass(frozen=True)
class ObstructionWitness:
    """A certified isometric family copy inside the scanned graph.

    ``corners`` is the quadruple the detection pattern fired on; for
    resolved or extracted copies it need not realize the certified family's
    own corner distances.  ``cells`` and ``placement`` run in parallel
    (placement[i] realizes cells[i]); ``materialized`` is the placement as a
    sorted vertex set.
    """

    family: str
    k: int
    l: int
    corners: tuple[int, int, int, int]
    materialized: tuple[int, ...]
    cells: tuple[Cell, ...]
    placement: tuple[int, ...]


def _require_helly(g: Graph, dm: DistanceMatrix, assume_helly: bool) -> None:
    if not assume_helly and not is_helly(g, dm=dm):
        raise NotHellyError(
            "input graph is not Helly; this operation is only valid on Helly graphs"
        )


# ---------------------------------------------------------------------------
# Materialization by repeated common-vertex picks
# ---------------------------------------------------------------------------

_CELL_STEPS = ((-2, 0), (-1, -1), (-1, 1), (0, -2), (0, 2), (1, -1), (1, 1), (2, 0))


def _cell_neighbors(cell: Cell, cellset: frozenset[Cell]) -> list[Cell]:
    s, t = cell
    out = [(s + ds, t + dt) for ds, dt in _CELL_STEPS]
    return [c for c in out if c in cellset]


def _realizes_corner_pattern(
    dm: DistanceMatrix, family: str, k: int, l: int, quad: tuple[int, int, int, int]
) -> bool:
    pat = expected_corner_pattern(family, k, l)
    a, b, c, d = quad
    return (dm.d(a, b), dm.d(b, c), dm.d(c, d), dm.d(d, a)) == pat.sides and (
        dm.d(a, c),
        dm.d(b, d),
    ) == pat.diagonals


def _anchored_placement(
    g: Graph,
    dm: DistanceMatrix,
    family: str,
    k: int,
    l: int,
    anchors: tuple[int, int, int, int],
) -> dict[Cell, int]:
    """Place an isometric family copy with the corner cells on ``anchors``.

    The anchors must realize the family's exact corner distance pattern.
    Each remaining cell, in breadth-first order from the corners, goes to
    the lowest-id vertex lying in all its placement disks: one disk per
    corner (radius = cell distance to that corner) plus one unit disk per
    already placed neighboring cell.  On Helly graphs every pick succeeds;
    a failed pick raises MaterializeError carrying the infeasible disks.
    The finished placement is rechecked pair-by-pair against the cell
    metric, which also forces injectivity.
    """
    cells = family_cells(family, k, l)
    corner_cells = family_corner_cells(family, k, l)
    if not _realizes_corner_pattern(dm, family, k, l, anchors):
        a, b, c, d = anchors
        raise MaterializeError(
            f"anchors {anchors} do not realize the {family}({k},{l}) corner "
            f"pattern: sides ({dm.d(a, b)}, {dm.d(b, c)}, {dm.d(c, d)}, "
            f"{dm.d(d, a)}), diagonals ({dm.d(a, c)}, {dm.d(b, d)})"
        )

    cellset = frozenset(cells)
    placement: dict[Cell, int] = dict(zip(corner_cells, anchors))
    seen = set(corner_cells)
    frontier = sorted(corner_cells)
    order: list[Cell] = []
    while frontier:
        nxt = set()
        for p in frontier:
            for q in _cell_neighbors(p, cellset):
                if q not in seen:
                    seen.add(q)
                    nxt.add(q)
        frontier = sorted(nxt)
        order.extend(frontier)
    assert len(seen) == len(cells), "family cells not connected from corners"

    corner_list = list(zip(corner_cells, anchors))
    for p in order:
        cons = [DiskConstraint(av, cell_dist(p, ac)) for ac, av in corner_list]
        for q in _cell_neighbors(p, cellset):
            if q in placement:
                cons.append(DiskConstraint(placement[q], 1))
        v = pick_common_vertex(dm, cons)
        if v is None:
            raise MaterializeError(
                f"no vertex satisfies the placement disks for cell {p} "
                f"of {family}({k},{l})",
                tuple(cons),
            )
        placement[p] = v

    ids = np.array([placement[cc] for cc in cells], dtype=np.int64)
    arr = np.array(cells, dtype=np.int64)
    want = (
        np.abs(arr[:, 0][:, None] - arr[:, 0][None, :])
        + np.abs(arr[:, 1][:, None] - arr[:, 1][None, :])
    ) // 2
    got = dm.dist[np.ix_(ids, ids)]
    bad = np.argwhere(got != want)
    if bad.size:
        i, j = int(bad[0][0]), int(bad[0][1])
        raise MaterializeError(
            f"materialized {family}({k},{l}) copy is not isometric: cells "
            f"{cells[i]} -> {int(ids[i])} and {cells[j]} -> {int(ids[j])} are at "
            f"distance {int(got[i, j])}, expected {int(want[i, j])}"
        )
    return placement


def _make_witness(
    family: str,
    k: int,
    l: int,
    placement: dict[Cell, int],
    scanned: tuple[int, int, int, int],
    shift: tuple[int, int] = (0, 0),
) -> ObstructionWitness:
    """Package (a shifted sub-window of) a placement as a witness.

    With a nonzero shift the witness is the sub-family whose cell (s, t)
    sits on the placed cell (s + shift_s, t + shift_t); restricting an
    isometric copy to a cell subset stays isometric because the cell metric
    is translation invariant.
    """
    cells = family_cells(family, k, l)
    ds, dt = shift
    vertices = tuple(placement[(cc[0] + ds, cc[1] + dt)] for cc in cells)
    return ObstructionWitness(
        family,
        k,
        l,
        scanned,
        tuple(sorted(set(vertices))),
        cells,
        vertices,
    )


def materialize(
    g: Graph, w: ObstructionWitness, *, dm: DistanceMatrix | None = None
) -> tuple[int, ...]:
    """Vertex set of an isometric family copy rebuilt from a witness.

    Dispatches on which detection pattern the witness corners satisfy:
    the family's exact corner pattern gives the direct anchored
    construction; the wider H2 scan variant (far inner pair) builds the
    enclosing H1(k+1, k+1) square and restricts it; a wide-diagonal window
    quadruple is resolved through the constructive case analysis, which
    must certify the witness's own family.  Raises MaterializeError when
    the corners fit no pattern for the claimed family or a placement disk
    system is infeasible (the usual symptom of non-Helly input).
    """
    dm = dm or apsp(g)
    fam, k, l = w.family, w.k, w.l
    quad = w.corners
    if _realizes_corner_pattern(dm, fam, k, l, quad):
        placement = _anchored_placement(g, dm, fam, k, l, quad)
        return tuple(sorted(placement[cc] for cc in family_cells(fam, k, l)))
    x, y, z, t = quad
    if (
        fam == "H2"
        and k == l
        and (dm.d(x, y), dm.d(y, z), dm.d(z, t), dm.d(t, x))
        == (k + 1, k + 1, k + 1, k + 1)
        and dm.d(x, z) == 2 * k + 2
        and dm.d(y, t) == 2 * k + 2
    ):
        placement = _anchored_placement(g, dm, "H1", k + 1, k + 1, quad)
        cells = family_cells("H2", k, k)
        return tuple(sorted(placement[(s + 1, tt + 1)] for s, tt in cells))
    if fam in ("H1", "H3") and k == l:
        probe = k - 1 if fam == "H1" else k
        if probe >= 0 and _fits_window(dm, probe, quad):
            resolved = resolve_window_quadruple(g, probe, quad, dm=dm)
            if resolved.family != fam:
                raise MaterializeError(
                    f"window quadruple {quad} resolves to "
                    f"{resolved.family}({resolved.k},{resolved.l}), not "
                    f"{fam}({k},{l})"
                )
            return resolved.materialized
    raise MaterializeError(
        f"witness corners {quad} satisfy no detection pattern for {fam}({k},{l})"
    )


def _fits_window(
    dm: DistanceMatrix, k: int, quad: tuple[int, int, int, int]
) -> bool:
    x, y, z, t = quad
    sides = (dm.d(x, y), dm.d(y, z), dm.d(z, t), dm.d(t, x))
    return (
        dm.d(x, z) in (2 * k + 3, 2 * k + 4)
        and dm.d(y, t) in (2 * k + 3, 2 * k + 4)
        and all(k + 1 <= s <= k + 2 for s in sides)
    )


# ---------------------------------------------------------------------------
# Pattern scans
# ---------------------------------------------------------------------------

def detect_H1(
    g: Graph, k: int, *, dm: DistanceMatrix | None = None
) -> ObstructionWitness | None:
    """Certified H1(k+1, k+1) copy from the exact corner pattern, or None."""
    if k < 0:
        raise ValueError("probe parameter must be >= 0")
    dm = dm or apsp(g)
    found = _scan_h1_pattern(dm, k)
    if found is None:
        return None
    placement = _anchored_placement(g, dm, "H1", k + 1, k + 1, found)
    return _make_witness("H1", k + 1, k + 1, placement, found)


def _scan_h1_pattern(dm: DistanceMatrix, k: int) -> tuple[int, int, int, int] | None:
    """First quadruple (x,y,z,t) with sides k+1 and diagonals 2k+2."""
    dist = dm.dist
    n = dm.n
    side, diag = k + 1, 2 * k + 2
    if diag > dm.diam:
        return None
    for x in range(n):
        dx = dist[x]
        zs = np.nonzero(dx == diag)[0]
        zs = zs[zs > x]
        for z in zs.tolist():
            ids = np.nonzero((dx == side) & (dist[z] == side))[0]
            if ids.size < 2:
                continue
            sub = dist[np.ix_(ids, ids)]
            hits = np.argwhere(np.triu(sub == diag, k=1))
            if hits.size:
                r, c = int(hits[0][0]), int(hits[0][1])
                return x, int(ids[r]), z, int(ids[c])
    return None


def detect_H2(
    g: Graph, k: int, *, dm: DistanceMatrix | None = None
) -> ObstructionWitness | None:
    """Certified H2(k, k) copy; fires iff hyperbolicity >= k + 1/2 on Helly input.

    Scans for quadruples with all four sides k+1, one diagonal 2k+2, and the
    other in {2k+1, 2k+2}.  The narrow variant anchors H2(k, k) directly;
    the wide variant builds the enclosing H1(k+1, k+1) square and restricts
    it to an H2(k, k) window.
    """
    if k < 0:
        raise ValueError("probe parameter must be >= 0")
    dm = dm or apsp(g)
    dist = dm.dist
    n = dm.n
    side, diag = k + 1, 2 * k + 2
    if diag > dm.diam:
        return None
    for x in range(n):
        dx = dist[x]
        zs = np.nonzero(dx == diag)[0]
        zs = zs[zs > x]
        for z in zs.tolist():
            ids = np.nonzero((dx == side) & (dist[z] == side))[0]
            if ids.size < 2:
                continue
            sub = dist[np.ix_(ids, ids)]
            good = np.triu((sub == diag - 1) | (sub == diag), k=1)
            hits = np.argwhere(good)
            if not hits.size:
                continue
            r, c = int(hits[0][0]), int(hits[0][1])
            y, t = int(ids[r]), int(ids[c])
            quad = (x, y, z, t)
            if dist[y][t] == diag - 1:
                placement = _anchored_placement(g, dm, "H2", k, k, quad)
                return _make_witness("H2", k, k, placement, quad)
            placement = _anchored_placement(g, dm, "H1", k + 1, k + 1, quad)
            return _make_witness("H2", k, k, placement, quad, shift=(1, 1))
    return None


def detect_H1_or_H3(
    g: Graph, k: int, *, dm: DistanceMatrix | None = None
) -> ObstructionWitness | None:
    """Certified H1(k+1, k+1) or H3(k, k) copy; fires iff hyperbolicity >= k + 1.

    Phase 1 scans the exact H1(k+1, k+1) corner pattern.  Phase 2 scans
    quadruples whose diagonals exceed 2k+2 while all sides stay within k+2
    and resolves each into one of the two certified copies.
    """
    if k < 0:
        raise ValueError("probe parameter must be >= 0")
    dm = dm or apsp(g)
    found = _scan_h1_pattern(dm, k)
    if found is not None:
        placement = _anchored_placement(g, dm, "H1", k + 1, k + 1, found)
        return _make_witness("H1", k + 1, k + 1, placement, found)

    dist = dm.dist
    n = dm.n
    lo = 2 * k + 3
    if lo > dm.diam:
        return None
    for x in range(n):
        dx = dist[x]
        zs = np.nonzero((dx == lo) | (dx == lo + 1))[0]
        zs = zs[zs > x]
        for z in zs.tolist():
            ids = np.nonzero((dx <= k + 2) & (dist[z] <= k + 2))[0]
            if ids.size < 2:
                continue
            sub = dist[np.ix_(ids, ids)]
            hits = np.argwhere(np.triu(sub >= lo, k=1))
            if not hits.size:
                continue
            r, c = int(hits[0][0]), int(hits[0][1])
            quad = (x, int(ids[r]), z, int(ids[c]))
            return resolve_window_quadruple(g, k, quad, dm=dm)
    return None


def _rotate(q: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    x, y, z, t = q
    return (y, z, t, x)


def resolve_window_quadruple(
    g: Graph,
    k: int,
    quad: tuple[int, int, int, int],
    *,
    dm: DistanceMatrix | None = None,
) -> ObstructionWitness:
    """Turn one wide-diagonal quadruple into a certified H1 or H3 copy.

    Preconditions (checked): writing quad = (x, y, z, t), both diagonal
    distances d(x,z), d(y,t) lie in {2k+3, 2k+4} and all four side
    distances are at most k+2 (they are then automatically at least k+1).
    Every such quadruple in a Helly graph resolves; on non-Helly input the
    constructive steps may fail with MaterializeError or MedianSearchError.
    """
    dm = dm or apsp(g)
    if not _fits_window(dm, k, quad):
        d = dm.d
        x, y, z, t = quad
        raise ValueError(
            f"quadruple {quad} does not fit the probe window for k={k}: "
            f"diagonals ({d(x, z)}, {d(y, t)}), sides "
            f"({d(x, y)}, {d(y, z)}, {d(z, t)}, {d(t, x)})"
        )
    d = dm.d
    scanned = quad
    x, y, z, t = quad
    dxz, dyt = d(x, z), d(y, t)

    if max(dxz, dyt) == 2 * k + 4:
        if dxz != 2 * k + 4:
            quad = _rotate(quad)
            x, y, z, t = quad
            dxz, dyt = d(x, z), d(y, t)
        if dyt == 2 * k + 4:
            # both diagonals maximal: the quadruple is an H1(k+2,k+2) frame
            placement = _anchored_placement(g, dm, "H1", k + 2, k + 2, quad)
            return _make_witness("H1", k + 1, k + 1, placement, scanned)
        # mixed diagonals: an H2(k+1,k+1) frame, long diagonal on (x,z)
        placement = _anchored_placement(g, dm, "H2", k + 1, k + 1, quad)
        return _make_witness("H1", k + 1, k + 1, placement, scanned)

    # both diagonals 2k+3; sides are k+1 or k+2, and two adjacent sides
    # cannot both be k+1 (their sum must cover a diagonal)
    for _ in range(4):
        if d(quad[0], quad[1]) == k + 1:
            break
        quad = _rotate(quad)
    x, y, z, t = quad
    n_short = sum(
        1 for s in (d(x, y), d(y, z), d(z, t), d(t, x)) if s == k + 1
    )

    if n_short == 2:
        # two opposite short sides: a rectangular H1(k+2, k+1) frame
        placement = _anchored_placement(g, dm, "H1", k + 2, k + 1, quad)
        return _make_witness("H1", k + 1, k + 1, placement, scanned)

    if n_short == 1:
        # slide z one step toward the short side, then complete the square
        med = find_median(g, y, z, t, dm=dm)
        if med.variant != "triangle":
            raise InternalInconsistencyError(
                f"median of ({y},{z},{t}) must be a triangle here"
            )
        z2 = med.triangle[0]
        med2 = find_median(g, x, z2, t, dm=dm)
        if med2.variant != "vertex":
            raise InternalInconsistencyError(
                f"median of ({x},{z2},{t}) must be a vertex here"
            )
        new_quad = (x, y, z2, med2.vertex)
        placement = _anchored_placement(g, dm, "H1", k + 1, k + 1, new_quad)
        return _make_witness("H1", k + 1, k + 1, placement, scanned)

    # all sides k+2: probe the two corner medians; if either derived inner
    # pair stretches to 2k+2, an H1(k+1,k+1) square exists, otherwise the
    # quadruple carries a pinwheel H3(k,k)
    mt = find_median(g, x, z, t, dm=dm)
    my = find_median(g, x, z, y, dm=dm)
    if mt.variant != "triangle" or my.variant != "triangle":
        raise InternalInconsistencyError(
            f"medians of ({x},{z},{t}) and ({x},{z},{y}) must be triangles here"
        )
    t_x, t_z = mt.triangle[0], mt.triangle[1]
    y_x, y_z = my.triangle[0], my.triangle[1]
    if d(t_x, y_x) == 2 * k + 2:
        mv = find_median(g, y_x, z, t_x, dm=dm)
        if mv.variant != "vertex":
            raise InternalInconsistencyError(
                f"median of ({y_x},{z},{t_x}) must be a vertex here"
            )
        new_quad = (x, y_x, mv.vertex, t_x)
        placement = _anchored_placement(g, dm, "H1", k + 1, k + 1, new_quad)
        return _make_witness("H1", k + 1, k + 1, placement, scanned)
    if d(t_z, y_z) == 2 * k + 2:
        mv = find_median(g, y_z, x, t_z, dm=dm)
        if mv.variant != "vertex":
            raise InternalInconsistencyError(
                f"median of ({y_z},{x},{t_z}) must be a vertex here"
            )
        new_quad = (z, y_z, mv.vertex, t_z)
        placement = _anchored_placement(g, dm, "H1", k + 1, k + 1, new_quad)
        return _make_witness("H1", k + 1, k + 1, placement, scanned)
    placement = _anchored_placement(g, dm, "H3", k, k, quad)
    return _make_witness("H3", k, k, placement, scanned)


# ---------------------------------------------------------------------------
# Derived hyperbolicity routes
# ---------------------------------------------------------------------------

def hb_by_obstructions(
    g: Graph,
    *,
    dm: DistanceMatrix | None = None,
    assume_helly: bool = False,
    probes_out: list[tuple[HalfInt, ObstructionWitness | None]] | None = None,
) -> HalfInt:
    """Hyperbolicity via descending obstruction probes (Helly input).

    Probes thresholds t from ceil(diam/2) down to 0 in half steps; an
    integer probe t = k runs detect_H2(k), a half probe t = k + 1/2 runs
    detect_H1_or_H3(k).  The first firing probe gives h = t + 1/2; if no
    probe fires the graph is 0-hyperbolic.
    """
    dm = dm or apsp(g)
    _require_helly(g, dm, assume_helly)
    top = dm.diam if dm.diam % 2 == 0 else dm.diam + 1
    for td in range(top, -1, -1):
        thr = HalfInt(td)
        if td % 2 == 0:
            w = detect_H2(g, td // 2, dm=dm)
        else:
            w = detect_H1_or_H3(g, (td - 1) // 2, dm=dm)
        if probes_out is not None:
            probes_out.append((thr, w))
        if w is not None:
            if td == top:
                raise InternalInconsistencyError(
                    f"probe at threshold {thr} fired although the diameter "
                    f"bound caps hyperbolicity at {HalfInt(dm.diam)}"
                )
            return HalfInt(td + 1)
    return HalfInt(0)


def hb_by_thinness(
    g: Graph,
    *,
    dm: DistanceMatrix | None = None,
    assume_helly: bool = False,
) -> HalfInt:
    """Hyperbolicity from interval thinness tau (Helly input).

    Even tau: h = tau/2 outright.  Odd tau: h = (tau+1)/2 exactly when the
    wide-diagonal probe at k = (tau-1)/2 fires, else h = tau/2.
    """
    dm = dm or apsp(g)
    _require_helly(g, dm, assume_helly)
    tau, _ = interval_thinness(g, dm=dm)
    if tau % 2 == 0:
        return HalfInt.from_int(tau // 2)
    if detect_H1_or_H3(g, tau // 2, dm=dm) is not None:
        return HalfInt(tau + 1)
    return HalfInt(tau)


# ---------------------------------------------------------------------------
# Half-hyperbolicity equivalents
# ---------------------------------------------------------------------------

def _has_induced_c4(g: Graph) -> bool:
    n = g.n
    adj = g.adj_bits
    for x in range(n):
        ax = adj[x]
        for z in range(x + 1, n):
            if (ax >> z) & 1:
                continue
            m = ax & adj[z]
            while m:
                low = m & -m
                yv = low.bit_length() - 1
                m ^= low
                if m & ~adj[yv]:
                    return True
    return False


def _has_sun_tip_pattern(dm: DistanceMatrix) -> bool:
    """Quadruple with cyclic side distances 2 and diagonal distances 3.

    On a Helly graph this pattern is equivalent to an isometric complete
    4-sun (it is the H3(0,0) detection pattern, materializable on demand).
    """
    if dm.diam < 3:
        return False
    dist = dm.dist
    n = dm.n
    for p in range(n):
        dp = dist[p]
        rs = np.nonzero(dp == 3)[0]
        rs = rs[rs > p]
        for r in rs.tolist():
            ids = np.nonzero((dp == 2) & (dist[r] == 2))[0]
            if ids.size < 2:
                continue
            sub = dist[np.ix_(ids, ids)]
            if (np.triu(sub == 3, k=1)).any():
                return True
    return False


def half_hyperbolic_equivalents(
    g: Graph,
    *,
    dm: DistanceMatrix | None = None,
    assume_helly: bool = False,
) -> dict[str, bool]:
    """Four conditions that agree on Helly graphs, each decided directly.

    * hyperbolicity_le_half: h <= 1/2 by the exact quadruple scan.
    * no_induced_c4_or_sun_tips: no induced 4-cycle (= isometric 4-cycle)
      and no side-2/diagonal-3 quadruple (= isometric complete 4-sun).
    * g_and_square_c4_free: neither G nor its square has an induced 4-cycle.
    * thinness_le_1_no_sun_tips: interval thinness at most 1 and no
      side-2/diagonal-3 quadruple.
    """
    dm = dm or apsp(g)
    _require_helly(g, dm, assume_helly)
    hb, _ = hyperbolicity(g, dm=dm)
    c4 = _has_induced_c4(g)
    sun_tips = _has_sun_tip_pattern(dm)
    c4_sq = _has_induced_c4(graph_power(g, 2, dm=dm)) if dm.diam >= 2 else False
    tau, _ = interval_thinness(g, dm=dm)
    return {
        "hyperbolicity_le_half": hb <= HalfInt(1),
        "no_induced_c4_or_sun_tips": not c4 and not sun_tips,
        "g_and_square_c4_free": not c4 and not c4_sq,
        "thinness_le_1_no_sun_tips": tau <= 1 and not sun_tips,
    }


# ---------------------------------------------------------------------------
# Power-graph characterization (independent literal route)
# ---------------------------------------------------------------------------

def power_characterization(
    g: Graph,
    threshold: HalfInt | int,
    *,
    dm: DistanceMatrix | None = None,
    assume_helly: bool = False,
) -> bool:
    """Decide "hyperbolicity <= threshold" purely from power-graph 4-cycles.

    Works on power adjacency bitmasks only: a labeled 4-cycle lives in
    every power G^l for l in [A, B] iff its sides are edges of G^A and its
    diagonals are non-edges of G^B.  For a half threshold k + 1/2 the test
    is the absence of such windows [k+1, 2k+1] and [k+2, 2k+2]; for an
    integer threshold k it is the absence of a quadruple with sides in
    G^(k+1), one diagonal exactly 2k+1 and the other beyond 2k+1 (a diamond
    split across consecutive powers).  Provably equal to the direct value
    on Helly graphs; non-Helly input is rejected.
    """
    t = HalfInt.coerce(threshold)
    if t < 0:
        raise ValueError("threshold must be >= 0")
    dm = dm or apsp(g)
    _require_helly(g, dm, assume_helly)
    if t.is_integer:
        return not _power_split_diagonal(dm, t.as_int())
    k = t.floor()
    return not (
        _power_window(dm, k + 1, 2 * k + 1) or _power_window(dm, k + 2, 2 * k + 2)
    )


def _power_window(dm: DistanceMatrix, a: int, b: int) -> bool:
    """Is there a labeled 4-cycle common to all powers G^l, a <= l <= b?"""
    n = dm.n
    ea = dm.power_rows(a)
    eb = dm.power_rows(b)
    full = (1 << n) - 1
    for x in range(n):
        far = (full & ~eb[x] & ~(1 << x)) >> (x + 1)
        z = x + 1
        while far:
            if far & 1:
                m = ea[x] & ea[z]
                while m:
                    low = m & -m
                    yv = low.bit_length() - 1
                    m ^= low
                    if m & ~eb[yv]:
                        return True
            far >>= 1
            z += 1
    return False


def _power_split_diagonal(dm: DistanceMatrix, k: int) -> bool:
    """Sides within k+1, one diagonal exactly 2k+1, the other beyond it?"""
    n = dm.n
    ea = dm.power_rows(k + 1)
    e_hi = dm.power_rows(2 * k + 1)
    e_lo = dm.power_rows(2 * k)
    for y in range(n):
        exact = (e_hi[y] & ~e_lo[y]) >> (y + 1)
        t = y + 1
        while exact:
            if exact & 1:
                common = ea[y] & ea[t]
                m = common
                while m:
                    low = m & -m
                    xv = low.bit_length() - 1
                    m ^= low
                    if common & ~e_hi[xv] & ~(1 << xv):
                        return True
            exact >>= 1
            t += 1
    return False
