"""Exact four-point hyperbolicity, intervals, slices, and interval thinness.

The hyperbolicity scan is the literal definition over all vertex quadruples,
organized as a pair-of-pairs sweep in decreasing pair-distance order.  For a
quadruple visited at its largest-sum pairing (d(u,v)+d(w,x) maximal), twice
its delta is at most min(d(u,v), d(w,x)), so pairs below the running best can
be pruned without losing any maximizer or tie.  Ties are kept so the reported
witness is the lexicographically smallest sorted maximizing quadruple, which
makes the result independent of batching and worker count.
"""
from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .distances import DistanceMatrix, apsp
from .graphs import Graph
from .halfint import HalfInt

_CHUNK = 64


@dataclass(frozen=True)
class HyperbolicityWitness:
    """A quadruple, its three pairing sums, and its exact delta."""

    quadruple: tuple[int, int, int, int]
    sums: tuple[int, int, int]
    delta: HalfInt


@dataclass(frozen=True)
class ThinnessWitness:
    """Endpoints, slice index, and a maximizing same-slice pair."""

    endpoints: tuple[int, int]
    slice_index: int
    pair: tuple[int, int]
    distance: int


def gromov_product(dm: DistanceMatrix, x: int, y: int, z: int) -> HalfInt:
    """(x|y) anchored at z: half of d(x,z)+d(y,z)-d(x,y)."""
    return HalfInt(dm.d(x, z) + dm.d(y, z) - dm.d(x, y))


def _sums(dm: DistanceMatrix, u: int, v: int, w: int, x: int) -> tuple[int, int, int]:
    return (
        dm.d(u, v) + dm.d(w, x),
        dm.d(u, w) + dm.d(v, x),
        dm.d(u, x) + dm.d(v, w),
    )


def quadruple_delta(
    dm: DistanceMatrix, u: int, v: int, w: int, x: int
) -> HyperbolicityWitness:
    """Half the gap between the two largest pairing sums of one quadruple."""
    sums = _sums(dm, u, v, w, x)
    top = sorted(sums)
    return HyperbolicityWitness((u, v, w, x), sums, HalfInt(top[2] - top[1]))


def is_block_graph(g: Graph) -> bool:
    """Every biconnected component a clique (equivalently: zero hyperbolicity)."""
    if g.n <= 2:
        return True
    adj = g.adj_bits
    for comp in _biconnected_components(g):
        if len(comp) <= 2:
            continue
        bits = 0
        for v in comp:
            bits |= 1 << v
        for v in comp:
            if bits & ~(adj[v] | (1 << v)):
                return False
    return True


def _biconnected_components(g: Graph) -> list[set[int]]:
    """Vertex sets of biconnected components (iterative Hopcroft-Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    comps: list[set[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            v, parent, idx = stack.pop()
            if idx == 0:
                disc[v] = low[v] = timer
                timer += 1
            advanced = False
            nbrs = g.neighbors[v]
            while idx < len(nbrs):
                w = nbrs[idx]
                idx += 1
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    stack.append((v, parent, idx))
                    stack.append((w, v, 0))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    comp: set[int] = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        comp.add(a)
                        comp.add(b)
                        if (a, b) == (parent, v):
                            break
                    if comp:
                        comps.append(comp)
    return comps


def hyperbolicity(
    g: Graph, *, dm: DistanceMatrix | None = None, threads: int = 1
) -> tuple[HalfInt, HyperbolicityWitness]:
    """Exact maximum quadruple delta with a lex-min maximizing witness."""
    dm = dm or apsp(g)
    zero_witness = HyperbolicityWitness((0, 0, 0, 0), (0, 0, 0), HalfInt(0))
    if g.n < 4 or is_block_graph(g):
        return HalfInt(0), zero_witness

    dist = dm.dist
    n = g.n
    iu, iv = np.triu_indices(n, k=1)
    duv = dist[iu, iv].astype(np.int32)
    order = np.lexsort((iv, iu, -duv))
    u_arr = iu[order].astype(np.int32)
    v_arr = iv[order].astype(np.int32)
    d_arr = duv[order]
    npairs = d_arr.shape[0]
    d32 = dist.astype(np.int32)

    state = {"best": 0, "witness": None}
    lock = threading.Lock()

    def scan_chunk(i0: int) -> None:
        i1 = min(i0 + _CHUNK, npairs)
        best_now = state["best"]
        if d_arr[i0] < best_now:
            return
        jmax = int(np.searchsorted(-d_arr, -best_now, side="right"))
        jmax = min(max(jmax, 1), i1)
        U, V, DO = u_arr[i0:i1], v_arr[i0:i1], d_arr[i0:i1]
        W, X = u_arr[:jmax], v_arr[:jmax]
        s1 = DO[:, None] + d_arr[None, :jmax]
        s2 = d32[np.ix_(U, W)] + d32[np.ix_(V, X)]
        s3 = d32[np.ix_(U, X)] + d32[np.ix_(V, W)]
        gap = s1 - np.maximum(s2, s3)
        # only pairings with inner index <= outer index are this visit's duty
        cols = np.arange(jmax)[None, :]
        rows = np.arange(i0, i1)[:, None]
        gap = np.where(cols <= rows, gap, -1)
        mx = int(gap.max(initial=-1))
        if mx < 0:
            return
        with lock:
            if mx < state["best"]:
                return
            hits = np.argwhere(gap == mx)
            quads = np.stack(
                [
                    U[hits[:, 0]],
                    V[hits[:, 0]],
                    W[hits[:, 1]],
                    X[hits[:, 1]],
                ],
                axis=1,
            )
            quads.sort(axis=1)
            pick = np.lexsort((quads[:, 3], quads[:, 2], quads[:, 1], quads[:, 0]))[0]
            cand = tuple(int(t) for t in quads[pick])
            if mx > state["best"]:
                state["best"] = mx
                state["witness"] = cand
            elif state["witness"] is None or cand < state["witness"]:
                state["witness"] = cand

    chunk_starts = list(range(0, npairs, _CHUNK))
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(scan_chunk, chunk_starts))
    else:
        for i0 in chunk_starts:
            if d_arr[i0] < state["best"]:
                break
            scan_chunk(i0)

    if state["witness"] is None or state["best"] == 0:
        return HalfInt(0), zero_witness
    q = state["witness"]
    sums = _sums(dm, *q)
    top = sorted(sums)
    assert top[2] - top[1] == state["best"], "scan/recheck mismatch"
    return HalfInt(state["best"]), HyperbolicityWitness(q, sums, HalfInt(state["best"]))


# ---------------------------------------------------------------------------
# Intervals, slices, thinness
# ---------------------------------------------------------------------------

def interval_slice(
    g: Graph, x: int, y: int, k: int, *, dm: DistanceMatrix | None = None
) -> set[int]:
    """Vertices on shortest (x,y)-paths at distance exactly k from x."""
    dm = dm or apsp(g)
    dxy = dm.d(x, y)
    if not (0 <= k <= dxy):
        raise ValueError(f"slice index {k} outside [0, {dxy}]")
    dist = dm.dist
    on = (dist[x] + dist[y] == dxy) & (dist[x] == k)
    return set(int(v) for v in np.nonzero(on)[0])


def interval_thinness(
    g: Graph, *, dm: DistanceMatrix | None = None
) -> tuple[int, ThinnessWitness]:
    """Largest diameter of any slice of any interval, with a witness."""
    dm = dm or apsp(g)
    dist = dm.dist
    n = g.n
    best = 0
    witness = ThinnessWitness((0, 0), 0, (0, 0), 0)
    for x in range(n):
        dx = dist[x]
        for y in range(x + 1, n):
            dxy = int(dx[y])
            ids = np.nonzero(dx + dist[y] == dxy)[0]
            if ids.size <= 2:
                continue
            ks = dx[ids]
            sub = dist[np.ix_(ids, ids)]
            same = ks[:, None] == ks[None, :]
            vals = np.where(same, sub, -1)
            mx = int(vals.max(initial=-1))
            if mx > best:
                pos = np.argwhere(vals == mx)[0]
                u, v = int(ids[pos[0]]), int(ids[pos[1]])
                if u > v:
                    u, v = v, u
                best = mx
                witness = ThinnessWitness((x, y), int(dx[u]), (u, v), mx)
    return best, witness
