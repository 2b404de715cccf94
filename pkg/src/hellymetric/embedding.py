"""Search for distance-preserving copies of a small pattern inside a host.

A map f: V(pattern) -> V(host) is an isometric embedding when
d_host(f(u), f(v)) = d_pattern(u, v) for every pair; distances 1 then match
edges exactly, so every isometric copy is automatically induced.
"""
from __future__ import annotations

from .distances import DistanceMatrix, apsp
from .graphs import Graph


def find_isometric_embedding(
    pattern: Graph,
    host: Graph,
    *,
    pattern_dm: DistanceMatrix | None = None,
    host_dm: DistanceMatrix | None = None,
) -> tuple[int, ...] | None:
    """First isometric copy of pattern in host under a fixed search order.

    Returns a tuple mapping pattern vertex i to host vertex result[i], or
    None.  Backtracking over pattern vertices in BFS order from the vertex
    of largest degree, filtering host candidates (ascending ids) by exact
    distance agreement with every already-placed pattern vertex; the result
    is deterministic for a given pair of graphs.
    """
    if pattern.n == 0 or pattern.n > host.n:
        return None
    pdm = pattern_dm or apsp(pattern)
    hdm = host_dm or apsp(host)
    order = _bfs_order(pattern)
    pd = pdm._rows
    hd = hdm._rows
    assignment: list[int] = [-1] * pattern.n
    used = [False] * host.n

    def place(pos: int) -> bool:
        if pos == pattern.n:
            return True
        pv = order[pos]
        for hv in range(host.n):
            if used[hv]:
                continue
            ok = True
            for prev in order[:pos]:
                if hd[assignment[prev]][hv] != pd[pv][prev]:
                    ok = False
                    break
            if ok:
                assignment[pv] = hv
                used[hv] = True
                if place(pos + 1):
                    return True
                used[hv] = False
                assignment[pv] = -1
        return False

    if place(0):
        return tuple(assignment)
    return None


def contains_isometric(pattern: Graph, host: Graph) -> bool:
    return find_isometric_embedding(pattern, host) is not None


def _bfs_order(g: Graph) -> list[int]:
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    seen = [False] * g.n
    seen[start] = True
    order = [start]
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for v in g.neighbors[u]:
            if not seen[v]:
                seen[v] = True
                order.append(v)
    return order
