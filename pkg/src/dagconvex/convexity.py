"""Convexity predicates and constructive procedures.

A vertex set X is convex when no directed path between two vertices of X
passes through a vertex outside X.  In an acyclic digraph every walk is a
path, so a vertex w lies on such a path exactly when w is reachable from X
and some vertex of X is reachable from w.  All predicates here use that
reachability characterization instead of enumerating paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .core import (
    Digraph,
    VertexSet,
    _mask_connected,
    _require_same_universe,
    is_cut_vertex,
    iter_bits,
    sources_and_sinks,
)
from .errors import (
    DisconnectedInput,
    EmptySet,
    FullSet,
    NotConnectedConvex,
    OrderTooSmall,
)

__all__ = [
    "ConvexityWitness",
    "is_convex",
    "convexity_witness",
    "convex_hull",
    "find_extension_vertex",
    "find_non_cut_endpoints",
]


@dataclass(frozen=True)
class ConvexityWitness:
    """A directed path certifying that a set is not convex.

    ``path`` runs from ``u`` to ``v``; both endpoints belong to the tested
    set and at least one interior vertex does not.
    """

    u: int
    v: int
    path: tuple[int, ...]

    def is_valid_for(self, d: Digraph, x: VertexSet) -> bool:
        """Machine-check the witness invariants against ``d`` and ``x``."""
        p = self.path
        if len(p) < 3 or p[0] != self.u or p[-1] != self.v:
            return False
        if len(set(p)) != len(p):
            return False
        if self.u not in x or self.v not in x:
            return False
        arcs = set(d.arcs)
        if any((a, b) not in arcs for a, b in zip(p, p[1:])):
            return False
        return any(w not in x for w in p[1:-1])


def union_rows(rows: Sequence[int], mask: int) -> int:
    u = 0
    for v in iter_bits(mask):
        u |= rows[v]
    return u


def _violation_mask(d: Digraph, mask: int) -> int:
    """Vertices outside ``mask`` that are both reachable from it and reach it."""
    du = union_rows(d.descendant_masks(), mask)
    au = union_rows(d.ancestor_masks(), mask)
    return du & au & ~mask


def is_convex(d: Digraph, x: VertexSet) -> bool:
    """Whether no directed path between vertices of ``x`` leaves ``x``."""
    _require_same_universe(d, x)
    if not x:
        raise EmptySet("convexity of the empty set is undefined")
    return _violation_mask(d, x.mask) == 0


def _shortest_path(
    adj: Sequence[Sequence[int]], sources: Sequence[int], targets: int
) -> list[int]:
    """Deterministic BFS shortest path from ``sources`` to any bit of ``targets``."""
    parent: dict[int, int] = {}
    queue: deque[int] = deque()
    for v in sorted(sources):
        if v not in parent:
            parent[v] = -1
            queue.append(v)
    hit = -1
    while queue and hit < 0:
        v = queue.popleft()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                if targets >> w & 1:
                    hit = w
                    break
                queue.append(w)
    if hit < 0:
        raise RuntimeError("BFS target unreachable; caller guarantees violated")
    path = [hit]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def convexity_witness(d: Digraph, x: VertexSet) -> ConvexityWitness | None:
    """A violating path for ``x``, or None when ``x`` is convex.

    The lowest-labelled violating vertex w is chosen, and a shortest x-to-w
    path is spliced with a shortest w-to-x path.  Acyclicity guarantees the
    splice repeats no vertex.
    """
    _require_same_universe(d, x)
    if not x:
        raise EmptySet("convexity of the empty set is undefined")
    bad = _violation_mask(d, x.mask)
    if bad == 0:
        return None
    w = (bad & -bad).bit_length() - 1
    head = _shortest_path(d.out_adj, x.members(), 1 << w)
    tail = _shortest_path(d.out_adj, [w], x.mask)
    path = tuple(head + tail[1:])
    return ConvexityWitness(u=path[0], v=path[-1], path=path)


def convex_hull(d: Digraph, x: VertexSet) -> VertexSet:
    """The smallest convex superset of ``x``.

    Fixed point of adding every vertex that lies between two vertices of the
    current set; the first step is already closed, so the loop runs twice.
    """
    _require_same_universe(d, x)
    if not x:
        raise EmptySet("hull of the empty set is undefined")
    mask = x.mask
    while True:
        grown = mask | _violation_mask(d, mask)
        if grown == mask:
            return VertexSet.from_mask(d.n, mask)
        mask = grown


def find_extension_vertex(d: Digraph, h: VertexSet) -> int:
    """A vertex outside ``h`` whose addition keeps ``h`` connected and convex.

    Scans the neighbours of ``h`` in increasing label order and returns the
    first that passes the convexity test; for a connected digraph and a
    proper connected convex ``h`` such a vertex always exists.  Candidates
    are adjacent to ``h``, so connectivity of the extension is automatic.
    """
    _require_same_universe(d, h)
    if not d.is_connected():
        raise DisconnectedInput("extension needs a connected digraph")
    if h.mask == (1 << d.n) - 1:
        raise FullSet("the set already contains every vertex")
    und = d.underlying_masks()
    if not h or not _mask_connected(und, h.mask) or _violation_mask(d, h.mask):
        raise NotConnectedConvex("precondition: h must be connected and convex")
    boundary = union_rows(und, h.mask) & ~h.mask
    for w in iter_bits(boundary):
        if _violation_mask(d, h.mask | 1 << w) == 0:
            return w
    raise RuntimeError(
        "no extension vertex found; unreachable for a proper connected convex "
        "set of a connected digraph"
    )


def find_non_cut_endpoints(d: Digraph) -> list[int]:
    """All sources and sinks of ``d`` that are not cut-vertices.

    For a connected acyclic digraph of order >= 2 the result always has at
    least two entries.
    """
    if d.n < 2:
        raise OrderTooSmall("need at least 2 vertices")
    if not d.is_connected():
        raise DisconnectedInput("endpoint search needs a connected digraph")
    src, snk = sources_and_sinks(d)
    result = [v for v in iter_bits(src.mask | snk.mask) if not is_cut_vertex(d, v)]
    if len(result) < 2:
        raise RuntimeError(
            "fewer than two non-cut endpoints; unreachable for a connected digraph"
        )
    return result
