"""Immutable acyclic digraphs and bitmask-backed vertex sets.

Vertices are dense integer labels ``0..n-1``.  Vertex sets are stored as
int bitmasks so that union, intersection, and cardinality are word-parallel
operations; per-vertex reachability rows use the same representation, which
keeps set-level reachability queries cheap for any order that fits in memory.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleDetected,
    DisconnectedInput,
    EmptySet,
    InvalidArc,
    InvalidParameter,
    OrderTooSmall,
)

__all__ = [
    "VertexSet",
    "Digraph",
    "build_digraph",
    "reachable_from",
    "reaching_to",
    "is_underlying_connected",
    "sources_and_sinks",
    "is_cut_vertex",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """Immutable subset of the vertices ``0..n-1`` of a fixed universe.

    Backed by an int bitmask of width ``n``.  Instances compare equal only
    when both the universe size and the membership agree.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] = ()) -> None:
        if n < 0:
            raise InvalidParameter(f"universe size must be >= 0, got {n}")
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise InvalidParameter(f"vertex {v} outside universe 0..{n - 1}")
            mask |= 1 << v
        self.n = n
        self.mask = mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> VertexSet:
        """Wrap an existing bitmask without per-member validation."""
        if mask < 0 or mask >> n:
            raise InvalidParameter(f"mask {mask:#x} has bits outside 0..{n - 1}")
        s = cls.__new__(cls)
        s.n = n
        s.mask = mask
        return s

    @classmethod
    def universe(cls, n: int) -> VertexSet:
        return cls.from_mask(n, (1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def _check_universe(self, other: VertexSet) -> None:
        if self.n != other.n:
            raise InvalidParameter(f"universe mismatch: {self.n} != {other.n}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check_universe(other)
        return VertexSet.from_mask(self.n, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check_universe(other)
        return VertexSet.from_mask(self.n, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check_universe(other)
        return VertexSet.from_mask(self.n, self.mask & ~other.mask)

    def issubset(self, other: VertexSet) -> bool:
        self._check_universe(other)
        return self.mask & ~other.mask == 0

    def with_vertex(self, v: int) -> VertexSet:
        """Return a copy with vertex ``v`` added."""
        if not 0 <= v < self.n:
            raise InvalidParameter(f"vertex {v} outside universe 0..{self.n - 1}")
        return VertexSet.from_mask(self.n, self.mask | 1 << v)

    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, members={self.members()})"


class Digraph:
    """Simple acyclic digraph, immutable after construction.

    Construction validates the arc list (range, self-loops, duplicates) and
    computes a topological order; a cyclic input raises :class:`CycleDetected`.
    Reachability rows and the underlying-adjacency masks are materialized
    lazily and cached.  All queries are pure, so a fully constructed instance
    is safe to share between threads.
    """

    __slots__ = (
        "n",
        "arcs",
        "out_adj",
        "in_adj",
        "_topo",
        "_desc",
        "_anc",
        "_und",
        "_connected",
    )

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]) -> None:
        if n < 0:
            raise InvalidParameter(f"vertex count must be >= 0, got {n}")
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for arc in arcs:
            u, v = arc
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArc(f"arc {u}->{v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InvalidArc(f"self-loop {u}->{v}")
            if (u, v) in seen:
                raise InvalidArc(f"duplicate arc {u}->{v}")
            seen.add((u, v))
            out[u].append(v)
            inn[v].append(u)
        self.n = n
        self.arcs = tuple(sorted(seen))
        self.out_adj = tuple(tuple(sorted(a)) for a in out)
        self.in_adj = tuple(tuple(sorted(a)) for a in inn)
        self._topo = self._topological_order()
        self._desc: list[int] | None = None
        self._anc: list[int] | None = None
        self._und: list[int] | None = None
        self._connected: bool | None = None

    def _topological_order(self) -> tuple[int, ...]:
        # Kahn's algorithm with a min-heap: deterministic, lexicographically
        # smallest order.
        indeg = [len(a) for a in self.in_adj]
        ready = [v for v in range(self.n) if indeg[v] == 0]
        heapq.heapify(ready)
        order: list[int] = []
        while ready:
            v = heapq.heappop(ready)
            order.append(v)
            for w in self.out_adj[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(ready, w)
        if len(order) != self.n:
            raise CycleDetected("arc set contains a directed cycle")
        return tuple(order)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @property
    def topological_order(self) -> tuple[int, ...]:
        return self._topo

    def descendant_masks(self) -> Sequence[int]:
        """Row ``v``: bitmask of all vertices reachable from ``v`` (reflexive)."""
        if self._desc is None:
            desc = [0] * self.n
            for v in reversed(self._topo):
                m = 1 << v
                for w in self.out_adj[v]:
                    m |= desc[w]
                desc[v] = m
            self._desc = desc
        return self._desc

    def ancestor_masks(self) -> Sequence[int]:
        """Row ``v``: bitmask of all vertices that reach ``v`` (reflexive)."""
        if self._anc is None:
            anc = [0] * self.n
            for v in self._topo:
                m = 1 << v
                for w in self.in_adj[v]:
                    m |= anc[w]
                anc[v] = m
            self._anc = anc
        return self._anc

    def underlying_masks(self) -> Sequence[int]:
        """Row ``v``: bitmask of neighbours of ``v`` ignoring arc direction."""
        if self._und is None:
            und = [0] * self.n
            for u, v in self.arcs:
                und[u] |= 1 << v
                und[v] |= 1 << u
            self._und = und
        return self._und

    def is_connected(self) -> bool:
        """Whether the underlying undirected graph is connected (n >= 1)."""
        if self._connected is None:
            self._connected = self.n >= 1 and _mask_connected(
                self.underlying_masks(), (1 << self.n) - 1
            )
        return self._connected

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Validate and build a :class:`Digraph` on vertices ``0..n-1``."""
    return Digraph(n, arcs)


def _mask_connected(und: Sequence[int], mask: int) -> bool:
    """Whether the vertices of ``mask`` induce a connected undirected graph."""
    if mask == 0:
        return False
    start = mask & -mask
    reached = start
    frontier = start
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= und[v]
        frontier = grown & mask & ~reached
        reached |= frontier
    return reached == mask


def _bfs_closure(adj: Sequence[Sequence[int]], seeds: Iterable[int]) -> int:
    """Bitmask of everything reachable from ``seeds`` along ``adj`` (reflexive)."""
    reached = 0
    queue = deque()
    for v in seeds:
        if not reached >> v & 1:
            reached |= 1 << v
            queue.append(v)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not reached >> w & 1:
                reached |= 1 << w
                queue.append(w)
    return reached


def _require_same_universe(d: Digraph, s: VertexSet) -> None:
    if s.n != d.n:
        raise InvalidParameter(f"set universe {s.n} does not match digraph order {d.n}")


def reachable_from(d: Digraph, s: VertexSet) -> VertexSet:
    """All vertices lying on a directed path starting in ``s`` (including ``s``)."""
    _require_same_universe(d, s)
    return VertexSet.from_mask(d.n, _bfs_closure(d.out_adj, s))


def reaching_to(d: Digraph, s: VertexSet) -> VertexSet:
    """All vertices from which some vertex of ``s`` is reachable (including ``s``)."""
    _require_same_universe(d, s)
    return VertexSet.from_mask(d.n, _bfs_closure(d.in_adj, s))


def is_underlying_connected(d: Digraph, s: VertexSet) -> bool:
    """Whether the subgraph induced by ``s`` is connected ignoring directions."""
    _require_same_universe(d, s)
    if not s:
        raise EmptySet("connectivity of the empty set is undefined")
    return _mask_connected(d.underlying_masks(), s.mask)


def sources_and_sinks(d: Digraph) -> tuple[VertexSet, VertexSet]:
    """The in-degree-zero and out-degree-zero vertex sets of ``d``."""
    src = 0
    snk = 0
    for v in range(d.n):
        if not d.in_adj[v]:
            src |= 1 << v
        if not d.out_adj[v]:
            snk |= 1 << v
    return VertexSet.from_mask(d.n, src), VertexSet.from_mask(d.n, snk)


def is_cut_vertex(d: Digraph, v: int) -> bool:
    """Whether removing ``v`` disconnects the underlying undirected graph."""
    if not 0 <= v < d.n:
        raise InvalidParameter(f"vertex {v} outside 0..{d.n - 1}")
    if d.n < 2:
        raise OrderTooSmall("cut-vertex test needs at least 2 vertices")
    if not d.is_connected():
        raise DisconnectedInput("cut-vertex test needs a connected digraph")
    rest = ((1 << d.n) - 1) & ~(1 << v)
    return not _mask_connected(d.underlying_masks(), rest)
