"""Deterministic digraph family generators and their closed-form counts.

Four families are provided:

* ``dt`` -- two directed chains of length t joined through fan layers of
  width r = ceil(sqrt(t)) around a middle vertex z,
* ``gi`` -- a source and a sink joined by i internally disjoint paths with
  two internal vertices each,
* ``path`` -- the directed path on n vertices,
* ``rand`` -- seeded random connected DAGs for test corpora.

Label layouts are part of the contract: every generator documents exactly
which integer each named vertex gets, so callers can address x_t or z by
arithmetic instead of isomorphism searches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Digraph, build_digraph
from .errors import InvalidParameter

__all__ = [
    "FamilySpec",
    "gen_dt",
    "gen_gi",
    "gen_path",
    "gen_random_connected_dag",
    "dt_width",
    "dt_order",
    "dt_middle_vertices",
    "closed_form_gi_counts",
    "closed_form_path_counts",
]


def _ceil_sqrt(t: int) -> int:
    r = math.isqrt(t)
    return r if r * r == t else r + 1


def dt_width(t: int) -> int:
    """Fan width r = ceil(sqrt(t)) of the dt family."""
    if t < 1:
        raise InvalidParameter(f"dt parameter must be >= 1, got {t}")
    return _ceil_sqrt(t)


def dt_order(t: int) -> int:
    """Order 2t + 2r + 1 of the dt family."""
    return 2 * t + 2 * dt_width(t) + 1


def dt_middle_vertices(t: int) -> list[int]:
    """Labels of the fan layers and the middle vertex: y's, z, y-primes."""
    r = dt_width(t)
    return list(range(t, t + 2 * r + 1))


def gen_dt(t: int) -> tuple[Digraph, dict[str, int]]:
    """Chain-fan-z-fan-chain digraph of parameter t.

    Layout (consecutive labels): x1..xt are 0..t-1, y1..yr are t..t+r-1,
    z is t+r, y'1..y'r are t+r+1..t+2r, x'1..x't are t+2r+1..2t+2r.
    Arcs: the two chains x_i -> x_{i+1} and x'_i -> x'_{i+1}, plus
    x_t -> y_j, y_j -> z, z -> y'_j, y'_j -> x'_1 for every j.

    Returns the digraph and a label map with keys like "x1", "y2", "z",
    "y'1", "x'3".
    """
    r = dt_width(t)
    z = t + r
    xp = t + 2 * r + 1  # label of x'_1
    arcs: list[tuple[int, int]] = []
    for i in range(t - 1):
        arcs.append((i, i + 1))
        arcs.append((xp + i, xp + i + 1))
    for j in range(r):
        arcs.append((t - 1, t + j))
        arcs.append((t + j, z))
        arcs.append((z, z + 1 + j))
        arcs.append((z + 1 + j, xp))
    labels = {"z": z}
    for i in range(t):
        labels[f"x{i + 1}"] = i
        labels[f"x'{i + 1}"] = xp + i
    for j in range(r):
        labels[f"y{j + 1}"] = t + j
        labels[f"y'{j + 1}"] = z + 1 + j
    return build_digraph(2 * t + 2 * r + 1, arcs), labels


def gen_gi(i: int) -> tuple[Digraph, dict[str, int]]:
    """Source s, sink t, and i disjoint paths s -> a_j -> b_j -> t.

    Layout: s is 0, a_j is 2j-1, b_j is 2j, t is 2i+1.  Returns the
    digraph and a label map with keys "s", "t", "a1", "b1", ...
    """
    if i < 1:
        raise InvalidParameter(f"gi parameter must be >= 1, got {i}")
    sink = 2 * i + 1
    arcs: list[tuple[int, int]] = []
    labels = {"s": 0, "t": sink}
    for j in range(1, i + 1):
        a, b = 2 * j - 1, 2 * j
        arcs.extend([(0, a), (a, b), (b, sink)])
        labels[f"a{j}"] = a
        labels[f"b{j}"] = b
    return build_digraph(2 * i + 2, arcs), labels


def gen_path(n: int) -> Digraph:
    """Directed path 0 -> 1 -> ... -> n-1."""
    if n < 1:
        raise InvalidParameter(f"path order must be >= 1, got {n}")
    return build_digraph(n, [(j, j + 1) for j in range(n - 1)])


def gen_random_connected_dag(n: int, p: float, seed: int) -> Digraph:
    """Seeded random connected DAG; identical output for identical inputs.

    Draws a uniform permutation as the topological order, keeps each of the
    n(n-1)/2 forward pairs with probability p (one PCG64 stream, fixed draw
    order), then repairs connectivity by sweeping the order once and adding
    the arc between topologically consecutive vertices whenever they still
    lie in different underlying components.  Repair arcs are forward, so the
    result stays acyclic; the stream is pinned by a golden-file test.
    """
    if n < 1:
        raise InvalidParameter(f"order must be >= 1, got {n}")
    if not 0.0 < p <= 1.0:
        raise InvalidParameter(f"arc probability must be in (0, 1], got {p}")
    if not 0 <= seed < 2**64:
        raise InvalidParameter("seed must fit in 64 unsigned bits")
    rng = np.random.Generator(np.random.PCG64(seed))
    perm = [int(v) for v in rng.permutation(n)]
    draws = rng.random(n * (n - 1) // 2)
    arcs: list[tuple[int, int]] = []
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    k = 0
    for a in range(n - 1):
        for b in range(a + 1, n):
            if draws[k] < p:
                arcs.append((perm[a], perm[b]))
                parent[find(perm[a])] = find(perm[b])
            k += 1
    for a in range(n - 1):
        ra, rb = find(perm[a]), find(perm[a + 1])
        if ra != rb:
            arcs.append((perm[a], perm[a + 1]))
            parent[ra] = rb
    arcs.sort()
    return build_digraph(n, arcs)


@dataclass(frozen=True)
class FamilySpec:
    """A parsed family selector such as ``dt:4`` or ``rand:8:0.3:42``.

    ``param`` is t, i, or n depending on the family; ``p`` and ``seed`` are
    only set for ``rand``.
    """

    family: str
    param: int
    p: float | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.family not in ("dt", "gi", "path", "rand"):
            raise InvalidParameter(f"unknown family {self.family!r}")
        if self.param < 1:
            raise InvalidParameter(f"family parameter must be >= 1, got {self.param}")
        if self.family == "rand":
            if self.p is None or self.seed is None:
                raise InvalidParameter("rand family needs an arc probability and a seed")
            if not 0.0 < self.p <= 1.0:
                raise InvalidParameter(f"arc probability must be in (0, 1], got {self.p}")
            if not 0 <= self.seed < 2**64:
                raise InvalidParameter("seed must fit in 64 unsigned bits")
        elif self.p is not None or self.seed is not None:
            raise InvalidParameter(f"family {self.family!r} takes a single parameter")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``dt:T``, ``gi:I``, ``path:N``, or ``rand:N:P:SEED``."""
        parts = text.split(":")
        try:
            if len(parts) == 2:
                return cls(parts[0], int(parts[1]))
            if len(parts) == 4 and parts[0] == "rand":
                return cls("rand", int(parts[1]), float(parts[2]), int(parts[3]))
        except ValueError as exc:
            raise InvalidParameter(f"bad family spec {text!r}: {exc}") from exc
        raise InvalidParameter(f"bad family spec {text!r}")

    def spec_string(self) -> str:
        if self.family == "rand":
            return f"rand:{self.param}:{self.p!r}:{self.seed}"
        return f"{self.family}:{self.param}"

    @property
    def order(self) -> int:
        """Order of the digraph this spec generates."""
        if self.family == "dt":
            return dt_order(self.param)
        if self.family == "gi":
            return 2 * self.param + 2
        return self.param

    def build(self) -> Digraph:
        if self.family == "dt":
            return gen_dt(self.param)[0]
        if self.family == "gi":
            return gen_gi(self.param)[0]
        if self.family == "path":
            return gen_path(self.param)
        return gen_random_connected_dag(self.param, self.p, self.seed)


def closed_form_gi_counts(i: int) -> tuple[int, int]:
    """Lower bound 4^i - 1 on convex counts and exact 2*3^i + 3i + 1
    connected convex count of the gi family.

    Exact for any i thanks to arbitrary-precision integers; the connected
    count's exactness (the bound is attained) is established by brute force
    for small i in the test suite.
    """
    if i < 1:
        raise InvalidParameter(f"gi parameter must be >= 1, got {i}")
    return 4**i - 1, 2 * 3**i + 3 * i + 1


def closed_form_path_counts(n: int) -> tuple[int, tuple[int, ...]]:
    """Exact connected convex count n(n+1)/2 of the directed path, with its
    per-size histogram (n - k + 1 sets of each size k)."""
    if n < 1:
        raise InvalidParameter(f"path order must be >= 1, got {n}")
    return n * (n + 1) // 2, tuple(n - k + 1 for k in range(1, n + 1))
