"""Enumeration and counting of convex and connected convex vertex sets.

Two independent routes are provided and cross-checked in the test suite:

* :func:`enumerate_brute` scans every non-empty subset with a bit-parallel
  convexity test (the oracle; capped at small orders), and
* :func:`enumerate_cc_extension` grows connected convex sets one adjacent
  vertex at a time, level by level over set sizes.

Counts, per-size histograms, and averages are exact; averages are kept as
fractions and rendered to six decimal digits with round-half-even.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .core import Digraph, VertexSet, _mask_connected, _require_same_universe, iter_bits
from .convexity import _violation_mask
from .errors import (
    DisconnectedInput,
    EmptyReport,
    EmptySet,
    InvalidParameter,
    OrderTooLarge,
)

__all__ = [
    "CONVEX",
    "CONNECTED_CONVEX",
    "BRUTE_SIZE_CAP",
    "EXTENSION_SIZE_CAP",
    "EnumerationReport",
    "Statistics",
    "SizeBoundRow",
    "SizeBoundTable",
    "enumerate_brute",
    "enumerate_cc_extension",
    "count_cc_within",
    "statistics",
    "verify_size_lower_bound",
    "format_fraction",
    "report_to_obj",
    "report_to_json",
    "report_from_json",
    "report_to_csv",
]

CONVEX = "convex"
CONNECTED_CONVEX = "connected-convex"

# Default caps; callers may raise them explicitly, at their own runtime risk.
BRUTE_SIZE_CAP = 25
EXTENSION_SIZE_CAP = 40

# The subset scan works on chunks of 2**_CHUNK_BITS masks to bound memory.
_CHUNK_BITS = 20


@dataclass(frozen=True)
class EnumerationReport:
    """Exact tallies for one set class of one digraph.

    ``histogram[k-1]`` is the number of counted sets of size k; the count
    and the sum of sizes are redundant with the histogram and are validated
    against it on construction.
    """

    kind: str
    n: int
    count: int
    size_sum: int
    histogram: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in (CONVEX, CONNECTED_CONVEX):
            raise InvalidParameter(f"unknown set class {self.kind!r}")
        if len(self.histogram) != self.n:
            raise InvalidParameter("histogram must have one entry per size 1..n")
        if self.count != sum(self.histogram):
            raise InvalidParameter("count does not match histogram total")
        if self.size_sum != sum(k * c for k, c in enumerate(self.histogram, 1)):
            raise InvalidParameter("size sum does not match histogram")

    @classmethod
    def from_histogram(cls, kind: str, n: int, histogram: list[int]) -> EnumerationReport:
        count = sum(histogram)
        size_sum = sum(k * c for k, c in enumerate(histogram, 1))
        return cls(kind, n, count, size_sum, tuple(histogram))

    def size_count(self, k: int) -> int:
        """Number of counted sets of size ``k``."""
        if not 1 <= k <= self.n:
            raise InvalidParameter(f"size {k} outside 1..{self.n}")
        return self.histogram[k - 1]

    @property
    def average(self) -> Fraction:
        if self.count == 0:
            raise EmptyReport("no sets counted; average undefined")
        return Fraction(self.size_sum, self.count)


class Statistics(NamedTuple):
    count: int
    size_sum: int
    average: Fraction
    average_text: str


def format_fraction(value: Fraction, places: int = 6) -> str:
    """Render a non-negative fraction with ``places`` digits, ties to even."""
    scale = 10**places
    q, r = divmod(value.numerator * scale, value.denominator)
    if 2 * r > value.denominator or (2 * r == value.denominator and q & 1):
        q += 1
    whole, frac = divmod(q, scale)
    return f"{whole}.{frac:0{places}d}"


def statistics(report: EnumerationReport) -> Statistics:
    """Exact count, sum of sizes, and average size of a report."""
    if report.count == 0:
        raise EmptyReport("no sets counted; statistics undefined")
    avg = report.average
    return Statistics(report.count, report.size_sum, avg, format_fraction(avg))


def _check_kind(kind: str) -> None:
    if kind not in (CONVEX, CONNECTED_CONVEX):
        raise InvalidParameter(f"set class must be {CONVEX!r} or {CONNECTED_CONVEX!r}")


def _or_table(rows: list[int]) -> np.ndarray:
    """table[mask] = OR of rows[b] over the set bits b of mask.

    Built by doubling: appending row b maps table over masks of bits < b to
    masks of bits <= b.
    """
    table = np.zeros(1, dtype=np.uint64)
    for row in rows:
        table = np.concatenate((table, table | np.uint64(row)))
    return table


def enumerate_brute(
    d: Digraph, kind: str, *, cap: int = BRUTE_SIZE_CAP
) -> tuple[list[VertexSet], EnumerationReport]:
    """Scan all non-empty subsets and keep those in the requested class.

    Sets are returned in ascending bitmask order.  The scan is bit-parallel:
    reachability unions for all masks of the low bits are tabulated once and
    combined with each pattern of the high bits, so chunks of 2**20 subsets
    are tested with a handful of vector operations.
    """
    _check_kind(kind)
    if d.n > cap:
        raise OrderTooLarge(f"brute force capped at n <= {cap}, got n = {d.n}")
    if d.n > 63:
        raise OrderTooLarge("bit-parallel scan supports n <= 63")
    n = d.n
    desc = list(d.descendant_masks())
    anc = list(d.ancestor_masks())
    lo = min(n, _CHUNK_BITS)
    lo_desc = _or_table(desc[:lo])
    lo_anc = _or_table(anc[:lo])
    hi_desc = _or_table(desc[lo:])
    hi_anc = _or_table(anc[lo:])
    lo_masks = np.arange(1 << lo, dtype=np.uint64)
    want_connected = kind == CONNECTED_CONVEX
    und = d.underlying_masks()
    hist = [0] * (n + 1)
    sets: list[VertexSet] = []
    for h in range(len(hi_desc)):
        base = h << lo
        du = lo_desc | hi_desc[h]
        au = lo_anc | hi_anc[h]
        full = lo_masks | np.uint64(base)
        ok = (du & au & ~full) == 0
        if base == 0:
            ok[0] = False  # the empty set is not counted
        for i in np.nonzero(ok)[0].tolist():
            mask = base | i
            if want_connected and not _mask_connected(und, mask):
                continue
            hist[mask.bit_count()] += 1
            sets.append(VertexSet.from_mask(n, mask))
    return sets, EnumerationReport.from_histogram(kind, n, hist[1:])


def enumerate_cc_extension(
    d: Digraph, *, max_size: int | None = None, cap: int = EXTENSION_SIZE_CAP
) -> tuple[list[VertexSet], EnumerationReport]:
    """Enumerate every connected convex set once, by ascending size.

    Level 1 holds all singletons; level k+1 holds every convex set obtained
    by adding one adjacent vertex to a level-k set.  Each level is emitted in
    ascending bitmask order, and only two levels are alive at a time.

    Why this finds everything: the subgraph induced by a connected convex
    set S of size k+1 is itself a connected acyclic digraph, so it has a
    source or sink v that is not a cut-vertex of it.  S minus v stays
    connected, and stays convex in the host digraph: a violating path would
    need v as an interior vertex, but interior vertices of a path inside S
    have both an in-arc and an out-arc within S, impossible for a source or
    sink of the induced subgraph.  So S extends a level-k set by one
    adjacent vertex.  The brute-force oracle equivalence test enforces this.
    """
    if d.n > cap:
        raise OrderTooLarge(f"extension enumerator capped at n <= {cap}, got n = {d.n}")
    if max_size is not None and max_size < 1:
        raise InvalidParameter(f"max_size must be >= 1, got {max_size}")
    if not d.is_connected():
        raise DisconnectedInput("extension enumeration needs a connected digraph")
    n = d.n
    desc = d.descendant_masks()
    anc = d.ancestor_masks()
    und = d.underlying_masks()
    limit = n if max_size is None else min(max_size, n)
    hist = [0] * (n + 1)
    sets: list[VertexSet] = []
    # mask -> (descendant union, ancestor union, neighbourhood union)
    level = {1 << v: (desc[v], anc[v], und[v]) for v in range(n)}
    size = 1
    while level:
        hist[size] = len(level)
        sets.extend(VertexSet.from_mask(n, m) for m in sorted(level))
        if size == limit:
            break
        grown: dict[int, tuple[int, int, int]] = {}
        rejected: set[int] = set()
        for mask, (du, au, nb) in level.items():
            for w in iter_bits(nb & ~mask):
                cand = mask | 1 << w
                if cand in grown or cand in rejected:
                    continue
                cdu = du | desc[w]
                cau = au | anc[w]
                if (cdu & cau) & ~cand:
                    rejected.add(cand)
                else:
                    grown[cand] = (cdu, cau, nb | und[w])
        level = grown
        size += 1
    return sets, EnumerationReport.from_histogram(CONNECTED_CONVEX, n, hist[1:])


def count_cc_within(
    d: Digraph, u: VertexSet, *, containing: VertexSet | None = None
) -> int:
    """Number of connected convex sets of ``d`` that are subsets of ``u``.

    Sets must be convex in ``d`` itself, not merely in the subgraph induced
    by ``u``.  With ``containing``, only sets that include all its vertices
    are counted.  Runs over all submasks of ``u``, so ``u`` should be small.
    """
    _require_same_universe(d, u)
    if not u:
        raise EmptySet("cannot count within the empty set")
    need = 0
    if containing is not None:
        _require_same_universe(d, containing)
        need = containing.mask
    und = d.underlying_masks()
    count = 0
    sub = u.mask
    while sub:
        if (
            need & ~sub == 0
            and _mask_connected(und, sub)
            and _violation_mask(d, sub) == 0
        ):
            count += 1
        sub = (sub - 1) & u.mask
    return count


class SizeBoundRow(NamedTuple):
    k: int
    count: int
    bound: int
    ok: bool


@dataclass(frozen=True)
class SizeBoundTable:
    """Per-size comparison of connected convex counts against n - k + 1."""

    n: int
    rows: tuple[SizeBoundRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)

    def to_csv(self) -> str:
        lines = ["k,count,bound,pass"]
        for row in self.rows:
            lines.append(f"{row.k},{row.count},{row.bound},{str(row.ok).lower()}")
        return "\n".join(lines) + "\n"


def verify_size_lower_bound(
    d: Digraph, *, cap: int = EXTENSION_SIZE_CAP
) -> SizeBoundTable:
    """Check that ``d`` has at least n - k + 1 connected convex sets of each size k."""
    _, report = enumerate_cc_extension(d, cap=cap)
    rows = tuple(
        SizeBoundRow(k, report.histogram[k - 1], d.n - k + 1, report.histogram[k - 1] >= d.n - k + 1)
        for k in range(1, d.n + 1)
    )
    return SizeBoundTable(d.n, rows)


def report_to_obj(report: EnumerationReport) -> dict:
    """The JSON-ready dict form of a report (fixed key order)."""
    avg = report.average
    return {
        "class": report.kind,
        "n": report.n,
        "count": report.count,
        "sum": report.size_sum,
        "average_num": avg.numerator,
        "average_den": avg.denominator,
        "histogram": list(report.histogram),
    }


def report_to_json(report: EnumerationReport) -> str:
    """Serialize a report to its stable JSON form."""
    return json.dumps(report_to_obj(report))


def report_from_json(text: str) -> EnumerationReport:
    """Parse a report serialized by :func:`report_to_json`."""
    obj = json.loads(text)
    try:
        report = EnumerationReport(
            kind=obj["class"],
            n=obj["n"],
            count=obj["count"],
            size_sum=obj["sum"],
            histogram=tuple(obj["histogram"]),
        )
        avg = Fraction(obj["average_num"], obj["average_den"])
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise InvalidParameter(f"malformed report JSON: {exc}") from exc
    if avg != report.average:
        raise InvalidParameter("average in JSON does not match count and sum")
    return report


def report_to_csv(report: EnumerationReport) -> str:
    """Serialize per-size counts with the n - k + 1 bound columns."""
    lines = ["k,count,bound,pass"]
    for k in range(1, report.n + 1):
        count = report.histogram[k - 1]
        bound = report.n - k + 1
        lines.append(f"{k},{count},{bound},{str(count >= bound).lower()}")
    return "\n".join(lines) + "\n"
