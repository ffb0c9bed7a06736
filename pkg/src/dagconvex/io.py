"""Reading and writing digraphs as text.

Edge-list format: optional ``#`` comment lines and blanks, then a header
line ``n m``, then m lines ``u v`` with 0-based labels.  A restricted DOT
subset (``digraph { u -> v; ... }`` with integer node ids) is accepted as
alternative input; :func:`load_digraph` sniffs which one it is looking at.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import Digraph, build_digraph
from .errors import DagConvexError, ParseError

__all__ = [
    "write_edge_list",
    "parse_edge_list",
    "parse_dot",
    "load_digraph",
    "digraph_to_edge_list",
]


def digraph_to_edge_list(d: Digraph, header: list[str] | None = None) -> str:
    """Render a digraph in edge-list form, arcs in ascending label order."""
    lines = [f"# {text}" for text in header or []]
    lines.append(f"{d.n} {d.arc_count}")
    lines.extend(f"{u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def write_edge_list(d: Digraph, path: str | Path, header: list[str] | None = None) -> None:
    Path(path).write_text(digraph_to_edge_list(d, header), encoding="ascii")


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def parse_edge_list(text: str) -> Digraph:
    """Parse the ``n m`` edge-list format; raises ParseError on bad input."""
    lines = _meaningful_lines(text)
    if not lines:
        raise ParseError("empty edge list: expected a header line 'n m'")
    lineno, head = lines[0]
    fields = head.split()
    if len(fields) != 2 or not all(f.isdigit() for f in fields):
        raise ParseError(f"line {lineno}: expected header 'n m', got {head!r}")
    n, m = int(fields[0]), int(fields[1])
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} arcs but {len(lines) - 1} lines follow")
    arcs = []
    for lineno, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(f"line {lineno}: expected arc 'u v', got {line!r}")
        arcs.append((int(fields[0]), int(fields[1])))
    try:
        return build_digraph(n, arcs)
    except DagConvexError as exc:
        raise ParseError(f"invalid digraph: {exc}") from exc


_DOT_ARC = re.compile(r"^(\d+)\s*->\s*(\d+)$")
_DOT_NODE = re.compile(r"^(\d+)$")


def parse_dot(text: str) -> Digraph:
    """Parse ``digraph { u -> v; ... }`` with integer ids only.

    Bare ``u;`` statements declare isolated vertices; the order is one more
    than the highest id mentioned anywhere.
    """
    stripped = text.strip()
    match = re.match(r"^digraph(\s+\w+)?\s*\{(.*)\}\s*$", stripped, re.DOTALL)
    if not match:
        raise ParseError("expected 'digraph { ... }'")
    arcs: list[tuple[int, int]] = []
    top = -1
    for part in match.group(2).replace("\n", ";").split(";"):
        stmt = part.strip()
        if not stmt:
            continue
        if arc := _DOT_ARC.match(stmt):
            u, v = int(arc.group(1)), int(arc.group(2))
            arcs.append((u, v))
            top = max(top, u, v)
        elif node := _DOT_NODE.match(stmt):
            top = max(top, int(node.group(1)))
        else:
            raise ParseError(f"unsupported DOT statement {stmt!r}")
    if top < 0:
        raise ParseError("DOT input declares no vertices")
    try:
        return build_digraph(top + 1, arcs)
    except DagConvexError as exc:
        raise ParseError(f"invalid digraph: {exc}") from exc


def load_digraph(path: str | Path) -> Digraph:
    """Load a digraph from a file, sniffing edge-list versus DOT syntax."""
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    lines = _meaningful_lines(text)
    if lines and lines[0][1].startswith("digraph"):
        return parse_dot(text)
    return parse_edge_list(text)
