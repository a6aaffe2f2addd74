"""Text formats: design files, graph adjacency lists.

Design files come in two layouts.  The block-list layout is a header line
``v b`` followed by one line of point indices per block.  The column layout
starts with a ``#cols`` line; each following row holds one entry per block,
so block j is column j.  Entries are whitespace separated labels, or, when
every row is a single token, one character per label.  Labels become point
indices in order of first appearance, reading the blocks left to right.

Every file written here starts with ``# locgame-format 1``.
"""
from __future__ import annotations

from typing import Iterable

from .designs import BLOCK, POINT, Design, Graph, IncidenceGraph

FORMAT_LINE = "# locgame-format 1"


class FormatError(ValueError):
    pass


def _content_lines(lines: Iterable[str]) -> list[str]:
    return [ln.strip() for ln in lines if ln.strip()]


def parse_design(text: str) -> Design:
    lines = _content_lines(text.splitlines())
    if not lines:
        raise FormatError("empty design file")
    for i, ln in enumerate(lines):
        if ln.lower().startswith("#cols"):
            return _parse_columns([x for x in lines[i + 1:] if not x.startswith("#")])
        if not ln.startswith("#"):
            break
    lines = [ln for ln in lines if not ln.startswith("#")]
    if not lines:
        raise FormatError("design file has no header")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'v b', got {lines[0]!r}")
    try:
        v, b = int(head[0]), int(head[1])
        blocks = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if len(blocks) != b:
        raise FormatError(f"header announces {b} blocks, found {len(blocks)}")
    for j, blk in enumerate(blocks):
        if len(set(blk)) != len(blk):
            raise FormatError(f"block {j} repeats a point")
        if any(not 0 <= x < v for x in blk):
            raise FormatError(f"block {j} has a point outside 0..{v - 1}")
    return Design(v, blocks)


def _parse_columns(rows: list[str]) -> Design:
    if not rows:
        raise FormatError("column layout has no rows")
    split = [r.split() for r in rows]
    if all(len(s) == 1 for s in split):
        split = [list(s[0]) for s in split]
    width = len(split[0])
    if any(len(s) != width for s in split):
        raise FormatError("column rows have different lengths")
    labels: dict[str, int] = {}
    blocks = []
    for j in range(width):
        blk = []
        for row in split:
            lab = row[j]
            if lab not in labels:
                labels[lab] = len(labels)
            blk.append(labels[lab])
        if len(set(blk)) != len(blk):
            raise FormatError(f"column {j} repeats a label")
        blocks.append(blk)
    return Design(len(labels), blocks)


def design_lines(design: Design) -> list[str]:
    out = [FORMAT_LINE, f"{design.v} {design.b}"]
    out.extend(" ".join(map(str, blk)) for blk in design.blocks)
    return out


def format_design(design: Design) -> str:
    return "\n".join(design_lines(design)) + "\n"


def graph_lines(g: Graph) -> list[str]:
    """One vertex per line: id, side tag (P, B, or - for plain graphs), sorted neighbours."""
    out = [FORMAT_LINE, f"graph {g.n}"]
    for x in range(g.n):
        if isinstance(g, IncidenceGraph):
            tag = POINT if g.is_point(x) else BLOCK
        else:
            tag = "-"
        out.append(" ".join([str(x), tag] + [str(y) for y in sorted(g.adjacency[x])]))
    return out


def format_graph(g: Graph) -> str:
    return "\n".join(graph_lines(g)) + "\n"


def parse_graph(text: str, name: str = "") -> Graph:
    lines = [ln for ln in _content_lines(text.splitlines()) if not ln.startswith("#")]
    if not lines or not lines[0].startswith("graph"):
        raise FormatError("graph file must start with 'graph n'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad graph header {lines[0]!r}") from exc
    adjacency: list[list[int]] = [[] for _ in range(n)]
    seen = set()
    for ln in lines[1:]:
        f = ln.split()
        x = int(f[0])
        if not 0 <= x < n or x in seen:
            raise FormatError(f"bad or repeated vertex line {ln!r}")
        seen.add(x)
        adjacency[x] = [int(y) for y in f[2:]]
    if len(seen) != n:
        raise FormatError(f"graph announces {n} vertices, found {len(seen)} lines")
    for x, nb in enumerate(adjacency):
        for y in nb:
            if not 0 <= y < n or x not in adjacency[y]:
                raise FormatError(f"edge {x}-{y} is not symmetric")
    return Graph.from_adjacency(adjacency, name=name)


def is_graph_text(text: str) -> bool:
    for ln in _content_lines(text.splitlines()):
        if ln.startswith("#"):
            continue
        return ln.startswith("graph")
    return False
