"""Reading and writing graphs: alist and a plain bipartite edge list.

alist (the usual sparse parity-check interchange format)::

    n m
    max_col_degree max_row_degree
    <n column degrees>
    <m row degrees>
    <n lines: 1-based row indices of each column, zero padded>
    <m lines: 1-based column indices of each row, zero padded>

Columns are variable nodes (U) and rows check nodes (W).  The column block is
authoritative; the row block only has to agree with it.

Edge list::

    bipartite n m
    u w        # one 0-based pair per line
"""
from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from .errors import (DegreeMismatch, InconsistentAdjacency, IndexOutOfRange,
                     MalformedHeader, MalformedLine)
from .graph import BipartiteGraph, build_graph

ALIST = "alist"
EDGELIST = "edgelist"
_EXTENSIONS = {".alist": ALIST, ".al": ALIST, ".el": EDGELIST, ".edges": EDGELIST,
               ".edgelist": EDGELIST, ".txt": EDGELIST}


def _ints(tokens: list[str], what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise MalformedHeader(f"non-integer token in {what}: {exc}") from None


def parse_alist(text: str) -> BipartiteGraph:
    lines = [ln.split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    tokens = [t for ln in lines for t in ln]
    if len(tokens) < 4:
        raise MalformedHeader("alist needs at least the two header lines")
    n, m, max_col, max_row = _ints(tokens[:4], "header")
    if n < 0 or m < 0 or max_col < 0 or max_row < 0:
        raise MalformedHeader("negative size in alist header")
    pos = 4
    if len(tokens) < pos + n + m:
        raise MalformedHeader("alist ends inside the degree lists")
    col_deg = _ints(tokens[pos:pos + n], "column degrees")
    row_deg = _ints(tokens[pos + n:pos + n + m], "row degrees")
    pos += n + m
    if any(d > max_col or d < 0 for d in col_deg):
        raise DegreeMismatch("column degree outside [0, max_col_degree]")
    if any(d > max_row or d < 0 for d in row_deg):
        raise DegreeMismatch("row degree outside [0, max_row_degree]")
    if sum(col_deg) != sum(row_deg):
        raise DegreeMismatch(
            f"column degrees sum to {sum(col_deg)}, row degrees to {sum(row_deg)}")

    rest = _ints(tokens[pos:], "index lists")
    if len(rest) == n * max_col + m * max_row:
        col_lists = _chunks(rest[:n * max_col], [max_col] * n)
        row_lists = _chunks(rest[n * max_col:], [max_row] * m)
    elif len(rest) == 2 * sum(col_deg):
        col_lists = _chunks(rest[:sum(col_deg)], col_deg)
        row_lists = _chunks(rest[sum(col_deg):], row_deg)
    else:
        # mixed padding: fall back on one list per line
        # skip the header and degree tokens, however they are wrapped
        skipped, k = 0, 0
        while k < len(lines) and skipped < 4 + n + m:
            skipped += len(lines[k])
            k += 1
        body = lines[k:]
        if skipped != 4 + n + m or len(body) != n + m:
            raise DegreeMismatch(
                f"cannot split {len(rest)} index tokens into {n} column and {m} row lists")
        col_lists = [_ints(ln, "column list") for ln in body[:n]]
        row_lists = [_ints(ln, "row list") for ln in body[n:]]

    edges = []
    for u, (entries, d) in enumerate(zip(col_lists, col_deg)):
        nz = [x for x in entries if x != 0]
        if len(nz) != d:
            raise DegreeMismatch(f"column {u + 1} lists {len(nz)} entries, degree says {d}")
        for x in nz:
            if not 1 <= x <= m:
                raise IndexOutOfRange(f"column {u + 1} refers to row {x} outside 1..{m}")
            edges.append((u, x - 1))
    graph = build_graph(n, m, edges)

    for w, (entries, d) in enumerate(zip(row_lists, row_deg)):
        nz = [x for x in entries if x != 0]
        if len(nz) != d:
            raise DegreeMismatch(f"row {w + 1} lists {len(nz)} entries, degree says {d}")
        for x in nz:
            if not 1 <= x <= n:
                raise IndexOutOfRange(f"row {w + 1} refers to column {x} outside 1..{n}")
        if sorted(x - 1 for x in nz) != list(graph.adj_w[w]):
            raise InconsistentAdjacency(f"row {w + 1} disagrees with the column block")
    return graph


def _chunks(values: list[int], sizes: list[int]) -> list[list[int]]:
    out, pos = [], 0
    for s in sizes:
        out.append(values[pos:pos + s])
        pos += s
    return out


def serialize_alist(graph: BipartiteGraph) -> str:
    col_deg = graph.u_degrees()
    row_deg = graph.w_degrees()
    max_col = max(col_deg, default=0)
    max_row = max(row_deg, default=0)
    out = [f"{graph.n} {graph.m}", f"{max_col} {max_row}",
           " ".join(map(str, col_deg)), " ".join(map(str, row_deg))]
    for ws in graph.adj_u:
        entries = [w + 1 for w in ws] + [0] * (max_col - len(ws))
        out.append(" ".join(map(str, entries)))
    for us in graph.adj_w:
        entries = [u + 1 for u in us] + [0] * (max_row - len(us))
        out.append(" ".join(map(str, entries)))
    return "\n".join(out) + "\n"


def parse_edgelist(text: str) -> BipartiteGraph:
    header: Optional[tuple[int, int]] = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0].lower() != "bipartite":
                raise MalformedLine(f"line {lineno}: expected 'bipartite n m', got {raw!r}")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise MalformedLine(f"line {lineno}: non-integer size in {raw!r}") from None
            continue
        if len(parts) != 2:
            raise MalformedLine(f"line {lineno}: expected 'u w', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MalformedLine(f"line {lineno}: non-integer endpoint in {raw!r}") from None
    if header is None:
        raise MalformedLine("missing 'bipartite n m' header")
    return build_graph(header[0], header[1], edges)


def serialize_edgelist(graph: BipartiteGraph) -> str:
    lines = [f"bipartite {graph.n} {graph.m}"]
    lines.extend(f"{u} {w}" for u, w in graph.edges())
    return "\n".join(lines) + "\n"


def detect_format(path: Union[str, Path], override: Optional[str] = None) -> str:
    if override:
        if override not in (ALIST, EDGELIST):
            raise ValueError(f"unknown format {override!r}")
        return override
    fmt = _EXTENSIONS.get(Path(path).suffix.lower())
    if fmt is None:
        raise ValueError(f"cannot infer the format of {path}; pass --format")
    return fmt


def read_graph(path: Union[str, Path], fmt: Optional[str] = None) -> BipartiteGraph:
    fmt = detect_format(path, fmt)
    text = Path(path).read_text()
    return parse_alist(text) if fmt == ALIST else parse_edgelist(text)


def write_graph(graph: BipartiteGraph, path: Union[str, Path], fmt: Optional[str] = None) -> None:
    fmt = detect_format(path, fmt)
    text = serialize_alist(graph) if fmt == ALIST else serialize_edgelist(graph)
    Path(path).write_text(text)
