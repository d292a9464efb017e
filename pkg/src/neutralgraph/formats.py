"""Serialization: graph6, edge lists, DOT, and the JSON report document."""

from __future__ import annotations

import json
import re

from .errors import DuplicateEdge, LoopRejected, ParseError, VertexOutOfRange
from .graph import Graph, build

GRAPH6_HEADER = ">>graph6<<"


def _size_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"order {n} too large for graph6")


def graph6_encode(g: Graph) -> str:
    """Upper triangle read column by column (v = 1..n-1, u < v), six bits per byte."""
    n = g.order
    bits = bytearray(n * (n - 1) // 2)
    for u, v in g.edges:
        bits[v * (v - 1) // 2 + u] = 1
    out = bytearray(_size_header(n))
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        val = 0
        for b in chunk:
            val = (val << 1) | b
        val <<= 6 - len(chunk)
        out.append(val + 63)
    return out.decode("ascii")


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    data = s.encode("ascii", errors="replace")
    if not data or any(c < 63 or c > 126 for c in data):
        raise ParseError(f"not a graph6 string: {text!r}")
    vals = [c - 63 for c in data]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size header")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    if n == 0:
        raise ParseError("graph6 order 0 is not a graph here")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    pad = 6 * len(body) - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits")
    return build(n, edges)


def edge_list_emit(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def edge_list_parse(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v". Blank lines and #-comments are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("empty input", line=1)
    lineno, header = rows[0]
    try:
        n, m = (int(x) for x in header.split())
    except ValueError:
        raise ParseError(f"expected header 'n m', got {header!r}", line=lineno) from None
    if n < 1 or m < 0:
        raise ParseError(f"bad header values n={n} m={m}", line=lineno)
    if len(rows) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(rows) - 1}", line=lineno)
    seen = set()
    edges = []
    for lineno, line in rows[1:]:
        try:
            u, v = (int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno) from None
        if u == v:
            raise LoopRejected(f"loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}", line=lineno)
        seen.add(key)
        edges.append(key)
    return build(n, edges)


def dot_emit(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.order)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


_EDGE_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


def parse_graph_text(text: str) -> list[Graph]:
    """Edge-list if the first content line is "n m", otherwise one graph6 per line."""
    content = [ln for ln in text.splitlines() if ln.split("#", 1)[0].strip()]
    if not content:
        raise ParseError("no graph in input")
    if _EDGE_HEADER.match(content[0].split("#", 1)[0]):
        return [edge_list_parse(text)]
    return [graph6_decode(ln) for ln in content]


def emit(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return graph6_encode(g) + "\n"
    if fmt == "edges":
        return edge_list_emit(g)
    if fmt == "dot":
        return dot_emit(g)
    raise ValueError(f"unknown format {fmt!r}")


def dumps_report(doc: dict) -> str:
    """Stable serialization: insertion-ordered keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"
