"""Textual graph formats: graph6 (short form, n <= 62) and edge lists.

graph6 packs the upper triangle column-major, 6 bits per printable
byte, each offset by 63.  The long form (n > 62) is rejected loudly;
everything in scope fits the short form.
"""

from __future__ import annotations

from .errors import MalformedInput
from .graphs import Graph

GRAPH6_MAX_N = 62


def graph_to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise MalformedInput(f"graph6 short form caps at n = {GRAPH6_MAX_N}, got {g.n}")
    chars = [chr(g.n + 63)]
    bits = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            bits = (bits << 1) | ((g.rows[u] >> v) & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(bits + 63))
                bits = 0
                nbits = 0
    if nbits:
        bits <<= 6 - nbits
        chars.append(chr(bits + 63))
    return "".join(chars)


def graph6_to_graph(text: str) -> Graph:
    if not text:
        raise MalformedInput("empty graph6 string", offset=0)
    first = ord(text[0])
    if first == 126:
        raise MalformedInput("graph6 long form (n > 62) is not supported", offset=0)
    if not 63 <= first <= 125:
        raise MalformedInput(f"invalid graph6 byte {text[0]!r}", offset=0)
    n = first - 63
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(text) != 1 + nbytes:
        raise MalformedInput(
            f"graph6 for n = {n} needs {1 + nbytes} bytes, got {len(text)}",
            offset=min(len(text), 1 + nbytes),
        )
    values = []
    for i, ch in enumerate(text[1:], start=1):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise MalformedInput(f"invalid graph6 byte {ch!r}", offset=i)
        values.append(o - 63)
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = values[idx // 6]
            bit = (byte >> (5 - idx % 6)) & 1
            if bit:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    # padding bits must be zero for a canonical encoding
    while idx < 6 * nbytes:
        if (values[idx // 6] >> (5 - idx % 6)) & 1:
            raise MalformedInput("nonzero padding bits", offset=1 + idx // 6)
        idx += 1
    return Graph(n, tuple(rows))


def graph_to_edgelist_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    for u, v in sorted(g.edges()):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def edgelist_text_to_graph(text: str) -> Graph:
    offset = 0
    lines = text.splitlines()
    if not lines:
        raise MalformedInput("empty edge list", offset=0)
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedInput("edge list header must be 'n m'", offset=0)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedInput("edge list header must be two integers", offset=0)
    offset = len(lines[0]) + 1
    edges = []
    for line in lines[1:]:
        stripped = line.strip()
        if stripped:
            pair = stripped.split()
            if len(pair) != 2:
                raise MalformedInput("edge line must be 'u v'", offset=offset)
            try:
                u, v = int(pair[0]), int(pair[1])
            except ValueError:
                raise MalformedInput("edge endpoints must be integers", offset=offset)
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise MalformedInput(f"bad edge ({u}, {v})", offset=offset)
            edges.append((u, v))
        offset += len(line) + 1
    if len(edges) != m:
        raise MalformedInput(f"header promises {m} edges, found {len(edges)}", offset=offset)
    return Graph.from_edges(n, edges)


def parse_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return graph6_to_graph(text.strip())
    if fmt == "edgelist":
        return edgelist_text_to_graph(text)
    raise MalformedInput(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return graph_to_graph6(g)
    if fmt == "edgelist":
        return graph_to_edgelist_text(g)
    raise MalformedInput(f"unknown graph format {fmt!r}")
