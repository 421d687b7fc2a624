"""Standard graph6 text encoding of simple graphs (n <= 62).

Format: one byte n + 63, then the upper-triangle adjacency bits in
column-major order (pairs (0,1), (0,2), (1,2), (0,3), ...), packed
big-endian six per byte, each 6-bit group offset by 63.
"""

from __future__ import annotations

from .graphs import Graph


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def graph6_encode(g: Graph) -> str:
    if not g.is_simple():
        raise ValueError("graph6 requires a simple graph")
    if g.n > 62:
        raise ValueError("graph6 support here stops at n = 62")
    masks = g.adjacency_masks()
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(masks[i] >> j & 1)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 text")
    codes = [ord(ch) for ch in s]
    if any(c < 63 or c > 126 for c in codes):
        raise Graph6Error(f"character out of graph6 range in {text!r}")
    n = codes[0] - 63
    if n > 62:
        raise Graph6Error("multi-byte graph6 sizes not supported")
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    if len(codes) - 1 != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data characters for n={n}, got {len(codes) - 1}"
        )
    bits = []
    for c in codes[1:]:
        v = c - 63
        bits.extend((v >> k & 1) for k in range(5, -1, -1))
    if any(bits[need:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.build(n, edges)


def write_graph6_file(path, graphs) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")


def read_graph6_file(path) -> list[Graph]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(graph6_decode(line))
    return out
