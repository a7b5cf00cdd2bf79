"""Graph serialization: whitespace edge lists and the graph6 short form.

Edge lists accept one "u v" pair per line; blank lines and `#` comments
are ignored; labels are arbitrary tokens remapped to dense indices in
first-appearance order. graph6 follows the public 6-bit upper-triangle
encoding (offset 63); only the single-byte size form (n <= 62) is
implemented.
"""

from __future__ import annotations

from .errors import GraphInputError
from .graph import Graph, build_graph

GRAPH6_MAX_N = 62
_G6_HEADER = ">>graph6<<"


def parse_edgelist(text: str) -> tuple[Graph, list[str]]:
    """Parse an edge-list document; returns the graph and the label order."""
    labels: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def index(token: str) -> int:
        if token not in labels:
            labels[token] = len(labels)
        return labels[token]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphInputError(
                f"line {lineno}: expected two vertex tokens, got {len(tokens)}: {raw.strip()!r}"
            )
        a, b = tokens
        if a == b:
            raise GraphInputError(f"line {lineno}: self-loop on {a!r}")
        edges.append((index(a), index(b)))
    ordered = [t for t, _ in sorted(labels.items(), key=lambda kv: kv[1])]
    return build_graph(len(labels), edges), ordered


def format_edgelist(g: Graph, labels: list[str] | None = None) -> str:
    if labels is not None and len(labels) != g.n:
        raise ValueError(f"got {len(labels)} labels for {g.n} vertices")
    name = (lambda v: labels[v]) if labels is not None else str
    return "".join(f"{name(u)} {name(v)}\n" for u, v in g.edges())


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(
            f"graph6 short form handles n <= {GRAPH6_MAX_N}, got n={g.n}"
        )
    n = g.n
    bits: list[int] = []
    for j in range(1, n):
        row = set(int(w) for w in g.neighbors(j))
        for i in range(j):
            bits.append(1 if i in row else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphInputError("empty graph6 string")
    first = ord(s[0])
    if first == 126:
        raise GraphInputError("extended graph6 sizes (n > 62) are not supported")
    if not 63 <= first <= 63 + GRAPH6_MAX_N:
        raise GraphInputError(f"invalid graph6 size byte {s[0]!r}")
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise GraphInputError(
            f"graph6 body length {len(body)} does not match n={n} (expected {need})"
        )
    bits: list[int] = []
    for ch in body:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise GraphInputError(f"invalid graph6 character {ch!r}")
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def write_graph(g: Graph, fmt: str, labels: list[str] | None = None) -> str:
    if fmt == "graph6":
        return encode_graph6(g) + "\n"
    if fmt == "edgelist":
        return format_edgelist(g, labels)
    raise ValueError(f"unknown graph format {fmt!r}")


def read_graph(text: str, fmt: str) -> tuple[Graph, list[str] | None]:
    if fmt == "graph6":
        return decode_graph6(text), None
    if fmt == "edgelist":
        g, labels = parse_edgelist(text)
        return g, labels
    raise ValueError(f"unknown graph format {fmt!r}")
