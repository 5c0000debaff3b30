"""Graph serialization: graph6, plain edge lists, and a JSON descriptor."""

from __future__ import annotations

from .bitgraph import EXPLICIT, FamilySpec, Graph, graph_from_edges
from .errors import ParameterOutOfRange


def _g6_size_bytes(n: int) -> list[int]:
    if n < 0:
        raise ParameterOutOfRange("negative vertex count")
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    if n <= 68719476735:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ParameterOutOfRange("vertex count too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode in the standard graph6 format (no header)."""
    n = g.n_vertices
    out = bytearray(_g6_size_bytes(n))
    bits = []
    for v in range(1, n):
        row = g.rows[v]
        for u in range(v):
            bits.append((row >> u) & 1)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode a graph6 line (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):].strip()
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ParameterOutOfRange("invalid graph6 character")
    if data[0] != 63:
        n = data[0]
        idx = 1
    elif len(data) > 1 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        idx = 4
    else:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        idx = 8
    bits = []
    for d in data[idx:]:
        for s_ in range(5, -1, -1):
            bits.append((d >> s_) & 1)
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise ParameterOutOfRange("truncated graph6 payload")
    edges = []
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if bits[pos]:
                edges.append((u, v))
            pos += 1
    return graph_from_edges(n, edges, FamilySpec(EXPLICIT))


def to_edgelist(g: Graph) -> str:
    """One 'u v' line per edge, decimal vertex ids, sorted."""
    return "\n".join(f"{u} {v}" for u, v in g.edges())


def from_edgelist(text: str, n_vertices: int | None = None) -> Graph:
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        u, v = (int(t) for t in line.split())
        edges.append((u, v))
        top = max(top, u, v)
    n = n_vertices if n_vertices is not None else top + 1
    return graph_from_edges(n, edges, FamilySpec(EXPLICIT))


def to_descriptor(g: Graph) -> dict:
    """JSON-ready graph descriptor {family, params, n_vertices, edges}."""
    fam = g.family.to_dict() if g.family is not None else None
    return {
        "family": fam["kind"] if fam else None,
        "params": {k: v for k, v in (fam or {}).items() if k != "kind"},
        "n_vertices": g.n_vertices,
        "edges": [list(e) for e in g.edges()],
    }


def from_descriptor(d: dict) -> Graph:
    kind = d.get("family") or EXPLICIT
    params = d.get("params", {})
    spec = FamilySpec(kind, params.get("n", 0), params.get("k"), params.get("m"))
    return graph_from_edges(d["n_vertices"], [tuple(e) for e in d["edges"]], spec)
