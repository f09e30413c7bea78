"""Edge-list and graph6 readers/writers."""

from __future__ import annotations

from .errors import Graph6ByteError, MalformedHeaderError, ParseError, VertexIndexError
from .graph import Graph, pair_order


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise MalformedHeaderError("first line must be 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except ValueError as exc:
        raise MalformedHeaderError(f"non-integer header {lines[0]!r}") from exc
    if n < 1 or m < 0:
        raise MalformedHeaderError(f"invalid header n={n} m={m}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedHeaderError(f"header announces {m} edges, found {len(body)}")
    seen: set[tuple[int, int]] = set()
    for lineno, parts in enumerate(body, start=2):
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer vertex") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise VertexIndexError(f"line {lineno}: vertex index outside 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
    return Graph.from_edges(n, seen)


def emit_edge_list(g: Graph) -> str:
    edges = g.sorted_edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise ValueError("graph6 supports at most 258047 vertices here")


def emit_graph6(g: Graph) -> str:
    bits = [1 if g.adj[i] >> j & 1 else 0 for i, j in pair_order(g.n)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise MalformedHeaderError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6ByteError(f"byte {ch!r} outside the graph6 range 63..126")
    if s[0] == "~":
        if len(s) >= 8 and s[1] == "~":
            raise MalformedHeaderError("8-byte graph6 headers (n > 258047) are not supported")
        if len(s) < 4:
            raise MalformedHeaderError("truncated graph6 header")
        n = sum((ord(c) - 63) << s_ for c, s_ in zip(s[1:4], (12, 6, 0)))
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1:
        raise MalformedHeaderError("graph6 header encodes zero vertices")
    pairs = pair_order(n)
    need = -(-len(pairs) // 6)
    if len(body) != need:
        raise MalformedHeaderError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[len(pairs):]):
        raise Graph6ByteError("non-zero padding bits in graph6 body")
    return Graph.from_edges(n, [pairs[p] for p in range(len(pairs)) if bits[p]])
