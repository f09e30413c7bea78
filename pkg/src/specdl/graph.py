"""Simple undirected graphs on dense integer vertices.

Adjacency is held as one integer bitset per vertex, which keeps BFS,
subset tests and small-n enumeration cheap.  Graphs are immutable and
hashable; two graphs compare equal only if they are equal as *labeled*
graphs.  Use :func:`canonical_form` / :func:`is_isomorphic` for the
unlabeled notion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import numpy as np

from .errors import MissingEdgeError, ParameterError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@lru_cache(maxsize=None)
def pair_order(n: int) -> tuple[Edge, ...]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


BITMATRIX_MIN_N = 64  # above this, whole-matrix numpy paths beat per-bit python loops


def bit_matrix(g: "Graph") -> np.ndarray:
    """0/1 adjacency as an (n, n) uint8 array, unpacked from the row bitsets."""
    nbytes = (g.n + 7) // 8
    raw = b"".join(row.to_bytes(nbytes, "little") for row in g.adj)
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8).reshape(g.n, nbytes),
                         axis=1, bitorder="little")
    return bits[:, : g.n]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterError(f"vertex count must be >= 1, got {self.n}")
        if len(self.adj) != self.n:
            raise ParameterError("adjacency length differs from n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ParameterError(f"vertex {v} has a neighbour >= n")
            if row >> v & 1:
                raise ParameterError(f"self-loop at vertex {v}")
        if self.n > BITMATRIX_MIN_N:
            bits = bit_matrix(self)
            if not np.array_equal(bits, bits.T):
                u, v = map(int, np.argwhere(bits != bits.T)[0])
                raise ParameterError(f"asymmetric adjacency between {u} and {v}")
            return
        for v, row in enumerate(self.adj):
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ParameterError(f"asymmetric adjacency between {v} and {u}")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        if n < 1:
            raise ParameterError(f"vertex count must be >= 1, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Build from an edge mask whose bit ``p`` is the ``p``-th pair of :func:`pair_order`."""
        rows = [0] * n
        for p, (i, j) in enumerate(pair_order(n)):
            if mask >> p & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(
            (u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.adj[u] >> v & 1
        )

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @cached_property
    def mask(self) -> int:
        out = 0
        for p, (i, j) in enumerate(pair_order(self.n)):
            if self.adj[i] >> j & 1:
                out |= 1 << p
        return out

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.adj[v] >> u & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def delete_edge(g: Graph, e: Edge) -> Graph:
    u, v = _norm_edge(*e)
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"edge ({u}, {v}) is not in the graph")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edge(g: Graph, e: Edge) -> Graph:
    u, v = _norm_edge(*e)
    if u == v or not (0 <= u and v < g.n):
        raise ParameterError(f"cannot add edge ({u}, {v})")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def union(*graphs: Graph) -> Graph:
    """Disjoint union; vertices of later graphs are shifted past earlier ones."""
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """``g1 ▽ g2``: disjoint union plus every edge between the two sides."""
    n1, n2 = g1.n, g2.n
    side1 = (1 << n1) - 1
    side2 = ((1 << n2) - 1) << n1
    rows = [row | side2 for row in g1.adj] + [(row << n1) | side1 for row in g2.adj]
    return Graph(n1 + n2, tuple(rows))


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components (as vertex bitsets) of the subgraph induced on ``within``."""
    remaining = (1 << g.n) - 1 if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = g.adj[low.bit_length() - 1] & remaining & ~comp
            comp |= nb
            frontier |= nb
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) == 1


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colouring of a connected graph, or ``None`` when an odd cycle exists.

    The side containing vertex 0 is returned first.
    """
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    for v in queue:
        for u in g.neighbors(v):
            if color[u] < 0:
                color[u] = 1 - color[v]
                queue.append(u)
            elif color[u] == color[v]:
                return None
    if -1 in color:
        # disconnected input: colour the rest component by component
        for s in range(g.n):
            if color[s] < 0:
                color[s] = 0
                queue = [s]
                for v in queue:
                    for u in g.neighbors(v):
                        if color[u] < 0:
                            color[u] = 1 - color[v]
                            queue.append(u)
                        elif color[u] == color[v]:
                            return None
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    b = frozenset(v for v in range(g.n) if color[v] == 1)
    return a, b


def relabel(g: Graph, order: list[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * g.n
    for i, v in enumerate(order):
        r = g.adj[v]
        row = 0
        while r:
            low = r & -r
            row |= 1 << pos[low.bit_length() - 1]
            r ^= low
        rows[i] = row
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# canonical form: colour refinement + individualisation, min code over leaves


def _refine(g: Graph, colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v)))) for v in range(g.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _code(g: Graph, order: list[int]) -> int:
    out = 0
    for p, (i, j) in enumerate(pair_order(g.n)):
        if g.adj[order[i]] >> order[j] & 1:
            out |= 1 << p
    return out


def _search(g: Graph, colors: list[int], best: list) -> None:
    if len(set(colors)) == g.n:
        order = sorted(range(g.n), key=colors.__getitem__)
        code = _code(g, order)
        if best[0] is None or code > best[0]:
            best[0], best[1] = code, order
        return
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    for v in range(g.n):
        if colors[v] != target:
            continue
        split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
        _search(g, _refine(g, split), best)


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order giving the canonical relabeling of ``g``.

    Exponential in the worst case (highly symmetric graphs); intended for
    the small orders used by the exhaustive searches.
    """
    if g.n == 1:
        return [0]
    best: list = [None, None]
    _search(g, _refine(g, g.degrees()), best)
    return best[1]


def canonical_form(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_key(g: Graph) -> tuple[int, int]:
    return g.n, canonical_form(g).mask


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


# ---------------------------------------------------------------------------
# enumeration

MAX_ENUM_N = 8


def enumerate_connected(n: int, unique: bool = False) -> Iterator[Graph]:
    """Yield every connected graph on ``n`` vertices.

    With ``unique=False`` (the default) every labeled graph is produced
    exactly once, in increasing edge-mask order.  ``unique=True`` yields one
    canonical representative per isomorphism class instead.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ParameterError(f"enumeration needs 1 <= n <= {MAX_ENUM_N}, got {n}")
    if unique:
        yield from _unlabeled_connected(n)
        return
    pairs = pair_order(n)
    for mask in range(1 << len(pairs)):
        g = Graph.from_mask(n, mask)
        if is_connected(g):
            yield g


@lru_cache(maxsize=None)
def _unlabeled_all(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all graphs (connected or not) on ``n`` vertices."""
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[int, Graph] = {}
    for h in _unlabeled_all(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(h.adj) + [nbrs]
            for u in range(n - 1):
                if nbrs >> u & 1:
                    rows[u] |= 1 << (n - 1)
            c = canonical_form(Graph(n, tuple(rows)))
            seen.setdefault(c.mask, c)
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def _unlabeled_connected(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in _unlabeled_all(n) if is_connected(g))
