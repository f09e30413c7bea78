"""Shortest-path metrics, graph matrices and the combinatorial parameters
(independence number, vertex connectivity) the bounds condition on."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DisconnectedGraphError, ParameterError, SizeLimitError
from .graph import BITMATRIX_MIN_N, Graph, bit_matrix, complement, component_masks


@dataclass(frozen=True)
class DistanceData:
    dist: np.ndarray  # n x n int64, hop counts
    tr: np.ndarray  # transmissions
    wiener: int
    diameter: int

    @property
    def n(self) -> int:
        return len(self.tr)

    @property
    def tr_min(self) -> int:
        return int(self.tr.min())

    @property
    def twice_wiener(self) -> int:
        return 2 * self.wiener


def _apsp_matrix(g: Graph) -> np.ndarray:
    """All sources at once: one matrix product per BFS level."""
    n = g.n
    a = bit_matrix(g).astype(np.float32)
    dist = np.zeros((n, n), dtype=np.int64)
    seen = np.eye(n, dtype=bool)
    frontier = seen.astype(np.float32)
    d = 0
    while frontier.any():
        d += 1
        nxt = ((frontier @ a) > 0) & ~seen
        dist[nxt] = d
        seen |= nxt
        frontier = nxt.astype(np.float32)
    if not seen.all():
        raise DisconnectedGraphError("graph is disconnected; distances are undefined")
    return dist


def apsp(g: Graph) -> DistanceData:
    """Distances by one bitset BFS per source (level-synchronous matrix BFS for large n)."""
    n = g.n
    if n > BITMATRIX_MIN_N:
        dist = _apsp_matrix(g)
        tr = dist.sum(axis=1)
        return DistanceData(dist=dist, tr=tr, wiener=int(tr.sum()) // 2, diameter=int(dist.max()))
    full = (1 << n) - 1
    dist = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        row = [0] * n  # python list: scalar numpy stores dominate otherwise
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
            f = nxt
            while f:
                low = f & -f
                row[low.bit_length() - 1] = d
                f ^= low
        dist[s] = row
        if seen != full:
            raise DisconnectedGraphError("graph is disconnected; distances are undefined")
    tr = dist.sum(axis=1)
    return DistanceData(dist=dist, tr=tr, wiener=int(tr.sum()) // 2, diameter=int(dist.max()))


def adjacency_matrix(g: Graph) -> np.ndarray:
    if g.n > BITMATRIX_MIN_N:
        return bit_matrix(g).astype(np.int64)
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def laplacian(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) - a


def distance_matrix(g: Graph, data: DistanceData | None = None) -> np.ndarray:
    return (data or apsp(g)).dist.copy()


def distance_laplacian(g: Graph, data: DistanceData | None = None) -> np.ndarray:
    d = data or apsp(g)
    return np.diag(d.tr) - d.dist


# ---------------------------------------------------------------------------
# independence number

MAX_ALPHA_N = 32


def _max_clique(adj: list[int], n: int) -> int:
    """Branch and bound for the clique number with a greedy colouring bound."""
    best = 0

    def color_order(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; returns (vertex, colour bound) pairs
        out = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~low & ~adj[v]
                uncolored &= ~low
                out.append((v, color))
        return out

    def expand(size: int, cand: int) -> None:
        nonlocal best
        for v, bound in reversed(color_order(cand)):
            if size + bound <= best:
                return
            nxt = cand & adj[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def independence_number(g: Graph) -> int:
    if g.n > MAX_ALPHA_N:
        raise SizeLimitError(f"exact independence number limited to n <= {MAX_ALPHA_N}")
    return _max_clique(list(complement(g).adj), g.n)


def independence_number_brute(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        if s.bit_count() > best and all(not (g.adj[v] & s) for v in range(g.n) if s >> v & 1):
            best = s.bit_count()
    return best


# ---------------------------------------------------------------------------
# vertex connectivity


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Each vertex v is split into v_in = 2v and v_out = 2v + 1 joined by a
    unit arc; graph edges become infinite-capacity arcs out->in.
    """
    n = g.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    nbr: list[set[int]] = [set() for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        nbr[a].add(b)
        nbr[b].add(a)

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {src: src}
        q = deque([src])
        while q and sink not in parent:
            a = q.popleft()
            for b in nbr[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    q.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != src:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph, method: str = "flow") -> int:
    """kappa(G); ``n - 1`` for complete graphs by convention.

    ``method="flow"`` takes the minimum local connectivity over non-adjacent
    pairs; ``method="brute"`` searches vertex subsets by size (n <= 12).
    """
    if g.n < 2:
        raise ParameterError("vertex connectivity needs n >= 2")
    if len(component_masks(g)) != 1:
        raise DisconnectedGraphError("vertex connectivity of a disconnected graph")
    if _is_complete(g):
        return g.n - 1
    if method == "brute":
        if g.n > 12:
            raise SizeLimitError("subset brute force limited to n <= 12")
        full = (1 << g.n) - 1
        for k in range(1, g.n - 1):
            for cut in combinations(range(g.n), k):
                rest = full & ~sum(1 << v for v in cut)
                if len(component_masks(g, rest)) > 1:
                    return k
        raise AssertionError("non-complete graph without a vertex cut")
    if method != "flow":
        raise ParameterError(f"unknown method {method!r}")
    return min(
        _local_connectivity(g, s, t)
        for s in range(g.n)
        for t in range(s + 1, g.n)
        if not g.adj[s] >> t & 1
    )


def cut_split_sizes(g: Graph, k: int) -> set[int]:
    """Values t (1 <= t <= (n-k)/2) such that g is a spanning subgraph of
    K_k ▽ (K_t ∪ K_{n-k-t}) under some labeling.

    Equivalently: some k-set S disconnects g and the components of g - S can
    be grouped into two sides of sizes t and n - k - t.
    """
    n = g.n
    full = (1 << n) - 1
    out: set[int] = set()
    for cut in combinations(range(n), k):
        rest = full & ~sum(1 << v for v in cut)
        comps = component_masks(g, rest)
        if len(comps) < 2:
            continue
        sizes = [c.bit_count() for c in comps]
        reach = {0}
        for s in sizes:
            reach |= {r + s for r in reach}
        for r in reach:
            t = min(r, n - k - r)
            if t >= 1:
                out.add(t)
    return out
