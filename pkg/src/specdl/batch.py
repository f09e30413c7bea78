"""Vectorised invariants for every labeled connected graph of a small order.

A labeled graph on ``n`` vertices is an edge mask over :func:`pair_order`.
All invariants the bounds need are computed for whole chunks of masks at
once with numpy: bitset BFS for distances, the batched Jacobi solver for
spectra, subset scans for the independence number, vertex connectivity
and cut structure.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .eigen import jacobi_eigenvalues
from .errors import ParameterError
from .graph import pair_order

MAX_BATCH_N = 7
CHUNK = 1 << 15


def worker_count() -> int:
    env = os.environ.get("SPECDL_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _popcount(x: np.ndarray) -> np.ndarray:
    out = np.zeros(x.shape, dtype=np.int64)
    y = x.copy()
    while np.any(y):
        out += y & 1
        y >>= 1
    return out


def _rows(masks: np.ndarray, n: int) -> list[np.ndarray]:
    rows = [np.zeros(masks.shape, dtype=np.int64) for _ in range(n)]
    for p, (i, j) in enumerate(pair_order(n)):
        bit = (masks >> p) & 1
        rows[i] |= bit << j
        rows[j] |= bit << i
    return rows


def _reach(rows: list[np.ndarray], start: np.ndarray, within: int | np.ndarray) -> np.ndarray:
    seen = start & within
    frontier = seen
    n = len(rows)
    while np.any(frontier):
        nxt = np.zeros_like(seen)
        for v in range(n):
            nxt |= np.where((frontier >> v) & 1, rows[v], 0)
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def connected_masks(n: int) -> np.ndarray:
    """All edge masks (ascending) of connected labeled graphs on n vertices."""
    if not 1 <= n <= MAX_BATCH_N:
        raise ParameterError(f"batch enumeration needs 1 <= n <= {MAX_BATCH_N}")
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    total = 1 << (n * (n - 1) // 2)
    full = (1 << n) - 1
    keep = []
    for lo in range(0, total, 1 << 18):
        masks = np.arange(lo, min(total, lo + (1 << 18)), dtype=np.int64)
        rows = _rows(masks, n)
        seen = _reach(rows, np.ones_like(masks), full)
        keep.append(masks[seen == full])
    return np.concatenate(keep)


@lru_cache(maxsize=None)
def _subset_tables(n: int):
    pairs = pair_order(n)
    inside = np.zeros(1 << n, dtype=np.int64)
    for s in range(1 << n):
        mk = 0
        for p, (i, j) in enumerate(pairs):
            if s >> i & 1 and s >> j & 1:
                mk |= 1 << p
        inside[s] = mk
    # (|S|, t, cross-mask) for every split V = S ∪ A ∪ B with A, B non-empty
    splits = []
    full = (1 << n) - 1
    for k in range(0, n - 1):
        for cut in combinations(range(n), k):
            rest = full & ~sum(1 << v for v in cut)
            low = rest & -rest
            others = rest & ~low
            sub = others
            while True:
                a = low | sub
                b = rest & ~a
                if b:
                    cross = 0
                    for p, (i, j) in enumerate(pairs):
                        if (a >> i & 1 and b >> j & 1) or (b >> i & 1 and a >> j & 1):
                            cross |= 1 << p
                    t = min(bin(a).count("1"), bin(b).count("1"))
                    splits.append((k, t, cross))
                if sub == 0:
                    break
                sub = (sub - 1) & others
    return inside, splits


@dataclass
class Invariants:
    n: int
    mask: np.ndarray
    m: np.ndarray
    wiener: np.ndarray
    tr_min: np.ndarray
    diameter: np.ndarray
    rho: np.ndarray  # (N, n) descending
    mu: np.ndarray  # (N, n) descending
    alpha: np.ndarray
    kappa: np.ndarray
    split_t: np.ndarray  # bit t set when the graph embeds in K_k ▽ (K_t ∪ K_{n-k-t}), k = kappa
    bipartite: np.ndarray
    part_a: np.ndarray  # smaller side (valid where bipartite)
    part_b: np.ndarray

    def __len__(self) -> int:
        return len(self.mask)


_FIELDS = ("mask", "m", "wiener", "tr_min", "diameter", "rho", "mu", "alpha", "kappa",
           "split_t", "bipartite", "part_a", "part_b")


def _chunk_invariants(n: int, masks: np.ndarray) -> dict[str, np.ndarray]:
    N = len(masks)
    rows = _rows(masks, n)
    adj = np.zeros((N, n, n), dtype=np.int64)
    for v in range(n):
        for u in range(n):
            adj[:, v, u] = (rows[v] >> u) & 1
    deg = adj.sum(axis=2)
    m = deg.sum(axis=1) // 2

    dist = np.zeros((N, n, n), dtype=np.int64)
    for s in range(n):
        seen = np.full(N, 1 << s, dtype=np.int64)
        frontier = seen.copy()
        d = 0
        while np.any(frontier):
            d += 1
            nxt = np.zeros(N, dtype=np.int64)
            for v in range(n):
                nxt |= np.where((frontier >> v) & 1, rows[v], 0)
            nxt &= ~seen
            for v in range(n):
                dist[:, s, v] += d * ((nxt >> v) & 1)
            seen |= nxt
            frontier = nxt
    tr = dist.sum(axis=2)
    wiener = tr.sum(axis=1) // 2
    eye = np.eye(n, dtype=np.int64)
    dl = tr[:, :, None] * eye - dist
    lap = deg[:, :, None] * eye - adj
    rho = jacobi_eigenvalues(dl)
    mu = jacobi_eigenvalues(lap)

    inside, splits = _subset_tables(n)
    alpha = np.ones(N, dtype=np.int64)
    for s in range(1, 1 << n):
        size = bin(s).count("1")
        if size > 1:
            alpha = np.where((masks & inside[s]) == 0, np.maximum(alpha, size), alpha)

    hits = np.zeros((n, N), dtype=np.int64)
    for k, t, cross in splits:
        hits[k] |= np.where((masks & cross) == 0, 1 << t, 0)
    kappa = np.full(N, n - 1, dtype=np.int64)
    split_t = np.zeros(N, dtype=np.int64)
    for k in range(n - 2, -1, -1):
        found = hits[k] != 0
        kappa = np.where(found, k, kappa)
        split_t = np.where(found, hits[k], split_t)

    parity = dist[:, 0, :] & 1
    bip = np.ones(N, dtype=bool)
    for p, (i, j) in enumerate(pair_order(n)):
        bip &= ~((((masks >> p) & 1) == 1) & (parity[:, i] == parity[:, j]))
    ones = parity.sum(axis=1)
    part_a = np.minimum(ones, n - ones)
    return {
        "mask": masks,
        "m": m,
        "wiener": wiener,
        "tr_min": tr.min(axis=1),
        "diameter": dist.max(axis=(1, 2)),
        "rho": rho,
        "mu": mu,
        "alpha": alpha,
        "kappa": kappa,
        "split_t": split_t,
        "bipartite": bip,
        "part_a": part_a,
        "part_b": n - part_a,
    }


def _job(args):
    n, masks = args
    return _chunk_invariants(n, masks)


def compute_invariants(n: int, masks: np.ndarray | None = None, workers: int | None = None,
                       chunk: int = CHUNK) -> Invariants:
    """Invariants of the given masks (default: every connected labeled graph).

    Chunks are processed in mask order and concatenated in that order, so
    the result does not depend on ``workers``.
    """
    if masks is None:
        masks = connected_masks(n)
    workers = worker_count() if workers is None else workers
    jobs = [(n, masks[i : i + chunk]) for i in range(0, len(masks), chunk)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_job, jobs))
    else:
        parts = [_job(j) for j in jobs]
    merged = {f: np.concatenate([p[f] for p in parts]) for f in _FIELDS}
    return Invariants(n=n, **merged)


@lru_cache(maxsize=8)
def invariants_for(n: int) -> Invariants:
    """Cached invariants of all connected labeled graphs on ``n`` vertices."""
    return compute_invariants(n)
