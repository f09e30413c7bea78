"""Dense symmetric eigenvalues by cyclic Jacobi rotations.

The sweep uses the round-robin (tournament) ordering so that the n/2
rotations of one step touch disjoint index pairs and can be applied
together as vectorised row and column updates.  The same kernel accepts
a stack of matrices ``(..., n, n)``, which is what the exhaustive sweeps
feed it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, OrderMismatchError

TOL_CONV = 1e-12
MAX_SWEEPS = 100


def tol_zero(n: int) -> float:
    """Threshold below which a distance Laplacian eigenvalue counts as zero."""
    return 1e-7 * max(n, 1)


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]  # non-increasing
    source: str = "numeric"

    def __post_init__(self) -> None:
        v = self.values
        if any(v[i] < v[i + 1] for i in range(len(v) - 1)):
            object.__setattr__(self, "values", tuple(sorted(v, reverse=True)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.values])


@lru_cache(maxsize=None)
def _rounds(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin schedule: every pair (p, q), p < q, exactly once per sweep.

    Circle method: player 0 stays put while the others rotate one seat per round.
    """
    m = n + (n % 2)
    tail = np.arange(1, m)
    rounds = []
    for r in range(m - 1):
        seats = np.concatenate(([0], np.roll(tail, r)))
        a, b = seats[: m // 2], seats[::-1][: m // 2]
        keep = (a < n) & (b < n)
        a, b = a[keep], b[keep]
        rounds.append((np.minimum(a, b).astype(np.intp), np.maximum(a, b).astype(np.intp)))
    return tuple(rounds)


@lru_cache(maxsize=None)
def _relayouts(n: int) -> tuple[tuple[np.ndarray, ...], np.ndarray, np.ndarray]:
    """Index permutations that bring each round's pairs to slots (0,1), (2,3), ...

    Odd orders get a dummy index n that is never coupled.  Returns the
    per-round permutations relative to the previous layout, the one that
    wraps from the last round of a sweep to the first, and the final layout.
    """
    m = n + (n % 2)
    layouts = []
    for p, q in _rounds(m):
        lay = np.empty(m, dtype=np.intp)
        lay[0::2], lay[1::2] = p, q
        layouts.append(lay)
    rels = []
    cur = np.arange(m)
    for lay in layouts + [layouts[0]]:
        pos = np.empty(m, dtype=np.intp)
        pos[cur] = np.arange(m)
        rels.append(pos[lay])
        cur = lay
    return tuple(rels[:-1]), rels[-1], layouts[-1]


def _off_norm(a: np.ndarray) -> np.ndarray:
    iu = np.triu_indices(a.shape[-1], 1)
    upper = a[..., iu[0], iu[1]]
    return np.sqrt(2.0 * np.einsum("...k,...k->...", upper, upper))


def _sweep(a: np.ndarray, rels: tuple[np.ndarray, ...]) -> np.ndarray:
    """One cyclic sweep over a stack (N, m, m); returns the matrices in the last layout.

    In each layout the pairs occupy adjacent columns, so a column pair
    (p, q) read as the complex number p + iq turns by one complex multiply
    with c + is.  A is symmetric at the start of a round, hence the row
    rotation J^T (A J) is the column rotation of (A J)^T.
    """
    k = np.arange(a.shape[-1] // 2)
    for rel in rels:
        a = np.ascontiguousarray(a[:, rel[:, None], rel])
        diag = np.diagonal(a, axis1=-2, axis2=-1)
        app = diag[:, 0::2]
        aqq = diag[:, 1::2]
        apq = a[:, 2 * k, 2 * k + 1]
        d = aqq - app
        sgn = np.where(d >= 0, 1.0, -1.0)
        denom = np.abs(d) + np.sqrt(d * d + 4.0 * apq * apq)
        safe = np.where(denom > 0, denom, 1.0)
        t = np.where(denom > 0, 2.0 * apq * sgn / safe, 0.0)
        c = 1.0 / np.sqrt(t * t + 1.0)
        turn = (c + 1j * (t * c))[:, None, :]
        a.view(np.complex128)[...] *= turn
        a = np.ascontiguousarray(a.transpose(0, 2, 1))
        a.view(np.complex128)[...] *= turn
        a[:, 2 * k, 2 * k + 1] = 0.0
        a[:, 2 * k + 1, 2 * k] = 0.0
    return 0.5 * (a + a.transpose(0, 2, 1))


def jacobi_eigenvalues(
    m: np.ndarray, tol: float = TOL_CONV, max_sweeps: int = MAX_SWEEPS
) -> np.ndarray:
    """Eigenvalues of one symmetric matrix or a stack of them, sorted descending.

    Iterates until the off-diagonal Frobenius norm of every matrix is at
    most ``tol * ||m||_F``.  Matrices leave the stack as soon as they
    converge, so each result is independent of what it was batched with.
    """
    a = np.array(m, dtype=np.float64, copy=True)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError("expected square matrix (or stack of square matrices)")
    n = a.shape[-1]
    a = 0.5 * (a + np.swapaxes(a, -1, -2))
    if n == 1:
        return a[..., 0, :].copy()
    batch_shape = a.shape[:-2]
    a = a.reshape((-1, n, n))
    target = tol * np.sqrt(np.einsum("...ij,...ij->...", a, a))
    size = n + (n % 2)
    if size != n:
        pad = np.zeros((a.shape[0], size, size))
        pad[:, :n, :n] = a
        a = pad
    rels, wrap, last = _relayouts(n)
    wrapped = (wrap,) + rels[1:]
    out = np.empty((a.shape[0], size))
    live = np.arange(a.shape[0])
    layout = np.arange(size)
    sweeps = 0
    while True:
        done = _off_norm(a) <= target[live]
        if done.any():
            vals = np.diagonal(a[done], axis1=-2, axis2=-1)
            out[live[done]] = vals[:, np.argsort(layout)]
            keep = ~done
            a, live = a[keep], live[keep]
        if live.size == 0:
            break
        if sweeps >= max_sweeps:
            worst = float(np.max(_off_norm(a) - target[live]))
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", worst)
        a = _sweep(a, rels if sweeps == 0 else wrapped)
        layout = last
        sweeps += 1
    vals = out[:, :n]  # the dummy index n of odd orders carries an exact 0 and is dropped
    return (-np.sort(-vals, axis=-1)).reshape(batch_shape + (n,))


def sym_eigenvalues(m: np.ndarray) -> Spectrum:
    return Spectrum(tuple(float(x) for x in jacobi_eigenvalues(m)), "numeric")


def positive_inertia(s: Spectrum | Sequence[float], tol: float | None = None) -> int:
    """Number of eigenvalues above ``+tol`` (default ``tol_zero(n)``)."""
    vals = list(s)
    tol = tol_zero(len(vals)) if tol is None else tol
    return sum(1 for x in vals if float(x) > tol)


def spectra_equal(a: Spectrum | Sequence[float], b: Spectrum | Sequence[float], tol: float) -> bool:
    va = sorted((float(x) for x in a), reverse=True)
    vb = sorted((float(x) for x in b), reverse=True)
    if len(va) != len(vb):
        raise OrderMismatchError(f"spectra of different lengths {len(va)} and {len(vb)}")
    return all(abs(x - y) <= tol for x, y in zip(va, vb))
