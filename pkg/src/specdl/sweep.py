"""Exhaustive verification of every bound over all labeled connected graphs.

The per-graph checks in :mod:`specdl.theorems` are re-expressed here on
the arrays of :mod:`specdl.batch`, reusing the same case-selection and
partial-sum helpers, so a full n = 7 sweep (1,866,256 labeled graphs) runs
in minutes rather than hours.  Comparisons use the same tolerances as the
scalar path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import theorems as th
from .batch import Invariants, invariants_for
from .errors import ParameterError
from .graph import Graph, canonical_form
from .io import emit_graph6

TOL = th.TOL_EQ
MAX_EXAMPLES = 8

SWEEP_IDS = (
    "edge-monotonicity",
    "dle-via-sk",
    "diameter2-transform",
    "brouwer",
    "sandwich-upper",
    "sandwich-lower",
    "sigma-t",
    "second-smallest",
    "wiener-lower",
    "bipartite-bound",
    "independence-bound",
    "connectivity-bound",
)


@dataclass
class SweepResult:
    theorem_id: str
    n: int
    checked: int = 0
    violations: int = 0
    equalities: int = 0
    predicted: int = 0
    mismatches: int = 0  # observed equality disagrees with the characterisation
    skipped: int = 0  # out of the bound's domain
    violation_examples: list[str] = field(default_factory=list)
    mismatch_examples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.mismatches == 0

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "n": self.n,
            "checked": self.checked,
            "violations": self.violations,
            "equalities": self.equalities,
            "predicted": self.predicted,
            "mismatches": self.mismatches,
            "skipped": self.skipped,
            "violation_examples": self.violation_examples,
            "mismatch_examples": self.mismatch_examples,
        }


def _examples(n: int, masks: np.ndarray) -> list[str]:
    seen: dict[str, None] = {}
    for mk in masks:
        g6 = emit_graph6(canonical_form(Graph.from_mask(n, int(mk))))
        seen.setdefault(g6, None)
        if len(seen) >= MAX_EXAMPLES:
            break
    return sorted(seen)


def _tally(tid: str, inv: Invariants, sel: np.ndarray, holds: np.ndarray, eq: np.ndarray,
           predicted: np.ndarray | None = None) -> SweepResult:
    """Summarise one theorem over the graphs ``sel`` (boolean mask over ``inv``)."""
    res = SweepResult(tid, inv.n, checked=int(sel.sum()))
    holds = holds & sel
    eq = eq & sel
    bad = sel & ~holds
    res.violations = int(bad.sum())
    res.equalities = int(eq.sum())
    res.violation_examples = _examples(inv.n, inv.mask[bad])
    if predicted is not None:
        predicted = predicted & sel
        res.predicted = int(predicted.sum())
        wrong = sel & (eq != predicted)
        res.mismatches = int(wrong.sum())
        res.mismatch_examples = _examples(inv.n, inv.mask[wrong])
    return res


class _Derived:
    """Float quantities shared by several checks."""

    def __init__(self, inv: Invariants):
        n = inv.n
        self.n = n
        self.avg_tr = 2.0 * inv.wiener / n
        self.avg_deg = 2.0 * inv.m / n
        cut_deg = self.avg_deg - 1e-9 * np.maximum(1.0, self.avg_deg)
        cut_tr = self.avg_tr - 1e-9 * np.maximum(1.0, self.avg_tr)
        self.sigma = (inv.rho >= cut_tr[:, None]).sum(axis=1)
        self.t_param = (inv.mu >= cut_deg[:, None]).sum(axis=1)
        self.dle = np.abs(inv.rho - self.avg_tr[:, None]).sum(axis=1)
        self.le = np.abs(inv.mu - self.avg_deg[:, None]).sum(axis=1)
        zeros = np.zeros((len(inv), 1))
        self.U = np.concatenate([zeros, np.cumsum(inv.rho, axis=1)], axis=1)  # U[:, k]
        self.S = np.concatenate([zeros, np.cumsum(inv.mu, axis=1)], axis=1)


def _ge(lhs, rhs):
    d = lhs - rhs
    return d >= -TOL, np.abs(d) <= TOL


def sweep_edge_monotonicity(inv: Invariants) -> SweepResult:
    n = inv.n
    pairs = n * (n - 1) // 2
    index = np.full(1 << pairs, -1, dtype=np.int64)
    index[inv.mask] = np.arange(len(inv))
    res = SweepResult("edge-monotonicity", n)
    bad_masks = []
    for p in range(pairs):
        parent = np.nonzero((inv.mask >> p) & 1)[0]
        child = index[inv.mask[parent] ^ (1 << p)]
        keep = child >= 0
        parent, child = parent[keep], child[keep]
        res.checked += len(parent)
        worse = np.any(inv.rho[child] < inv.rho[parent] - TOL, axis=1)
        res.violations += int(worse.sum())
        res.equalities += int(np.all(np.abs(inv.rho[child] - inv.rho[parent]) <= TOL, axis=1).sum())
        bad_masks.extend(inv.mask[parent[worse]].tolist())
    res.violation_examples = _examples(n, np.array(bad_masks, dtype=np.int64))
    return res


def run_sweep(n: int, theorem_ids: tuple[str, ...] | list[str] | None = None,
              inv: Invariants | None = None) -> dict[str, SweepResult]:
    """Evaluate the selected bounds (default: all) on every connected labeled graph of order n."""
    if not 3 <= n <= 7:
        raise ParameterError("exhaustive sweeps cover 3 <= n <= 7")
    ids = tuple(theorem_ids) if theorem_ids else SWEEP_IDS
    unknown = [t for t in ids if t not in SWEEP_IDS]
    if unknown:
        raise ParameterError(f"no sweep for {unknown}")
    inv = inv if inv is not None else invariants_for(n)
    d = _Derived(inv)
    N = len(inv)
    allg = np.ones(N, dtype=bool)
    diam2 = inv.diameter == 2
    m = inv.m.astype(float)
    w = inv.wiener.astype(float)
    rows = np.arange(N)
    out: dict[str, SweepResult] = {}

    if "edge-monotonicity" in ids:
        out["edge-monotonicity"] = sweep_edge_monotonicity(inv)

    if "dle-via-sk" in ids:
        k = np.clip(n - d.sigma - 1, 0, n)
        rhs = 2 * (d.sigma * (2 * m / n + 2) - 2 * m + d.S[rows, k])
        _, eq = _ge(d.dle, rhs)
        out["dle-via-sk"] = _tally("dle-via-sk", inv, diam2, eq, eq)

    if "diameter2-transform" in ids:
        pred = 2 * n - inv.mu[:, ::-1][:, 1:]  # 2n - mu_{n-i}, i = 1..n-1
        gap = np.abs(inv.rho[:, : n - 1] - pred).max(axis=1)
        ok = gap <= TOL
        out["diameter2-transform"] = _tally("diameter2-transform", inv, diam2, ok, ok)

    if "brouwer" in ids:
        holds = allg.copy()
        eq = np.zeros(N, dtype=bool)
        for k in range(1, n + 1):
            h, e = _ge(m + comb(k + 1, 2), d.S[:, k])
            holds &= h
            eq |= e
        out["brouwer"] = _tally("brouwer", inv, allg, holds, eq)

    if "sandwich-upper" in ids:
        h, e = _ge(d.le + 4 * (d.sigma - m / n), d.dle)
        out["sandwich-upper"] = _tally("sandwich-upper", inv, diam2, h, e)

    if "sandwich-lower" in ids:
        h, e = _ge(d.dle, d.le - 2 * (2 * m / n - 2 * (n - 1) + 2 * d.t_param))
        out["sandwich-lower"] = _tally("sandwich-lower", inv, diam2, h, e)

    if "sigma-t" in ids:
        h = d.sigma >= n - d.t_param - 1
        e = d.sigma == n - d.t_param - 1
        out["sigma-t"] = _tally("sigma-t", inv, diam2, h, e)

    if "second-smallest" in ids:
        h, e = _ge(n * inv.tr_min / (n - 1), inv.rho[:, n - 2])
        out["second-smallest"] = _tally("second-smallest", inv, allg, h, e, inv.tr_min == n - 1)

    if "wiener-lower" in ids:
        rhs = th.wiener_lower_rhs(n, w, inv.tr_min.astype(float))
        h, e = _ge(d.dle, rhs)
        pred = (d.sigma == n - 2) & (inv.tr_min == n - 1)
        out["wiener-lower"] = _tally("wiener-lower", inv, allg, h, e, pred)

    if "bipartite-bound" in ids:
        a, b = inv.part_a, inv.part_b
        case = th.bipartite_case(n, a, b)
        out_dom = inv.bipartite & (case == 0) & (n < 5)
        sel = inv.bipartite & ~out_dom
        u, sig = th.bipartite_partial_sum(n, a, b, case)
        rhs = 2 * (u - 2 * sig * w / n)
        h, e = _ge(d.dle, rhs)
        res = _tally("bipartite-bound", inv, sel, h, e, inv.m == a * b)
        res.skipped = int(out_dom.sum())
        out["bipartite-bound"] = res

    if "independence-bound" in ids:
        t = n - inv.alpha
        case = th.independence_case(n, inv.alpha)
        u, sig = th.split_partial_sum(n, t, case)
        rhs = 2 * (u - 2 * sig * w / n)
        h, e = _ge(d.dle, rhs)
        pred = inv.m == t * (t - 1) // 2 + t * (n - t)
        out["independence-bound"] = _tally("independence-bound", inv, allg, h, e, pred)

    if "connectivity-bound" in ids and n >= 4:
        k = inv.kappa
        complete = k == n - 1
        best = np.full(N, -np.inf)
        pred = complete.copy()
        for t in range(1, (n - 1) // 2 + 1):
            adm = (((inv.split_t >> t) & 1) == 1) & ~complete
            case = th.connectivity_case(n, k, t)
            u, sig = th.connectivity_partial_sum(n, k, t, case)
            rhs = 2 * (u - 2 * sig * w / n)
            best = np.where(adm, np.maximum(best, rhs), best)
            pred |= adm & (inv.m == comb(n, 2) - t * (n - k - t))
        best = np.where(complete, 2.0 * n - 2, best)
        h, e = _ge(d.dle, best)
        h = np.where(complete, e, h)
        out["connectivity-bound"] = _tally("connectivity-bound", inv, allg, h, e, pred)

    return out
