"""Exhaustive extremal scans over small connected graphs.

``min_dle_over_class`` finds every graph (up to isomorphism) of minimum
distance Laplacian energy inside a class and compares the result with
the extremal graph the bounds predict.  ``sigma_census`` tabulates how
the counting parameter sigma is distributed at a given order.

Orders up to 7 scan every labeled graph through :mod:`specdl.batch`.
Order 8 (opt-in, about a minute) scans one canonical graph per
isomorphism class, which is equivalent because every class condition and
the energy are isomorphism invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .batch import Invariants, compute_invariants, connected_masks, invariants_for, worker_count
from .eigen import positive_inertia, sym_eigenvalues
from .energy import sigma_count
from .errors import ParameterError
from .families import build, complete, complete_bipartite, complete_split, connectivity_family
from .graph import Graph, canonical_form, enumerate_connected
from .io import emit_graph6
from .metrics import apsp, distance_laplacian, distance_matrix

CLASSES = ("bipartite", "independence", "connectivity", "all")
SCAN_MARGIN = 1e-6
REFINE_DIGITS = 40
TIE_TOL = mpmath.mpf(10) ** -25


@dataclass(frozen=True)
class ClassSpec:
    kind: str
    param: int | None = None  # alpha for independence, k for connectivity

    def __str__(self) -> str:
        return self.kind if self.param is None else f"{self.kind}:{self.param}"


def parse_class(text: str) -> ClassSpec:
    kind, _, param = text.partition(":")
    if kind not in CLASSES:
        raise ParameterError(f"unknown class {kind!r}; expected one of {', '.join(CLASSES)}")
    return ClassSpec(kind, int(param) if param else None)


@dataclass
class ExtremalResult:
    class_spec: ClassSpec
    n: int
    minimizer_graphs: list[str]
    min_dle: float
    matches_paper_prediction: bool | None
    predicted_graphs: list[str] = field(default_factory=list)
    unique_minimizer: bool = False
    witnessing_t: list[int] = field(default_factory=list)
    graphs_scanned: int = 0
    # non-normative: empirical maximizers, reported as evidence only
    max_dle: float | None = None
    maximizer_graphs: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "class": str(self.class_spec),
            "n": self.n,
            "minimizer_graphs": self.minimizer_graphs,
            "min_dle": self.min_dle,
            "matches_paper_prediction": self.matches_paper_prediction,
            "predicted_graphs": self.predicted_graphs,
            "unique_minimizer": self.unique_minimizer,
            "witnessing_t": self.witnessing_t,
            "graphs_scanned": self.graphs_scanned,
            "evidence_max_dle": self.max_dle,
            "evidence_maximizer_graphs": self.maximizer_graphs,
        }


def _check_n(n: int, allow_large: bool, hi: int = 8) -> None:
    if not 3 <= n <= hi:
        raise ParameterError(f"n must lie in 3..{hi}, got {n}")
    if n == 8 and not allow_large:
        raise ParameterError("n = 8 scans take about a minute; pass allow_large=True")


def scan_invariants(n: int, workers: int | None = None) -> Invariants:
    """Invariants of the graphs a scan of order ``n`` visits."""
    if n <= 7:
        if workers is None:
            return invariants_for(n)
        return compute_invariants(n, connected_masks(n), workers=workers)
    masks = np.array([g.mask for g in enumerate_connected(n, unique=True)], dtype=np.int64)
    return compute_invariants(n, masks, workers=workers)


def refined_dle(g: Graph) -> mpmath.mpf:
    """DLE to REFINE_DIGITS significant digits, for deciding near-ties."""
    data = apsp(g)
    with mpmath.workdps(REFINE_DIGITS + 10):
        mat = mpmath.matrix(distance_laplacian(g, data).tolist())
        vals = mpmath.eigsy(mat, eigvals_only=True)
        avg = mpmath.mpf(2 * data.wiener) / g.n
        return mpmath.fsum(abs(v - avg) for v in vals)


def _class_mask(spec: ClassSpec, inv: Invariants) -> np.ndarray:
    n = inv.n
    if spec.kind == "all":
        return np.ones(len(inv), dtype=bool)
    if spec.kind == "bipartite":
        return inv.bipartite.copy()
    if spec.param is None:
        raise ParameterError(f"class {spec.kind} needs a parameter")
    if spec.kind == "independence":
        if not 1 <= spec.param <= n - 1:
            raise ParameterError(f"independence number must lie in 1..{n - 1}")
        return inv.alpha == spec.param
    if not 1 <= spec.param <= n - 1:
        raise ParameterError(f"vertex connectivity must lie in 1..{n - 1}")
    return inv.kappa == spec.param


def _predicted(spec: ClassSpec, n: int) -> dict[str, int | None]:
    """graph6 of each predicted extremal graph -> its split size t (connectivity) or None."""
    if spec.kind == "bipartite":
        return {_canon6(build(complete_bipartite(n // 2, n - n // 2))): None}
    if spec.kind == "independence":
        t = n - spec.param
        return {_canon6(build(complete_split(t, n) if t < n else complete(n))): None}
    if spec.kind == "connectivity":
        k = spec.param
        if k == n - 1:
            return {_canon6(build(complete(n))): None}
        return {_canon6(build(connectivity_family(n, k, t))): t for t in range(1, (n - k) // 2 + 1)}
    return {}


def _canon6(g: Graph) -> str:
    return emit_graph6(canonical_form(g))


def _refine_extreme(n: int, masks: np.ndarray, vals: np.ndarray, target: float,
                    lowest: bool) -> dict[str, mpmath.mpf]:
    """Canonical graphs attaining the extreme DLE, keyed by graph6.

    Everything within SCAN_MARGIN of the float extreme is re-evaluated at
    high precision, so only genuine ties survive.
    """
    reps: dict[str, Graph] = {}
    for mk in masks[np.abs(vals - target) <= SCAN_MARGIN]:
        c = canonical_form(Graph.from_mask(n, int(mk)))
        reps.setdefault(emit_graph6(c), c)
    exact = {g6: refined_dle(g) for g6, g in reps.items()}
    best = min(exact.values()) if lowest else max(exact.values())
    return {g6: v for g6, v in exact.items() if abs(v - best) <= TIE_TOL}


def min_dle_over_class(spec: ClassSpec | str, n: int, allow_large: bool = False,
                       workers: int | None = None, inv: Invariants | None = None) -> ExtremalResult:
    """All minimum-DLE graphs of order ``n`` in the class, up to isomorphism."""
    spec = parse_class(spec) if isinstance(spec, str) else spec
    _check_n(n, allow_large)
    inv = inv if inv is not None else scan_invariants(n, workers)
    sel = _class_mask(spec, inv)
    if not sel.any():
        raise ParameterError(f"no connected graph of order {n} in class {spec}")
    dles = np.abs(inv.rho - (2.0 * inv.wiener / n)[:, None]).sum(axis=1)
    masks, vals = inv.mask[sel], dles[sel]

    lo = _refine_extreme(n, masks, vals, float(vals.min()), lowest=True)
    hi = _refine_extreme(n, masks, vals, float(vals.max()), lowest=False)
    minimizers = sorted(lo)
    min_dle = float(min(lo.values()))

    predicted = _predicted(spec, n)
    matches: bool | None
    if predicted:
        hit = [g6 for g6 in predicted if g6 in lo]
        matches = bool(hit)
        witness = sorted(t for g6, t in predicted.items() if g6 in lo and t is not None)
    else:
        matches, witness = None, []
    unique = len(minimizers) == 1 and minimizers[0] in predicted
    return ExtremalResult(
        class_spec=spec,
        n=n,
        minimizer_graphs=minimizers,
        min_dle=min_dle,
        matches_paper_prediction=matches,
        predicted_graphs=sorted(predicted),
        unique_minimizer=unique,
        witnessing_t=witness,
        graphs_scanned=int(sel.sum()),
        max_dle=float(max(hi.values())),
        maximizer_graphs=sorted(hi),
    )


# ---------------------------------------------------------------------------


@dataclass
class SigmaCensus:
    n: int
    histogram: dict[int, int]  # sigma -> number of isomorphism classes
    sigma_one: list[str]
    sigma_n_minus_2: list[str]
    sigma_n_minus_1: list[str]
    transmission_regular: list[dict]  # graph6, sigma, gamma, holds

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "sigma_1": self.sigma_one,
            "sigma_n_minus_2": self.sigma_n_minus_2,
            "sigma_n_minus_1": self.sigma_n_minus_1,
            "transmission_regular": self.transmission_regular,
        }


def sigma_census(n: int) -> SigmaCensus:
    """sigma over every connected graph of order n (one per isomorphism class).

    For transmission-regular graphs the relation sigma = n - gamma, gamma the
    positive inertia of the distance matrix, is checked as well.
    """
    if not 3 <= n <= 7:
        raise ParameterError(f"census needs 3 <= n <= 7, got {n}")
    hist: dict[int, int] = {}
    lists: dict[int, list[str]] = {1: [], n - 2: [], n - 1: []}
    regular = []
    for g in enumerate_connected(n, unique=True):
        data = apsp(g)
        rho = sym_eigenvalues(distance_laplacian(g, data))
        s = sigma_count(rho, Fraction(2 * data.wiener, n))
        hist[s] = hist.get(s, 0) + 1
        g6 = emit_graph6(g)
        if s in lists:
            lists[s].append(g6)
        if len(set(data.tr)) == 1:
            gamma = positive_inertia(sym_eigenvalues(distance_matrix(g, data)))
            regular.append({"graph6": g6, "sigma": s, "gamma": gamma, "holds": s == n - gamma})
    return SigmaCensus(n, hist, sorted(lists[1]), sorted(lists[n - 2]), sorted(lists[n - 1]),
                       sorted(regular, key=lambda r: r["graph6"]))


def scan_all_classes(n: int, allow_large: bool = False, workers: int | None = None) -> list[ExtremalResult]:
    """Every class at order n: bipartite, each alpha, each k (shares one scan)."""
    _check_n(n, allow_large)
    inv = scan_invariants(n, workers)
    out = [min_dle_over_class(ClassSpec("bipartite"), n, inv=inv)]
    out += [min_dle_over_class(ClassSpec("independence", a), n, inv=inv) for a in range(1, n)]
    out += [min_dle_over_class(ClassSpec("connectivity", k), n, inv=inv) for k in range(1, n)]
    return out


__all__ = [
    "CLASSES",
    "ClassSpec",
    "ExtremalResult",
    "SigmaCensus",
    "min_dle_over_class",
    "parse_class",
    "refined_dle",
    "scan_all_classes",
    "scan_invariants",
    "sigma_census",
    "worker_count",
]
