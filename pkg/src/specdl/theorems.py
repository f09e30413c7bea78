"""Evaluate the distance Laplacian energy bounds and identities on a graph.

Every check returns a :class:`BoundCheck` whose orientation is normalised
so that the claim reads ``lhs >= rhs``.  Identities set ``holds`` only when
both sides agree.  ``equality_predicted`` is the literal equality
characterisation attached to the bound (``None`` when there is none).

The extremal-family bounds (bipartite, independence number, vertex
connectivity) are all of the form

    DLE(G) >= 2 * (U_sigma(H) - 2 * sigma * W(G) / n)

with H the extremal graph and sigma its number of eigenvalues at or above
the average transmission.  The right-hand side is computed in that form,
from the exact spectrum of H.  The simplified polynomial each case is
usually quoted as is reported alongside (``extras["printed_rhs"]``),
together with a ``discrepancy`` flag when the two disagree.

The small ``*_case`` / ``*_partial_sum`` helpers only use arithmetic and
comparison operators, so they evaluate equally on Python integers and on
numpy arrays; the exhaustive sweep reuses them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Any

import numpy as np

from . import closed_form as cf
from .eigen import Spectrum, jacobi_eigenvalues, sym_eigenvalues
from .energy import dle, le, sigma_count, u_k
from .errors import DiameterError, DisconnectedGraphError, NotBipartiteError, ParameterError
from .families import FamilySpec, LAPLACIAN_INTEGRAL_KINDS, build
from .graph import Graph, bipartition, delete_edge, is_connected
from .metrics import (
    apsp,
    cut_split_sizes,
    distance_laplacian,
    independence_number,
    laplacian,
    vertex_connectivity,
)

TOL_EQ = 1e-7
TOL_INTEGRAL = 1e-6
MAX_CUT_SUBSETS = 200_000

THEOREM_IDS = (
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
    "floor-bipartite",
    "floor-connectivity",
    "integral-family",
)


@dataclass
class BoundCheck:
    theorem_id: str
    case_label: str
    lhs: Any
    rhs: Any
    holds: bool
    equality: bool
    equality_predicted: bool | None = None
    applicable: bool = True
    extras: dict = field(default_factory=dict)

    @property
    def characterization_ok(self) -> bool:
        """Observed equality agrees with the predicted one (vacuous if none predicted)."""
        return self.equality_predicted is None or self.equality == self.equality_predicted

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "case": self.case_label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "equality": self.equality,
            "equality_predicted": self.equality_predicted,
            "applicable": self.applicable,
            "extras": self.extras,
        }


def _exact(*xs) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in xs)


def compare(theorem_id: str, case: str, lhs, rhs, identity: bool = False, **kw) -> BoundCheck:
    if _exact(lhs, rhs):
        eq = lhs == rhs
        ge = lhs >= rhs
    else:
        diff = float(lhs) - float(rhs)
        eq = abs(diff) <= TOL_EQ
        ge = diff >= -TOL_EQ
    return BoundCheck(theorem_id, case, lhs, rhs, holds=eq if identity else ge, equality=eq, **kw)


class GraphProfile:
    """Lazily computed invariants of one connected graph."""

    def __init__(self, g: Graph):
        if not is_connected(g):
            raise DisconnectedGraphError("bounds are stated for connected graphs")
        self.g = g
        self.n = g.n
        self.m = g.m

    @cached_property
    def data(self):
        return apsp(self.g)

    @property
    def wiener(self) -> int:
        return self.data.wiener

    @property
    def tr_min(self) -> int:
        return self.data.tr_min

    @property
    def diameter(self) -> int:
        return self.data.diameter

    @property
    def avg_tr(self) -> Fraction:
        return Fraction(2 * self.wiener, self.n)

    @property
    def avg_deg(self) -> Fraction:
        return Fraction(2 * self.m, self.n)

    @cached_property
    def rho(self) -> Spectrum:
        return sym_eigenvalues(distance_laplacian(self.g, self.data))

    @cached_property
    def mu(self) -> Spectrum:
        return sym_eigenvalues(laplacian(self.g))

    @cached_property
    def dle(self) -> float:
        return dle(self.rho, self.wiener, self.n)

    @cached_property
    def le(self) -> float:
        return le(self.mu, self.m, self.n)

    @cached_property
    def sigma(self) -> int:
        return sigma_count(self.rho, self.avg_tr)

    @cached_property
    def t_param(self) -> int:
        return sigma_count(self.mu, self.avg_deg)

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.g)

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.g)

    @cached_property
    def parts(self) -> tuple[int, int] | None:
        bp = bipartition(self.g)
        if bp is None:
            return None
        a, b = sorted((len(bp[0]), len(bp[1])))
        return a, b


def _profile(g: Graph | GraphProfile) -> GraphProfile:
    return g if isinstance(g, GraphProfile) else GraphProfile(g)


def _need_diameter2(p: GraphProfile) -> None:
    if p.n < 3 or p.diameter != 2:
        raise DiameterError(f"needs diameter 2 and n >= 3 (got d={p.diameter}, n={p.n})")


# ---------------------------------------------------------------------------
# general bounds


def check_edge_monotonicity(g: Graph, e: tuple[int, int]) -> list[BoundCheck]:
    """rho_i(G - e) >= rho_i(G) for every index i."""
    h = delete_edge(g, e)
    if not is_connected(h):
        raise DisconnectedGraphError(f"deleting {e} disconnects the graph")
    before = GraphProfile(g).rho
    after = GraphProfile(h).rho
    return [
        compare("edge-monotonicity", f"i={i + 1}", after[i], before[i], extras={"edge": list(e)})
        for i in range(g.n)
    ]


def check_thm_dle_via_sk(g: Graph | GraphProfile) -> BoundCheck:
    """DLE = 2(sigma (2m/n + 2) - 2m + S_{n-sigma-1}) on diameter-2 graphs."""
    p = _profile(g)
    _need_diameter2(p)
    n, m, s = p.n, p.m, p.sigma
    rhs = 2 * (s * (2 * m / n + 2) - 2 * m + u_k(p.mu, n - s - 1))
    return compare("dle-via-sk", f"sigma={s}", p.dle, rhs, identity=True, extras={"sigma": s})


def check_diameter2_transform(g: Graph | GraphProfile) -> BoundCheck:
    """rho_i = 2n - mu_{n-i} (i < n) on diameter-2 graphs; lhs/rhs is the worst gap."""
    p = _profile(g)
    _need_diameter2(p)
    n = p.n
    predicted = cf.dl_from_laplacian_diam2(p.mu, n)
    gap = max(abs(float(x) - float(y)) for x, y in zip(p.rho, predicted))
    return BoundCheck("diameter2-transform", "", TOL_EQ, gap, gap <= TOL_EQ, gap <= TOL_EQ,
                      extras={"max_gap": gap})


def check_brouwer(g: Graph | GraphProfile, k: int) -> BoundCheck:
    """S_k <= m + C(k+1, 2)."""
    p = _profile(g)
    if not 1 <= k <= p.n:
        raise ParameterError(f"k={k} outside 1..{p.n}")
    return compare("brouwer", f"k={k}", p.m + comb(k + 1, 2), u_k(p.mu, k))


def check_brouwer_all(g: Graph | GraphProfile) -> list[BoundCheck]:
    p = _profile(g)
    return [check_brouwer(p, k) for k in range(1, p.n + 1)]


def check_sandwich(g: Graph | GraphProfile) -> tuple[BoundCheck, BoundCheck]:
    """LE - 2(2m/n - 2(n-1) + 2t) <= DLE <= LE + 4(sigma - m/n)."""
    p = _profile(g)
    _need_diameter2(p)
    n, m = p.n, p.m
    upper = compare("sandwich-upper", "upper", p.le + 4 * (p.sigma - m / n), p.dle)
    lower = compare("sandwich-lower", "lower", p.dle, p.le - 2 * (2 * m / n - 2 * (n - 1) + 2 * p.t_param))
    extras = {"sigma": p.sigma, "t": p.t_param, "le": p.le, "dle": p.dle}
    upper.extras.update(extras)
    lower.extras.update(extras)
    return upper, lower


def check_sigma_t_relation(g: Graph | GraphProfile) -> BoundCheck:
    p = _profile(g)
    _need_diameter2(p)
    return compare("sigma-t", "", p.sigma, p.n - p.t_param - 1, extras={"t": p.t_param})


def check_second_smallest_bound(g: Graph | GraphProfile) -> BoundCheck:
    """rho_{n-1} <= n Tr_min / (n-1); equality iff some vertex has transmission n-1."""
    p = _profile(g)
    if p.n < 3:
        raise ParameterError("needs n >= 3")
    n = p.n
    return compare(
        "second-smallest",
        "",
        Fraction(n * p.tr_min, n - 1),
        p.rho[n - 2],
        equality_predicted=p.tr_min == n - 1,
        extras={"tr_min": p.tr_min},
    )


def wiener_lower_rhs(n, wiener, tr_min):
    return 8 * wiener / n - 2 * n * tr_min / (n - 1)


def check_wiener_lower_bound(g: Graph | GraphProfile) -> BoundCheck:
    """DLE >= 8W/n - 2n Tr_min/(n-1); equality iff sigma = n-2 and Tr_min = n-1."""
    p = _profile(g)
    if p.n < 3:
        raise ParameterError("needs n >= 3")
    n = p.n
    rhs = wiener_lower_rhs(n, Fraction(p.wiener), Fraction(p.tr_min))
    return compare(
        "wiener-lower",
        "",
        p.dle,
        rhs,
        equality_predicted=(p.sigma == n - 2 and p.tr_min == n - 1),
        extras={"sigma": p.sigma, "tr_min": p.tr_min},
    )


# ---------------------------------------------------------------------------
# bipartite graphs


def bipartite_case(n, a, b):
    """Case code for parts a <= b: 0 -> a = b, 1 -> sigma = n-2, 2 -> sigma = b-1."""
    unequal = (a != b) * 1
    first = (2 * a * b >= n * (b - 2)) * 1
    return unequal * (2 - first)


def bipartite_partial_sum(n, a, b, case):
    """U_sigma(K_{a,b}) and sigma for the given case code (a <= b)."""
    c2 = (case == 2) * 1
    sigma = c2 * (b - 1) + (1 - c2) * (n - 2)
    u = c2 * (b - 1) * (2 * n - a) + (1 - c2) * ((b - 1) * (2 * n - a) + (a - 1) * (2 * n - b))
    return u, sigma


def bipartite_printed_rhs(n, a, b, case, wiener):
    if case == 0:
        return 12 * a * (a - 1) - 4 * (n - 2) * wiener / n
    if case == 1:
        return 4 * n * n - 6 * n - 4 * a * b - 4 * (n - 2) * wiener / n
    return 2 * (b - 1) * (2 * n - a - 2 * wiener / n)


def check_bipartite_bound(g: Graph | GraphProfile) -> BoundCheck:
    p = _profile(g)
    if p.parts is None:
        raise NotBipartiteError("graph has an odd cycle")
    if p.n < 3:
        raise ParameterError("needs n >= 3")
    a, b = p.parts
    n = p.n
    case = bipartite_case(n, a, b)
    predicted = p.m == a * b
    extras: dict = {"a": a, "b": b}
    if case == 0 and n < 5:
        return BoundCheck(
            "bipartite-bound", "out-of-domain (a=b, n<5)", p.dle, None, True, False,
            equality_predicted=predicted, applicable=False, extras=extras,
        )
    u, sigma = bipartite_partial_sum(n, a, b, case)
    w = Fraction(p.wiener)
    rhs = 2 * (u - 2 * sigma * w / n)
    printed = bipartite_printed_rhs(n, a, b, case, w)
    extras.update(sigma=sigma, printed_rhs=printed, discrepancy=printed != rhs)
    label = {0: "a=b", 1: "2ab>=n(max-2)", 2: "2ab<n(max-2)"}[case]
    return compare("bipartite-bound", label, p.dle, rhs, equality_predicted=predicted, extras=extras)


# ---------------------------------------------------------------------------
# independence number


def independence_case(n, alpha):
    """1 when t = n - alpha lies below n - 1/2 - sqrt(n + 1/4), else 2.

    t < n - 1/2 - sqrt(n + 1/4)  <=>  alpha (alpha - 1) > n  (alpha = n - t >= 1).
    """
    return 2 - (alpha * (alpha - 1) > n) * 1


def split_partial_sum(n, t, case):
    """U_sigma(CS_{t,n-t}) and sigma."""
    c1 = (case == 1) * 1
    sigma = c1 * (n - t - 1) + (1 - c1) * (n - 1)
    u = (n - t - 1) * (2 * n - t) + (1 - c1) * t * n
    return u, sigma


def independence_printed_rhs(n, t, case, wiener):
    if case == 1:
        return 2 * (n - t - 1) * (2 * n - t - 2 * wiener / n)
    return 4 * n * n - 2 * n * t - 4 * n + 2 * t * (t + 1) - 4 * (n - 1) * wiener / n


def check_independence_bound(g: Graph | GraphProfile) -> BoundCheck:
    p = _profile(g)
    if p.n < 3:
        raise ParameterError("needs n >= 3")
    n = p.n
    alpha = p.alpha
    t = n - alpha
    case = independence_case(n, alpha)
    u, sigma = split_partial_sum(n, t, case)
    w = Fraction(p.wiener)
    rhs = 2 * (u - 2 * sigma * w / n)
    printed = independence_printed_rhs(n, t, case, w)
    predicted = p.m == comb(t, 2) + t * (n - t)
    extras = {"alpha": alpha, "t": t, "sigma": sigma, "printed_rhs": printed,
              "discrepancy": printed != rhs}
    label = "t<n-1/2-sqrt(n+1/4)" if case == 1 else "t>=n-1/2-sqrt(n+1/4)"
    return compare("independence-bound", label, p.dle, rhs, equality_predicted=predicted, extras=extras)


# ---------------------------------------------------------------------------
# vertex connectivity


def connectivity_case(n, k, t):
    """1: k < (n-2t)/2 - n/(2t)  (sigma = t)
    2: in between              (sigma = n-k-1)
    3: k >= n - t - n/(2t)     (sigma = n-1)
    """
    c3 = (2 * t * (n - k - t) <= n) * 1
    c1 = (2 * t * t - (n - 2 * k) * t + n < 0) * 1
    return 3 * c3 + (1 - c3) * (2 - c1)


def connectivity_partial_sum(n, k, t, case):
    """U_sigma(K_k ▽ (K_t ∪ K_{n-k-t})) and sigma."""
    ge2 = (case >= 2) * 1
    ge3 = (case >= 3) * 1
    u = (2 * n - k) + (t - 1) * (2 * n - t - k)
    u = u + ge2 * (n - t - k - 1) * (n + t) + ge3 * k * n
    sigma = t + ge2 * (n - k - 1 - t) + ge3 * k
    return u, sigma


def connectivity_printed_rhs(n, k, t, case, wiener):
    if case == 1:
        return t * (2 * n - k - t + 1) - 2 * t * wiener / n
    if case == 2:
        return t * (3 * n - 2 * k - 2 * t) + n * (n - t - k - 1) - 2 * (n - k - 1) * wiener / n
    return n * (n - 1) + 2 * t * (n - k - t) - 2 * (n - 1) * wiener / n


def connectivity_bound_for_t(n: int, k: int, t: int, wiener: int) -> dict:
    case = connectivity_case(n, k, t)
    u, sigma = connectivity_partial_sum(n, k, t, case)
    w = Fraction(wiener)
    rhs = 2 * (u - 2 * sigma * w / n)
    printed = connectivity_printed_rhs(n, k, t, case, w)
    return {"t": t, "case": case, "sigma": sigma, "rhs": rhs, "printed_rhs": printed,
            "discrepancy": printed != rhs}


def admissible_split_sizes(p: GraphProfile) -> tuple[set[int], bool]:
    """t values for which g embeds in K_k ▽ (K_t ∪ K_{n-k-t}); second item
    is False when the cut search was skipped as too large (all t returned)."""
    n, k = p.n, p.kappa
    everything = set(range(1, (n - k) // 2 + 1))
    if comb(n, k) > MAX_CUT_SUBSETS:
        return everything, False
    return cut_split_sizes(p.g, k), True


def check_connectivity_bound(g: Graph | GraphProfile) -> BoundCheck:
    p = _profile(g)
    n = p.n
    if n < 4:
        raise ParameterError("needs n >= 4")
    k = p.kappa
    if k == n - 1:
        return compare("connectivity-bound", "complete (k=n-1)", p.dle, 2 * n - 2,
                       identity=True, equality_predicted=True, extras={"k": k})
    ts, searched = admissible_split_sizes(p)
    per_t = [connectivity_bound_for_t(n, k, t, p.wiener) for t in sorted(ts)]
    if searched:
        best = max(per_t, key=lambda r: r["rhs"])
        members = [t for t in ts if p.m == comb(n, 2) - t * (n - k - t)]
        predicted = bool(members)
    else:
        # without the cut structure only the weakest t is safe
        best = min(per_t, key=lambda r: r["rhs"])
        predicted = None
    extras = {"k": k, "t": best["t"], "sigma": best["sigma"], "printed_rhs": best["printed_rhs"],
              "discrepancy": best["discrepancy"], "admissible_t": sorted(ts)}
    label = f"case {best['case']}" + ("" if searched else " (min over t)")
    return compare("connectivity-bound", label, p.dle, best["rhs"],
                   equality_predicted=predicted, extras=extras)


# ---------------------------------------------------------------------------
# per-index eigenvalue floors


def check_eigenvalue_floor_corollaries(g: Graph | GraphProfile) -> list[BoundCheck]:
    """rho_i(G) >= rho_i(H) for the extremal H of each applicable class.

    Bipartite G (parts a <= b): H = K_{a,b}.  Non-complete G with n >= 4 and
    kappa = k: H = K_k ▽ (K_t ∪ K_{n-k-t}) for the binding admissible t.
    """
    p = _profile(g)
    n = p.n
    out: list[BoundCheck] = []
    if p.parts is not None and n >= 3:
        a, b = p.parts
        floors = cf.dl_spectrum_complete_bipartite(a, b).values()
        predicted = p.m == a * b
        for i in range(n - 1):
            out.append(compare("floor-bipartite", f"i={i + 1}", p.rho[i], floors[i],
                               equality_predicted=predicted, extras={"a": a, "b": b}))
    if n >= 4 and p.kappa <= n - 2:
        conn = check_connectivity_bound(p)
        k, t = conn.extras["k"], conn.extras["t"]
        floors = cf.dl_spectrum_connectivity_family(n, k, t).values()
        for i in range(n - 1):
            out.append(compare("floor-connectivity", f"i={i + 1}", p.rho[i], floors[i],
                               equality_predicted=conn.equality_predicted,
                               extras={"k": k, "t": t}))
    return out


# ---------------------------------------------------------------------------
# integrality of join families


def check_integral_family(spec: FamilySpec) -> BoundCheck:
    """All distance Laplacian eigenvalues of G0 ▽ (G1 ∪ G2) are integers."""
    if spec.kind != "join" or len(spec.left) != 1 or len(spec.right) != 2:
        raise ParameterError("expected a join of the form G0 ▽ (G1 ∪ G2)")
    parts = spec.left + spec.right
    if any(s.kind not in LAPLACIAN_INTEGRAL_KINDS for s in parts):
        raise ParameterError("parts must be Laplacian-integral families")
    g = build(spec)
    vals = jacobi_eigenvalues(distance_laplacian(g).astype(float))
    worst = float(np.max(np.abs(vals - np.round(vals))))
    holds = worst <= TOL_INTEGRAL
    return BoundCheck("integral-family", str(spec), TOL_INTEGRAL, worst, holds, False,
                      equality_predicted=None,
                      extras={"eigenvalues": [int(round(v)) for v in vals] if holds else list(vals)})


# ---------------------------------------------------------------------------


def check_all(g: Graph) -> list[BoundCheck]:
    """Every check applicable to ``g`` (edge monotonicity over all removable edges)."""
    p = GraphProfile(g)
    out: list[BoundCheck] = []
    n = p.n
    out += check_brouwer_all(p)
    if n >= 3:
        out.append(check_second_smallest_bound(p))
        out.append(check_wiener_lower_bound(p))
        out.append(check_independence_bound(p))
        if p.parts is not None:
            out.append(check_bipartite_bound(p))
    if n >= 3 and p.diameter == 2:
        out.append(check_thm_dle_via_sk(p))
        out.append(check_diameter2_transform(p))
        out.extend(check_sandwich(p))
        out.append(check_sigma_t_relation(p))
    if n >= 4:
        out.append(check_connectivity_bound(p))
    for e in g.sorted_edges():
        h = delete_edge(g, e)
        if is_connected(h):
            out.extend(check_edge_monotonicity(g, e))
    return out
