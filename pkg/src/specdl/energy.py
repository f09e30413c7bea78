"""Graph energies and the spectral counting parameters.

Spectra may hold floats (numeric path) or ``Fraction``/``int`` values
(analytic path).  When every input is exact, results are exact
``Fraction``s and threshold comparisons are exact; otherwise floats with
a relative comparison tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Union

import numpy as np

from .eigen import Spectrum, jacobi_eigenvalues, sym_eigenvalues
from .errors import ParameterError
from .graph import Graph
from .metrics import apsp, distance_laplacian, distance_matrix, laplacian

Number = Union[float, Fraction, int]


def _vals(spectrum: Spectrum | Sequence[Number]) -> list[Number]:
    return list(spectrum)


def _is_exact(*xs: Number) -> bool:
    return all(isinstance(x, Rational) for x in xs)


def tol_cmp(threshold: float) -> float:
    return 1e-9 * max(1.0, abs(float(threshold)))


def _deviation_sum(vals: Sequence[Number], centre: Number) -> Number:
    if _is_exact(centre, *vals):
        return sum((abs(Fraction(x) - centre) for x in vals), Fraction(0))
    c = float(centre)
    return float(sum(abs(float(x) - c) for x in vals))


def dle(spectrum: Spectrum | Sequence[Number], wiener: int, n: int) -> Number:
    """Distance Laplacian energy: sum |rho_i - 2W/n|."""
    return _deviation_sum(_vals(spectrum), Fraction(2 * wiener, n))


def le(spectrum: Spectrum | Sequence[Number], m: int, n: int) -> Number:
    """Laplacian energy: sum |mu_i - 2m/n|."""
    return _deviation_sum(_vals(spectrum), Fraction(2 * m, n))


def de(distance_spectrum: Spectrum | Sequence[Number]) -> Number:
    return _deviation_sum(_vals(distance_spectrum), Fraction(0))


def sigma_count(spectrum: Spectrum | Sequence[Number], threshold: Number) -> int:
    """Number of eigenvalues >= threshold (sigma for D^L, t for L)."""
    vals = _vals(spectrum)
    if _is_exact(threshold, *vals):
        return sum(1 for x in vals if x >= threshold)
    cut = float(threshold) - tol_cmp(threshold)
    return sum(1 for x in vals if float(x) >= cut)


def u_k(spectrum: Spectrum | Sequence[Number], k: int) -> Number:
    """Sum of the k largest eigenvalues (U_k for D^L, S_k for L)."""
    vals = sorted(_vals(spectrum), reverse=True)
    if not 0 <= k <= len(vals):
        raise ParameterError(f"k={k} outside 0..{len(vals)}")
    if _is_exact(*vals):
        return sum((Fraction(x) for x in vals[:k]), Fraction(0))
    return float(sum(float(x) for x in vals[:k]))


s_k = u_k


def dle_via_max(spectrum: Spectrum | Sequence[Number], wiener: int, n: int) -> Number:
    """2 * max_j (U_j - 2jW/n), j = 1..n."""
    vals = sorted(_vals(spectrum), reverse=True)
    avg = Fraction(2 * wiener, n)
    if _is_exact(*vals):
        best = None
        run = Fraction(0)
        for j, x in enumerate(vals, start=1):
            run += x
            cur = run - j * avg
            best = cur if best is None else max(best, cur)
        return 2 * best
    arr = np.cumsum([float(x) for x in vals]) - np.arange(1, n + 1) * float(avg)
    return float(2 * arr.max())


def trace_norm_deviation(g: Graph) -> float:
    """Trace norm of D^L - (2W/n) I (sum of absolute eigenvalues)."""
    data = apsp(g)
    m = distance_laplacian(g, data).astype(float) - (2 * data.wiener / g.n) * np.eye(g.n)
    return float(np.abs(jacobi_eigenvalues(m)).sum())


@dataclass(frozen=True)
class EnergyReport:
    n: int
    m: int
    wiener: int
    dle: Number
    le: Number
    de: Number
    sigma: int
    t_param: int
    avg_transmission: Number
    avg_degree: Number
    exact: bool = False

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "wiener": self.wiener,
            "dle": self.dle,
            "le": self.le,
            "de": self.de,
            "sigma": self.sigma,
            "t": self.t_param,
            "avg_transmission": self.avg_transmission,
            "avg_degree": self.avg_degree,
            "exact": self.exact,
        }


def energy_report(
    g: Graph,
    dl_spectrum: Spectrum | None = None,
    lap_spectrum: Spectrum | None = None,
    dist_spectrum: Spectrum | None = None,
) -> EnergyReport:
    """Energies of ``g``; pass analytic spectra to get exact values where possible."""
    data = apsp(g)
    n, m, w = g.n, g.m, data.wiener
    rho = dl_spectrum or sym_eigenvalues(distance_laplacian(g, data))
    mu = lap_spectrum or sym_eigenvalues(laplacian(g))
    dist = dist_spectrum or sym_eigenvalues(distance_matrix(g, data))
    avg_tr = Fraction(2 * w, n)
    avg_deg = Fraction(2 * m, n)
    exact = _is_exact(*rho, *mu)
    return EnergyReport(
        n=n,
        m=m,
        wiener=w,
        dle=dle(rho, w, n),
        le=le(mu, m, n),
        de=de(dist),
        sigma=sigma_count(rho, avg_tr),
        t_param=sigma_count(mu, avg_deg),
        avg_transmission=avg_tr if exact else float(avg_tr),
        avg_degree=avg_deg if exact else float(avg_deg),
        exact=exact,
    )
