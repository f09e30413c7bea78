"""Closed-form distance Laplacian spectra, in exact arithmetic.

Each function returns an :class:`AnalyticSpectrum`, a multiset of exact
eigenvalues.  Where the family's Wiener index has a closed form too it is
carried along as ``twice_wiener``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import sympy

from .eigen import Spectrum
from .errors import OrderMismatchError, ParameterError


@dataclass(frozen=True)
class AnalyticSpectrum:
    pairs: tuple[tuple[Fraction, int], ...]  # (eigenvalue, multiplicity), descending
    twice_wiener: int | None = None

    @classmethod
    def from_values(cls, values: Iterable, twice_wiener: int | None = None) -> "AnalyticSpectrum":
        counts = Counter(Fraction(v) for v in values)
        pairs = tuple(sorted(counts.items(), key=lambda p: p[0], reverse=True))
        return cls(pairs, twice_wiener)

    @property
    def n(self) -> int:
        return sum(k for _, k in self.pairs)

    def values(self) -> list[Fraction]:
        return [v for v, k in self.pairs for _ in range(k)]

    def spectrum(self) -> Spectrum:
        return Spectrum(tuple(self.values()), "analytic")

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v, _ in self.pairs)


def _mult(*items: tuple[int | Fraction, int]) -> list[Fraction]:
    out = []
    for v, k in items:
        if k < 0:
            raise ParameterError("negative multiplicity")
        out.extend([Fraction(v)] * k)
    return out


def dl_spectrum_complete(n: int) -> AnalyticSpectrum:
    if n < 1:
        raise ParameterError("n >= 1 required")
    return AnalyticSpectrum.from_values(_mult((n, n - 1), (0, 1)), n * (n - 1))


def dl_spectrum_complete_bipartite(a: int, b: int) -> AnalyticSpectrum:
    if a < 1 or b < 1:
        raise ParameterError("a, b >= 1 required")
    n = a + b
    vals = _mult((2 * n - a, b - 1), (2 * n - b, a - 1), (n, 1), (0, 1))
    return AnalyticSpectrum.from_values(vals, 2 * n * n - 2 * n - 2 * a * b)


def dl_spectrum_complete_split(t: int, n: int) -> AnalyticSpectrum:
    """CS_{t,n-t}: clique on t vertices joined to an independent set of n - t."""
    if not 1 <= t <= n - 1:
        raise ParameterError("1 <= t <= n-1 required")
    vals = _mult((2 * n - t, n - t - 1), (n, t), (0, 1))
    return AnalyticSpectrum.from_values(vals, 2 * n * (n - t - 1) + t * (t + 1))


def dl_spectrum_connectivity_family(n: int, k: int, t: int) -> AnalyticSpectrum:
    """K_k ▽ (K_t ∪ K_{n-k-t})."""
    if not 1 <= k <= n - 2:
        raise ParameterError("1 <= k <= n-2 required")
    if not 1 <= t <= (n - k) // 2:
        raise ParameterError("1 <= t <= floor((n-k)/2) required")
    vals = _mult(
        (2 * n - k, 1), (2 * n - t - k, t - 1), (n + t, n - t - k - 1), (n, k), (0, 1)
    )
    return AnalyticSpectrum.from_values(vals, n * (n - 1) + 2 * t * (n - k - t))


def quotient_roots(n: int, n0: int) -> tuple[int, int]:
    """Non-zero eigenvalues of the 3x3 quotient matrix: roots of
    x^2 - (3n - n0) x + n (2n - n0)."""
    return 2 * n - n0, n


def quotient_polynomial(n: int, n0: int) -> sympy.Poly:
    x = sympy.Symbol("x")
    return sympy.Poly(x**2 - (3 * n - n0) * x + n * (2 * n - n0), x)


def _drop_zero(spec: Sequence, order: int, label: str) -> list:
    vals = sorted(spec, reverse=True)
    if len(vals) != order:
        raise OrderMismatchError(f"{label}: spectrum has {len(vals)} values, order is {order}")
    return vals[:-1]


def dl_spectrum_join(
    spec0: Sequence, spec1: Sequence, spec2: Sequence, n0: int, n1: int, n2: int
) -> AnalyticSpectrum | Spectrum:
    """Distance Laplacian spectrum of G0 ▽ (G1 ∪ G2) from the parts' D^L spectra.

    Valid when every part has diameter at most 2 (then D^L(G_i) = 2 n_i I - 2J - L(G_i)
    on the complement of the all-ones vector); for parts of larger diameter
    use :func:`dl_spectrum_join_laplacian`.  Exact inputs give an
    :class:`AnalyticSpectrum`, float inputs a numeric :class:`Spectrum`.
    """
    n = n0 + n1 + n2
    lam = _drop_zero(spec0, n0, "G0")
    mu = _drop_zero(spec1, n1, "G1")
    zeta = _drop_zero(spec2, n2, "G2")
    vals = (
        [x + n1 + n2 for x in lam]
        + [x + n0 + 2 * n2 for x in mu]
        + [x + n0 + 2 * n1 for x in zeta]
        + list(quotient_roots(n, n0))
        + [0]
    )
    return _pack(vals)


def dl_spectrum_join_laplacian(
    lap0: Sequence, lap1: Sequence, lap2: Sequence, n0: int, n1: int, n2: int
) -> AnalyticSpectrum | Spectrum:
    """Same join, from the parts' Laplacian spectra; any parts (even disconnected)."""
    n = n0 + n1 + n2
    a = _drop_zero(lap0, n0, "G0")
    b = _drop_zero(lap1, n1, "G1")
    c = _drop_zero(lap2, n2, "G2")
    vals = (
        [2 * n0 + n1 + n2 - x for x in a]
        + [2 * n1 + n0 + 2 * n2 - x for x in b]
        + [2 * n2 + n0 + 2 * n1 - x for x in c]
        + list(quotient_roots(n, n0))
        + [0]
    )
    return _pack(vals)


def _pack(vals: list) -> AnalyticSpectrum | Spectrum:
    if all(isinstance(v, (int, Fraction)) for v in vals):
        return AnalyticSpectrum.from_values(vals)
    return Spectrum(tuple(float(v) for v in vals), "analytic")


def dl_from_laplacian_diam2(laplacian_spectrum: Sequence, n: int) -> AnalyticSpectrum | Spectrum:
    """rho_i = 2n - mu_{n-i} (i = 1..n-1), rho_n = 0, for a diameter-2 graph."""
    mu = sorted(laplacian_spectrum, reverse=True)
    if len(mu) != n:
        raise OrderMismatchError(f"Laplacian spectrum has {len(mu)} values, n is {n}")
    vals = [2 * n - x for x in mu[:-1]] + [0]
    return _pack(vals)


def analytic_for(spec) -> AnalyticSpectrum | None:
    """Closed-form D^L spectrum of a family spec, or None when there is none.

    Joins G0 ▽ (G1 ∪ G2) qualify when each part has a closed form; all such
    parts have diameter at most 2, which the join formula needs.
    """
    k, p = spec.kind, spec.params
    if k == "complete":
        return dl_spectrum_complete(p[0])
    if k == "star":
        return dl_spectrum_complete_bipartite(1, p[0] - 1) if p[0] >= 2 else None
    if k == "complete_bipartite":
        return dl_spectrum_complete_bipartite(*p)
    if k == "complete_split":
        return dl_spectrum_complete_split(*p)
    if k == "connectivity_family":
        return dl_spectrum_connectivity_family(*p)
    if k == "join" and len(spec.left) == 1 and len(spec.right) == 2:
        parts = [analytic_for(s) for s in spec.left + spec.right]
        if any(s is None for s in parts):
            return None
        sizes = [s.n for s in spec.left + spec.right]
        joined = dl_spectrum_join(*(s.values() for s in parts), *sizes)
        return joined if isinstance(joined, AnalyticSpectrum) else None
    return None
