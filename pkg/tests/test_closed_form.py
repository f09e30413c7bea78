from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from conftest import random_connected
from specdl.closed_form import (
    AnalyticSpectrum,
    analytic_for,
    dl_from_laplacian_diam2,
    dl_spectrum_complete,
    dl_spectrum_complete_bipartite,
    dl_spectrum_complete_split,
    dl_spectrum_connectivity_family,
    dl_spectrum_join,
    dl_spectrum_join_laplacian,
    quotient_polynomial,
    quotient_roots,
)
from specdl.eigen import jacobi_eigenvalues, spectra_equal, sym_eigenvalues
from specdl.errors import OrderMismatchError, ParameterError
from specdl.families import (
    build,
    complete,
    complete_bipartite,
    complete_split,
    connectivity_family,
    cycle,
    parse_family,
    path,
    star,
)
from specdl.graph import Graph, join, union
from specdl.metrics import apsp, distance_laplacian, laplacian


def ints(spec: AnalyticSpectrum) -> list[int]:
    return [int(v) for v in spec.values()]


def numeric(g: Graph) -> np.ndarray:
    return jacobi_eigenvalues(distance_laplacian(g))


def test_complete():
    assert ints(dl_spectrum_complete(4)) == [4, 4, 4, 0]
    assert ints(dl_spectrum_complete(1)) == [0]
    assert ints(dl_spectrum_complete(2)) == [2, 0]


def test_complete_bipartite():
    s = dl_spectrum_complete_bipartite(2, 3)
    assert ints(s) == [8, 8, 7, 5, 0] and s.twice_wiener == 28
    assert ints(dl_spectrum_complete_bipartite(1, 2)) == [5, 3, 0]
    a = 4
    assert ints(dl_spectrum_complete_bipartite(a, a)) == [3 * a] * (2 * a - 2) + [2 * a, 0]


def test_complete_split():
    s = dl_spectrum_complete_split(2, 5)
    assert ints(s) == [8, 8, 5, 5, 0] and s.twice_wiener == 26
    assert ints(dl_spectrum_complete_split(5, 6)) == ints(dl_spectrum_complete(6))
    n = 6
    assert ints(dl_spectrum_complete_split(1, n)) == [2 * n - 1] * (n - 2) + [n, 0]


def test_connectivity_family():
    s = dl_spectrum_connectivity_family(4, 1, 1)
    assert ints(s) == [7, 5, 4, 0] and s.twice_wiener == 16
    assert ints(dl_spectrum_connectivity_family(6, 1, 2)) == [11, 9, 8, 8, 6, 0]
    # t = 1 and n - t - k = 1: only 2n - k, n^[k] and 0 remain
    assert ints(dl_spectrum_connectivity_family(5, 3, 1)) == [7, 5, 5, 5, 0]
    with pytest.raises(ParameterError):
        dl_spectrum_connectivity_family(5, 4, 1)
    with pytest.raises(ParameterError):
        dl_spectrum_connectivity_family(6, 1, 3)


@pytest.mark.parametrize(
    "spec, analytic",
    [
        (complete_bipartite(3, 5), dl_spectrum_complete_bipartite(3, 5)),
        (complete_split(3, 8), dl_spectrum_complete_split(3, 8)),
        (connectivity_family(9, 2, 3), dl_spectrum_connectivity_family(9, 2, 3)),
        (complete(9), dl_spectrum_complete(9)),
    ],
)
def test_analytic_matches_numeric_and_wiener(spec, analytic):
    g = build(spec)
    assert spectra_equal(analytic.spectrum(), numeric(g), 1e-8)
    if analytic.twice_wiener is not None:
        assert analytic.twice_wiener == 2 * apsp(g).wiener


@pytest.mark.parametrize("n, n0", [(3, 1), (4, 1), (7, 2), (12, 5), (30, 11)])
def test_quotient_roots_solve_the_quadratic(n, n0):
    x = sympy.Symbol("x")
    poly = quotient_polynomial(n, n0)
    for r in quotient_roots(n, n0):
        assert poly.eval(r) == 0
    assert sympy.Poly((x - (2 * n - n0)) * (x - n), x) == poly


def test_join_small_examples():
    k1 = dl_spectrum_complete(1).values()
    k2 = dl_spectrum_complete(2).values()
    assert ints(dl_spectrum_join(k1, k1, k1, 1, 1, 1)) == [5, 3, 0]
    assert ints(dl_spectrum_join(k1, k1, k2, 1, 1, 2)) == [7, 5, 4, 0]
    with pytest.raises(OrderMismatchError):
        dl_spectrum_join(k1, k1, k2, 1, 1, 3)


@pytest.mark.parametrize("n, k, t", [(5, 1, 2), (7, 2, 1), (8, 3, 2), (10, 4, 3)])
def test_join_of_cliques_is_connectivity_family(n, k, t):
    parts = [dl_spectrum_complete(s).values() for s in (k, t, n - k - t)]
    joined = dl_spectrum_join(*parts, k, t, n - k - t)
    assert joined.pairs == dl_spectrum_connectivity_family(n, k, t).pairs


def test_dl_join_formula_needs_diameter_two_parts():
    # with a P4 part the D^L form is off; the Laplacian form is right
    g0, g1, g2 = build(complete(1)), build(path(4)), build(complete(2))
    g = join(g0, union(g1, g2))
    truth = numeric(g)
    parts = [sym_eigenvalues(distance_laplacian(h)).values for h in (g0, g1, g2)]
    via_dl = dl_spectrum_join(*parts, 1, 4, 2)
    assert not spectra_equal(via_dl, truth, 1e-6)
    laps = [sym_eigenvalues(laplacian(h)).values for h in (g0, g1, g2)]
    assert spectra_equal(dl_spectrum_join_laplacian(*laps, 1, 4, 2), truth, 1e-8)


def test_laplacian_join_accepts_disconnected_parts():
    g1 = union(build(complete(2)), Graph(1, (0,)))
    g0, g2 = build(cycle(5)), build(star(3))
    g = join(g0, union(g1, g2))
    laps = [sym_eigenvalues(laplacian(h)).values for h in (g0, g1, g2)]
    assert spectra_equal(dl_spectrum_join_laplacian(*laps, 5, 3, 3), numeric(g), 1e-8)


def test_random_joins_property():
    rng = random.Random(3)
    for _ in range(40):
        sizes = [rng.randint(1, 6) for _ in range(3)]
        parts = [random_connected(rng, s) for s in sizes]
        g = join(parts[0], union(parts[1], parts[2]))
        laps = [sym_eigenvalues(laplacian(h)).values for h in parts]
        assert spectra_equal(dl_spectrum_join_laplacian(*laps, *sizes), numeric(g), 1e-8)
        if all(apsp(h).diameter <= 2 for h in parts):
            dls = [sym_eigenvalues(distance_laplacian(h)).values for h in parts]
            assert spectra_equal(dl_spectrum_join(*dls, *sizes), numeric(g), 1e-8)


def test_diameter_two_transform_examples():
    assert ints(dl_from_laplacian_diam2([4, 1, 1, 0], 4)) == [7, 7, 4, 0]
    assert ints(dl_from_laplacian_diam2([4, 2, 2, 0], 4)) == [6, 6, 4, 0]
    c5 = build(cycle(5))
    mu = sym_eigenvalues(laplacian(c5)).values
    assert spectra_equal(dl_from_laplacian_diam2(mu, 5), numeric(c5), 1e-10)
    with pytest.raises(OrderMismatchError):
        dl_from_laplacian_diam2([1, 0], 3)


def test_analytic_for_specs():
    assert ints(analytic_for(parse_family("star:4"))) == [7, 7, 4, 0]
    assert ints(analytic_for(parse_family("join:complete:1|complete:1+complete:2"))) == [7, 5, 4, 0]
    assert analytic_for(parse_family("path:4")) is None
    assert analytic_for(parse_family("join:path:4|complete:1+complete:1")) is None


def test_analytic_spectrum_helpers():
    s = AnalyticSpectrum.from_values([Fraction(1, 2), 3, 3])
    assert s.n == 3 and s.pairs[0] == (Fraction(3), 2)
    assert not s.is_integral()
    assert dl_spectrum_complete(3).is_integral()
