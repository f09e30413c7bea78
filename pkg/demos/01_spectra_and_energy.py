# Distance Laplacian spectra and energies of a few classic graphs.
# Run: python3 demos/01_spectra_and_energy.py
from __future__ import annotations

from specdl import closed_form as cf
from specdl.eigen import sym_eigenvalues
from specdl.energy import dle, dle_via_max, energy_report, trace_norm_deviation
from specdl.families import build, complete, complete_bipartite, complete_split, cycle, star
from specdl.metrics import apsp, distance_laplacian

# K_{2,3}: every vertex sits at distance 1 or 2 from every other one
g = build(complete_bipartite(2, 3))
data = apsp(g)
print("K_{2,3} distance matrix")
print(data.dist)
print("transmissions", data.tr.tolist(), " 2W =", 2 * data.wiener)

# the numeric spectrum (cyclic Jacobi) against the closed form
numeric = sym_eigenvalues(distance_laplacian(g, data))
exact = cf.dl_spectrum_complete_bipartite(2, 3)
print("numeric D^L spectrum ", [round(x, 10) + 0.0 for x in numeric])
print("closed-form spectrum ", [str(x) for x in exact.values()])

# DLE three ways: deviation sum, twice the best partial-sum excess, trace norm
w, n = data.wiener, g.n
print("DLE", dle(numeric, w, n), dle_via_max(numeric, w, n), trace_norm_deviation(g))
print("DLE exact", dle(exact.values(), w, n))

# a small table of energies; LE never exceeds DLE on these
print()
print(f"{'graph':<10}{'n':>3}{'W':>5}{'DLE':>10}{'LE':>10}{'DE':>10}{'sigma':>7}{'t':>4}")
for name, spec in [("K5", complete(5)), ("star5", star(5)), ("C6", cycle(6)),
                   ("K_{3,3}", complete_bipartite(3, 3)), ("CS_{2,5}", complete_split(2, 5))]:
    r = energy_report(build(spec))
    print(f"{name:<10}{r.n:>3}{r.wiener:>5}{float(r.dle):>10.4f}{float(r.le):>10.4f}"
          f"{float(r.de):>10.4f}{r.sigma:>7}{r.t_param:>4}")
