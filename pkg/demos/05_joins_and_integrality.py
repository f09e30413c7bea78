# Spectra of joins G0 v (G1 u G2) from the spectra of the parts.
# Run: python3 demos/05_joins_and_integrality.py
from __future__ import annotations

from specdl import closed_form as cf
from specdl import theorems as th
from specdl.eigen import sym_eigenvalues
from specdl.families import build, parse_family
from specdl.metrics import distance_laplacian, laplacian

# the parts' Laplacian spectra are enough, whatever their diameter
spec = parse_family("join:path:4|cycle:5+star:3")
parts = spec.left + spec.right
laps = [sym_eigenvalues(laplacian(build(p))) for p in parts]
orders = [build(p).n for p in parts]
pred = cf.dl_spectrum_join_laplacian(*laps, *orders)
num = sym_eigenvalues(distance_laplacian(build(spec)))
print(spec)
print(" from parts:", [round(float(x), 8) for x in pred])
print(" direct    :", [round(x, 8) for x in num])

# Laplacian-integral parts give a distance-Laplacian-integral join
for text in ["join:complete:2|complete:2+complete:3",
             "join:complete_bipartite:1,1|complete:2+complete:2",
             "join:complete_split:1,2|complete:1+complete:1"]:
    c = th.check_integral_family(parse_family(text))
    print(f"{text:<50} integral: {c.holds}  eigenvalues {c.extras['eigenvalues']}")

# the two eigenvalues coming from the 2x2 quotient of the join
print("quotient roots, n = 7, |G0| = 2:", cf.quotient_roots(7, 2))
