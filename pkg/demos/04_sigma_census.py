# How many distance Laplacian eigenvalues reach the average transmission?
# Run: python3 demos/04_sigma_census.py
from __future__ import annotations

from specdl.search import sigma_census

for n in range(4, 7):
    c = sigma_census(n)
    print(f"n = {n}: sigma histogram {dict(sorted(c.histogram.items()))}")
    print(f"  sigma = n-1: {c.sigma_n_minus_1}")
    print(f"  sigma = n-2: {c.sigma_n_minus_2}")
    # transmission-regular graphs: sigma = n - (positive inertia of D)
    for row in c.transmission_regular:
        print(f"  transmission regular {row['graph6']:<6} sigma {row['sigma']} gamma {row['gamma']}"
              f" sigma = n - gamma: {row['holds']}")
