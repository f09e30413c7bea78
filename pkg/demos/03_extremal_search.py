# Which graphs minimise DLE inside a class?  Exhaustive scans for n <= 7.
# Run: python3 demos/03_extremal_search.py   (about ten seconds)
from __future__ import annotations

from specdl.search import min_dle_over_class, scan_all_classes

# order 5: every class agrees with its predicted extremal graph
for r in scan_all_classes(5):
    print(f"{str(r.class_spec):<16} min DLE {r.min_dle:9.5f}  minimisers {r.minimizer_graphs}"
          f"  predicted {r.predicted_graphs}  match {r.matches_paper_prediction}")

# order 6, independence number 4: the complete split graph CS_{2,4} has
# DLE 18, but the complete bipartite K_{2,4} (same independence number) has 52/3
r = min_dle_over_class("independence:4", 6)
print()
print("independence 4, n = 6:", r.minimizer_graphs, r.min_dle, "predicted", r.predicted_graphs)
print("largest DLE in the class (evidence only):", r.maximizer_graphs, r.max_dle)
