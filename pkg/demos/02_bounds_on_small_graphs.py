# Checking the DLE bounds on the graphs where they are tight.
# Run: python3 demos/02_bounds_on_small_graphs.py
from __future__ import annotations

from specdl import theorems as th
from specdl.families import build, complete_bipartite, complete_split, connectivity_family, star
from specdl.io import parse_graph6


def show(c: th.BoundCheck) -> None:
    tag = "equality" if c.equality else ("holds" if c.holds else "VIOLATED")
    pred = {True: "predicted", False: "not predicted", None: "-"}[c.equality_predicted]
    print(f"  {c.theorem_id:<20}{c.case_label:<24}lhs={float(c.lhs):<12.5g}rhs={float(c.rhs):<12.5g}"
          f"{tag:<10}({pred})")


# each of these sits on the boundary of one bound
cases = {
    "K_{2,3}": (build(complete_bipartite(2, 3)), th.check_bipartite_bound),
    "CS_{2,5}": (build(complete_split(2, 5)), th.check_independence_bound),
    "K_1 v (K_2 u K_3)": (build(connectivity_family(6, 1, 2)), th.check_connectivity_bound),
    "star K_{1,3}": (build(star(4)), th.check_wiener_lower_bound),
}
for name, (g, check) in cases.items():
    print(name)
    show(check(g))

# the paw (triangle with a pendant vertex): the spectral-sum value of the
# connectivity bound is 8, which DLE meets; the shorter printed closed form
# evaluates to exactly half of it
paw = parse_graph6("CN")
c = th.check_connectivity_bound(paw)
print("paw")
show(c)
print(f"  printed form {c.extras['printed_rhs']}, spectral-sum form {c.rhs}, "
      f"discrepancy flag {c.extras['discrepancy']}")

# every bound at once on the 5-cycle, keeping the tightest check of each kind
print("C5, tightest check per bound")
tightest: dict[str, th.BoundCheck] = {}
for c in th.check_all(parse_graph6("Dhc")):
    best = tightest.get(c.theorem_id)
    if best is None or float(c.lhs) - float(c.rhs) < float(best.lhs) - float(best.rhs):
        tightest[c.theorem_id] = c
for c in tightest.values():
    show(c)
