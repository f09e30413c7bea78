# Every bound on every labeled connected graph of one order.
# Run: python3 demos/06_exhaustive_sweep.py [n]   (n = 6 takes a few seconds)
from __future__ import annotations

import sys
import time

from specdl.sweep import run_sweep

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
t0 = time.perf_counter()
results = run_sweep(n)
print(f"n = {n}, {time.perf_counter() - t0:.1f} s")
print(f"{'bound':<22}{'checked':>10}{'violations':>12}{'equalities':>12}{'mismatches':>12}  examples")
for tid, r in results.items():
    print(f"{tid:<22}{r.checked:>10}{r.violations:>12}{r.equalities:>12}{r.mismatches:>12}  "
          f"{r.mismatch_examples}")
# mismatches count graphs where observed equality and the stated equality
# condition disagree; at n = 6 they all come from the Wiener lower bound,
# whose equality also occurs for some graphs with sigma = n - 1
