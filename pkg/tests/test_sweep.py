from __future__ import annotations

import pytest

from specdl import theorems as th
from specdl.batch import connected_masks
from specdl.errors import ParameterError
from specdl.graph import Graph, delete_edge, is_connected
from specdl.sweep import SWEEP_IDS, run_sweep


def _scalar_tally(n: int) -> dict[str, dict[str, int]]:
    """The sweep counters recomputed with the per-graph checks."""
    keys = ("checked", "violations", "equalities", "predicted", "mismatches", "skipped")
    out = {tid: dict.fromkeys(keys, 0) for tid in SWEEP_IDS}

    def add(tid, c, predicted=None):
        r = out[tid]
        r["checked"] += 1
        r["violations"] += not c.holds
        r["equalities"] += bool(c.equality)
        if predicted is not None:
            r["predicted"] += bool(predicted)
            r["mismatches"] += bool(c.equality) != bool(predicted)

    for mk in connected_masks(n):
        g = Graph.from_mask(n, int(mk))
        p = th.GraphProfile(g)
        for e in sorted(g.edges):
            checks = th.check_edge_monotonicity(g, e) if _still_connected(g, e) else None
            if checks is not None:
                r = out["edge-monotonicity"]
                r["checked"] += 1
                r["violations"] += not all(c.holds for c in checks)
                r["equalities"] += all(c.equality for c in checks)
        br = th.check_brouwer_all(p)
        r = out["brouwer"]
        r["checked"] += 1
        r["violations"] += not all(c.holds for c in br)
        r["equalities"] += any(c.equality for c in br)
        if p.diameter == 2:
            add("dle-via-sk", th.check_thm_dle_via_sk(p))
            add("diameter2-transform", th.check_diameter2_transform(p))
            up, lo = th.check_sandwich(p)
            add("sandwich-upper", up)
            add("sandwich-lower", lo)
            add("sigma-t", th.check_sigma_t_relation(p))
        c = th.check_second_smallest_bound(p)
        add("second-smallest", c, c.equality_predicted)
        c = th.check_wiener_lower_bound(p)
        add("wiener-lower", c, c.equality_predicted)
        if p.parts is not None:
            c = th.check_bipartite_bound(p)
            if c.applicable:
                add("bipartite-bound", c, c.equality_predicted)
            else:
                out["bipartite-bound"]["skipped"] += 1
        c = th.check_independence_bound(p)
        add("independence-bound", c, c.equality_predicted)
        if n >= 4:
            c = th.check_connectivity_bound(p)
            add("connectivity-bound", c, c.equality_predicted)
    return out


def _still_connected(g: Graph, e) -> bool:
    return is_connected(delete_edge(g, e))


@pytest.mark.parametrize("n", [4, 5])
def test_sweep_agrees_with_scalar_checks(n):
    scalar = _scalar_tally(n)
    swept = run_sweep(n)
    for tid, res in swept.items():
        got = res.as_dict()
        for key, value in scalar[tid].items():
            assert got[key] == value, (tid, key, got[key], value)


def test_no_violations_up_to_six():
    for n in range(3, 7):
        for tid, res in run_sweep(n).items():
            assert res.violations == 0, (n, tid, res.violation_examples)


def test_known_characterisation_gaps():
    r3 = run_sweep(3)
    assert r3["bipartite-bound"].mismatches == 3  # three labelings of P3
    assert r3["bipartite-bound"].mismatch_examples == ["BW"]
    r4 = run_sweep(4)
    assert r4["wiener-lower"].mismatches == 12
    assert r4["wiener-lower"].mismatch_examples == ["CN"]
    assert run_sweep(5)["wiener-lower"].mismatches == 0
    r6 = run_sweep(6, ["wiener-lower", "independence-bound", "connectivity-bound"])
    assert r6["wiener-lower"].mismatches == 440
    assert r6["independence-bound"].mismatches == 0
    assert r6["connectivity-bound"].mismatches == 0


def test_sweep_rejects_bad_input():
    with pytest.raises(ParameterError):
        run_sweep(8)
    with pytest.raises(ParameterError):
        run_sweep(4, ["no-such-bound"])
