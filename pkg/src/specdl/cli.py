"""Command-line front end: spectra, energies, bound checks and extremal scans.

Every command prints one JSON report (or CSV with ``--format csv``) on
stdout.  Diagnostics go to stderr.  Exit codes:

  0  success (all checks hold / scan matches the predicted extremal graph)
  1  a bound was violated (verify) or the scan disagrees with the prediction (search)
  2  bad arguments or unparsable input
  3  the input graph is disconnected
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import theorems as th
from .closed_form import analytic_for
from .eigen import sym_eigenvalues
from .energy import energy_report
from .errors import DiameterError, DisconnectedGraphError, NotBipartiteError, SpecDLError
from .families import build, parse_family
from .graph import Graph, delete_edge, enumerate_connected, is_connected
from .io import emit_graph6, parse_edge_list, parse_graph6
from .metrics import apsp, distance_laplacian, distance_matrix, laplacian
from .search import ClassSpec, min_dle_over_class, sigma_census
from .sweep import SWEEP_IDS, run_sweep

SCHEMA_VERSION = "1.0"
SIG_DIGITS = 12
ZERO_SNAP = 1e-12  # relative; below the 12 printed digits anyway

FAMILY_HELP = """family grammar:
  name:p1,p2,...          e.g. complete:5, star:4, complete_bipartite:2,3,
                          complete_split:2,5 (t,n), connectivity_family:6,1,2 (n,k,t),
                          pineapple:6,2 (n,p), s_plus:5, path:4, cycle:5
  join:A+B|C+D            (A ∪ B) ▽ (C ∪ D), e.g. join:complete:1|complete:1+complete:2
  aliases: K = complete, CS = complete_split, connectivity = connectivity_family
"""


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# serialisation


def _num(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x.numerator)
        x = float(x)
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(f"{x:.{SIG_DIGITS}g}")


def clean(obj):
    """Recursively convert to JSON-ready values with fixed float precision."""
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if isinstance(obj, (str, bool)) or obj is None:
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    return _num(obj)


def dump_json(report: dict) -> str:
    return json.dumps(clean(report), indent=2, ensure_ascii=False)


def dump_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    rows = report.get("bound_checks") or []
    if rows:
        cols = ["graph", "theorem_id", "case", "lhs", "rhs", "holds", "equality",
                "equality_predicted", "applicable"]
        w.writerow(cols)
        for r in clean(rows):
            w.writerow(["" if r.get(c) is None else r.get(c) for c in cols])
        return buf.getvalue()
    w.writerow(["key", "value"])
    for key, val in _flatten(clean(report)):
        w.writerow([key, val])
    return buf.getvalue()


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}.")
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    elif isinstance(obj, list):
        yield prefix[:-1], " ".join(str(v) for v in obj)
    else:
        yield prefix[:-1], "" if obj is None else obj


# ---------------------------------------------------------------------------
# input


INPUT_FLAGS = ("family", "edgelist", "graph6")


def add_input_args(p: argparse.ArgumentParser, prefix: str = "") -> None:
    # the same flags are accepted before or after the subcommand; the
    # top-level copies use their own dest so subparser defaults cannot clobber them
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--family", dest=prefix + "family", metavar="SPEC",
                     help="family spec, see 'specdl --help'")
    grp.add_argument("--edgelist", dest=prefix + "edgelist", metavar="PATH", type=Path,
                     help="edge-list file: 'n m' then m lines 'u v'")
    grp.add_argument("--graph6", dest=prefix + "graph6", metavar="STRING", help="graph6 string")


def merge_inputs(args) -> None:
    """Fold top-level input flags into the subcommand's."""
    given = [f for f in INPUT_FLAGS if getattr(args, f, None) is not None]
    early = [f for f in INPUT_FLAGS if getattr(args, "top_" + f, None) is not None]
    if len(given) + len(early) > 1:
        raise UsageError("give exactly one of --family, --edgelist, --graph6")
    for f in INPUT_FLAGS:
        if getattr(args, f, None) is None:
            setattr(args, f, getattr(args, "top_" + f, None))


def has_input(args) -> bool:
    return any(getattr(args, f, None) is not None for f in INPUT_FLAGS)


def load_input(args) -> tuple[Graph, dict, object]:
    """(graph, input description, family spec or None)."""
    if not has_input(args):
        raise UsageError("an input graph is required: --family, --edgelist or --graph6")
    if args.family:
        spec = parse_family(args.family)
        return build(spec), {"kind": "family", "value": str(spec)}, spec
    if args.edgelist:
        try:
            text = args.edgelist.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.edgelist}: {exc}") from exc
        digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
        return parse_edge_list(text), {"kind": "edgelist", "value": str(args.edgelist),
                                       "sha256": digest}, None
    g = parse_graph6(args.graph6)
    return g, {"kind": "graph6", "value": args.graph6}, None


def _need_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("input graph is disconnected")


def _report(command: str, inp: dict | None, **fields) -> dict:
    rep = {"schema_version": SCHEMA_VERSION, "command": command, "input": inp}
    rep.update(energy_report=None, spectra=None, bound_checks=[])
    rep.update(fields)
    rep["timing"] = None
    return rep


def _snap(vals) -> list[float]:
    """Eigenvalues with solver noise around zero replaced by 0.0."""
    vals = [float(v) for v in vals]
    cut = ZERO_SNAP * max(1.0, max(abs(v) for v in vals))
    return [0.0 if abs(v) <= cut else v for v in vals]


def _spectra(g: Graph, spec) -> dict:
    data = apsp(g)
    out = {
        "distance_laplacian": {
            "numeric": _snap(sym_eigenvalues(distance_laplacian(g, data))),
            "analytic": None,
        },
        "laplacian": {"numeric": _snap(sym_eigenvalues(laplacian(g)))},
        "distance": {"numeric": _snap(sym_eigenvalues(distance_matrix(g, data)))},
    }
    analytic = analytic_for(spec) if spec is not None else None
    if analytic is not None:
        out["distance_laplacian"]["analytic"] = [str(v) for v in analytic.values()]
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(args) -> tuple[dict, int]:
    g, inp, spec = load_input(args)
    _need_connected(g)
    rep = _report("spectrum", inp, n=g.n, m=g.m, graph6=emit_graph6(g), spectra=_spectra(g, spec))
    return rep, 0


def cmd_energy(args) -> tuple[dict, int]:
    g, inp, spec = load_input(args)
    _need_connected(g)
    analytic = analytic_for(spec) if spec is not None else None
    er = energy_report(g, dl_spectrum=analytic.spectrum() if analytic else None)
    rep = _report("energy", inp, n=g.n, m=g.m, graph6=emit_graph6(g),
                  energy_report=er.as_dict(), spectra=_spectra(g, spec))
    return rep, 0


def checks_for(theorem_id: str, g: Graph, spec=None) -> list[th.BoundCheck]:
    """Run one theorem on one graph; raises DiameterError/NotBipartiteError when out of scope."""
    p = th.GraphProfile(g)
    if theorem_id == "edge-monotonicity":
        out = []
        for e in g.sorted_edges():
            if is_connected(delete_edge(g, e)):
                out.extend(th.check_edge_monotonicity(g, e))
        return out
    if theorem_id == "brouwer":
        return th.check_brouwer_all(p)
    if theorem_id in ("sandwich-upper", "sandwich-lower"):
        up, lo = th.check_sandwich(p)
        return [up if theorem_id == "sandwich-upper" else lo]
    if theorem_id in ("floor-bipartite", "floor-connectivity"):
        return [c for c in th.check_eigenvalue_floor_corollaries(p) if c.theorem_id == theorem_id]
    if theorem_id == "integral-family":
        if spec is None:
            raise UsageError("integral-family needs --family join:G0|G1+G2")
        return [th.check_integral_family(spec)]
    single = {
        "dle-via-sk": th.check_thm_dle_via_sk,
        "diameter2-transform": th.check_diameter2_transform,
        "sigma-t": th.check_sigma_t_relation,
        "second-smallest": th.check_second_smallest_bound,
        "wiener-lower": th.check_wiener_lower_bound,
        "bipartite-bound": th.check_bipartite_bound,
        "independence-bound": th.check_independence_bound,
        "connectivity-bound": th.check_connectivity_bound,
    }
    return [single[theorem_id](p)]


def binding_check(checks: list[th.BoundCheck]) -> th.BoundCheck:
    """Collapse a graph's checks to one: the tightest, with holds over all and equality over any."""
    slack = [float(c.lhs) - float(c.rhs) if c.applicable else math.inf for c in checks]
    best = checks[int(np.argmin(slack))]
    return th.BoundCheck(
        best.theorem_id,
        best.case_label,
        best.lhs,
        best.rhs,
        all(c.holds for c in checks if c.applicable),
        any(c.equality for c in checks if c.applicable),
        equality_predicted=best.equality_predicted,
        applicable=best.applicable,
        extras=dict(best.extras, checks_combined=len(checks)),
    )


def _summary(checks: list[dict]) -> dict:
    applicable = [c for c in checks if c["applicable"]]
    return {
        "checks": len(checks),
        "violations": sum(not c["holds"] for c in applicable),
        "equalities": sum(bool(c["equality"]) for c in applicable),
        "characterization_mismatches": sum(
            c["equality_predicted"] is not None and c["equality"] != c["equality_predicted"]
            for c in applicable
        ),
    }


def cmd_verify(args) -> tuple[dict, int]:
    tid = args.theorem_id
    given = has_input(args)
    if given and args.n is not None:
        raise UsageError("give either an input graph or --n, not both")
    if not given and args.n is None:
        raise UsageError("verify needs an input graph or --n")
    if given:
        g, inp, spec = load_input(args)
        _need_connected(g)
        try:
            checks = checks_for(tid, g, spec)
        except (DiameterError, NotBipartiteError) as exc:
            raise UsageError(f"{tid} does not apply to this graph: {exc}") from exc
        rows = [dict(c.as_dict(), graph=emit_graph6(g)) for c in checks]
        summary = _summary(rows)
        rep = _report("verify", inp, theorem_id=tid, bound_checks=rows, summary=summary)
        return rep, 1 if summary["violations"] else 0

    n = args.n
    if not 3 <= n <= 7:
        raise UsageError("--n must lie in 3..7 for exhaustive verification")
    inp = {"kind": "range", "n": n, "k": args.k, "labeled": args.labeled}
    if args.labeled:
        if tid not in SWEEP_IDS:
            raise UsageError(f"no labeled sweep for {tid}; drop --labeled")
        res = run_sweep(n, [tid])[tid]
        rep = _report("verify", inp, theorem_id=tid, summary=res.as_dict())
        return rep, 1 if res.violations else 0
    if tid == "integral-family":
        raise UsageError("integral-family is checked per family, use --family")
    rows = []
    for g in enumerate_connected(n, unique=True):
        p = th.GraphProfile(g)
        if args.k is not None and p.kappa != args.k:
            continue
        try:
            checks = checks_for(tid, g)
        except (DiameterError, NotBipartiteError, SpecDLError):
            continue
        if checks:
            rows.append(dict(binding_check(checks).as_dict(), graph=emit_graph6(g)))
    summary = _summary(rows)
    rep = _report("verify", inp, theorem_id=tid, bound_checks=rows, summary=summary)
    return rep, 1 if summary["violations"] else 0


def cmd_search(args) -> tuple[dict, int]:
    param = None
    if args.cls == "independence":
        if args.alpha is None:
            raise UsageError("independence search needs --alpha")
        param = args.alpha
    elif args.cls == "connectivity":
        if args.k is None:
            raise UsageError("connectivity search needs --k")
        param = args.k
    if args.n == 8 and not args.allow_large:
        raise UsageError("n = 8 needs --allow-large (about a minute of enumeration)")
    res = min_dle_over_class(ClassSpec(args.cls, param), args.n, allow_large=args.allow_large)
    rep = _report("search", {"kind": "class", "class": str(res.class_spec), "n": args.n},
                  result=res.as_dict())
    return rep, 0 if res.matches_paper_prediction in (True, None) else 1


def cmd_census(args) -> tuple[dict, int]:
    if not 3 <= args.n <= 7:
        raise UsageError("--n must lie in 3..7")
    res = sigma_census(args.n)
    rep = _report("census", {"kind": "order", "n": args.n}, result=res.as_dict())
    return rep, 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="specdl",
        description="Distance Laplacian spectra, energies and bound verification for small graphs.",
        epilog=FAMILY_HELP + "\nenvironment: SPECDL_THREADS sets the worker count for scans.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--timing", action="store_true",
                    help="include wall-clock timing (makes output run-dependent)")
    add_input_args(ap, prefix="top_")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="D^L, L and D spectra of one graph")
    add_input_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("energy", help="DLE, LE, DE, sigma and t of one graph")
    add_input_args(p)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("verify", help="check one bound on a graph or on every graph of order n")
    p.add_argument("theorem_id", choices=th.THEOREM_IDS)
    add_input_args(p)
    p.add_argument("--n", type=int, help="check every connected graph of this order (3..7)")
    p.add_argument("--k", type=int, help="with --n: only graphs of vertex connectivity k")
    p.add_argument("--labeled", action="store_true",
                   help="with --n: vectorised sweep over labeled graphs, summary only")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="minimum-DLE graphs of a class")
    p.add_argument("cls", metavar="class", choices=("bipartite", "independence", "connectivity", "all"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--allow-large", action="store_true", help="permit n = 8")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("census", help="distribution of sigma over graphs of order n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_census)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        merge_inputs(args)
        report, code = args.func(args)
    except DisconnectedGraphError as exc:
        print(f"specdl: {exc}", file=sys.stderr)
        return 3
    except (UsageError, SpecDLError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"specdl: {msg}", file=sys.stderr)
        return 2
    if args.timing:
        report["timing"] = {"seconds": time.perf_counter() - t0}
    out = dump_csv(report) if args.format == "csv" else dump_json(report) + "\n"
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
