"""Named graph families and the ``name:p1,p2`` mini-grammar.

Grammar (used by the CLI)::

    complete:5                 K_5
    path:4 / cycle:5 / star:4  P_4, C_5, K_{1,3}
    complete_bipartite:2,3     K_{2,3}
    complete_split:2,5         CS_{2,3}  (clique size t, total order n)
    pineapple:6,2              PA_{6,2}  (K_4 with 2 pendant edges at one vertex)
    s_plus:5                   star K_{1,4} plus one edge between two leaves
    connectivity:6,1,2         K_1 ▽ (K_2 ∪ K_3)  (n, k, t)
    join:A|B+C                 A ▽ (B ∪ C); either side may be a '+'-union

Vertex layout of a join: the left side comes first, then the right-side
parts in the order written.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParameterError, ParseError
from .graph import Graph, join, union

KINDS = (
    "complete",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "complete_split",
    "pineapple",
    "s_plus",
    "connectivity_family",
    "join",
)

_ARITY = {
    "complete": 1,
    "path": 1,
    "cycle": 1,
    "star": 1,
    "complete_bipartite": 2,
    "complete_split": 2,
    "pineapple": 2,
    "s_plus": 1,
    "connectivity_family": 3,
}

_ALIASES = {"connectivity": "connectivity_family", "K": "complete", "CS": "complete_split"}

# families whose parts are Laplacian integral, hence give distance Laplacian
# integral graphs when plugged into G0 ▽ (G1 ∪ G2)
LAPLACIAN_INTEGRAL_KINDS = frozenset(
    {"complete", "complete_bipartite", "complete_split", "pineapple", "s_plus", "star"}
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    left: tuple["FamilySpec", ...] = field(default=())
    right: tuple["FamilySpec", ...] = field(default=())

    @property
    def n(self) -> int:
        k, p = self.kind, self.params
        if k == "join":
            return sum(s.n for s in self.left) + sum(s.n for s in self.right)
        if k == "complete_bipartite":
            return p[0] + p[1]
        if k == "complete_split":
            return p[1]
        return p[0]

    def __str__(self) -> str:
        if self.kind == "join":
            return "join:" + "+".join(map(str, self.left)) + "|" + "+".join(map(str, self.right))
        return f"{self.kind}:" + ",".join(map(str, self.params))


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def star(n: int) -> FamilySpec:
    return FamilySpec("star", (n,))


def complete_bipartite(a: int, b: int) -> FamilySpec:
    return FamilySpec("complete_bipartite", (a, b))


def complete_split(t: int, n: int) -> FamilySpec:
    return FamilySpec("complete_split", (t, n))


def pineapple(n: int, p: int) -> FamilySpec:
    return FamilySpec("pineapple", (n, p))


def s_plus(n: int) -> FamilySpec:
    return FamilySpec("s_plus", (n,))


def connectivity_family(n: int, k: int, t: int) -> FamilySpec:
    return FamilySpec("connectivity_family", (n, k, t))


def join_of(left: FamilySpec | list[FamilySpec], right: list[FamilySpec]) -> FamilySpec:
    left_t = (left,) if isinstance(left, FamilySpec) else tuple(left)
    return FamilySpec("join", left=left_t, right=tuple(right))


def validate(spec: FamilySpec) -> None:
    k, p = spec.kind, spec.params
    if k not in KINDS:
        raise ParameterError(f"unknown family {k!r}")
    if k == "join":
        if not spec.left or not spec.right:
            raise ParameterError("join needs a non-empty left and right side")
        for s in spec.left + spec.right:
            validate(s)
        return
    if len(p) != _ARITY[k]:
        raise ParameterError(f"{k} takes {_ARITY[k]} parameter(s), got {len(p)}")

    def need(cond: bool, text: str) -> None:
        if not cond:
            raise ParameterError(f"{k}{p}: requires {text}")

    if k in ("complete", "path"):
        need(p[0] >= 1, "n >= 1")
    elif k == "cycle":
        need(p[0] >= 3, "n >= 3")
    elif k == "star":
        need(p[0] >= 2, "n >= 2")
    elif k == "complete_bipartite":
        need(p[0] >= 1 and p[1] >= 1, "a >= 1 and b >= 1")
    elif k == "complete_split":
        need(1 <= p[0] <= p[1] - 1, "1 <= t <= n-1")
    elif k == "pineapple":
        need(p[0] >= 1 and 0 <= p[1] <= p[0] - 1, "0 <= p <= n-1")
    elif k == "s_plus":
        need(p[0] >= 3, "n >= 3")
    elif k == "connectivity_family":
        n, kk, t = p
        need(1 <= kk <= n - 2, "1 <= k <= n-2")
        need(1 <= t <= (n - kk) // 2, "1 <= t <= floor((n-k)/2)")


def _clique(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def _empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def build(spec: FamilySpec) -> Graph:
    validate(spec)
    k, p = spec.kind, spec.params
    if k == "complete":
        return _clique(p[0])
    if k == "path":
        return Graph.from_edges(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if k == "cycle":
        n = p[0]
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if k == "star":
        return join(_clique(1), _empty(p[0] - 1))
    if k == "complete_bipartite":
        return join(_empty(p[0]), _empty(p[1]))
    if k == "complete_split":
        t, n = p
        return join(_clique(t), _empty(n - t))
    if k == "pineapple":
        n, q = p
        clique = n - q
        edges = [(i, j) for j in range(clique) for i in range(j)]
        edges += [(0, clique + i) for i in range(q)]
        return Graph.from_edges(n, edges)
    if k == "s_plus":
        n = p[0]
        return Graph.from_edges(n, [(0, i) for i in range(1, n)] + [(1, 2)])
    if k == "connectivity_family":
        n, kk, t = p
        return join(_clique(kk), union(_clique(t), _clique(n - kk - t)))
    left = union(*(build(s) for s in spec.left))
    right = union(*(build(s) for s in spec.right))
    return join(left, right)


def parse_family(text: str) -> FamilySpec:
    """Parse the mini-grammar described in the module docstring."""
    text = text.strip()
    name, sep, rest = text.partition(":")
    name = _ALIASES.get(name, name)
    if not sep:
        raise ParseError(f"family spec {text!r} is missing ':'")
    if name == "join":
        left_txt, bar, right_txt = rest.partition("|")
        if not bar:
            raise ParseError(f"join spec {text!r} needs '|' between the two sides")
        left = tuple(parse_family(s) for s in left_txt.split("+"))
        right = tuple(parse_family(s) for s in right_txt.split("+"))
        spec = FamilySpec("join", left=left, right=right)
    else:
        if name not in _ARITY:
            raise ParseError(f"unknown family name {name!r}")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError as exc:
            raise ParseError(f"non-integer parameter in {text!r}") from exc
        spec = FamilySpec(name, params)
    validate(spec)
    return spec
