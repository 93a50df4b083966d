"""Finders and verifiers for defective DP-colorings and order-constrained
(B_A) DP-colorings of covers.

A transversal picks one cover node per vertex.  The defective variant
bounds the degree of each chosen node inside the induced cover subgraph
by a per-color budget.  The B_A variant asks for a left-to-right order
in which color-1 nodes have no earlier neighbor and every other node
has at most one earlier neighbor, that neighbor itself being adjacent
to at most one node placed before the current one.

Each node's B_A condition reads only its own prefix, so a placement
prefix that was valid never becomes invalid later; the searches below
exploit this by building the order as the assignment order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .cover import Cover, Node

Transversal = Mapping[int, int]  # vertex -> chosen color


class SearchStatus(Enum):
    FOUND = "found"
    NONE = "none"  # definitive: exhaustive within the search space
    EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class DefectVector:
    budgets: tuple[int, ...]

    def __post_init__(self):
        if any(d < 0 for d in self.budgets):
            raise ValueError("defect budgets must be non-negative")

    @classmethod
    def of(cls, *budgets: int) -> "DefectVector":
        return cls(tuple(budgets))

    def budget(self, color: int) -> int:
        if not (1 <= color <= len(self.budgets)):
            raise ValueError(f"color {color} has no defect budget (k={len(self.budgets)})")
        return self.budgets[color - 1]

    def __len__(self) -> int:
        return len(self.budgets)


def _check_transversal(cover: Cover, t: Transversal) -> None:
    verts = set(cover.graph.vertices())
    if set(t) != verts:
        raise ValueError("not a transversal: must choose exactly one color per vertex")
    for v, c in t.items():
        if c not in cover.lists[v]:
            raise ValueError(f"not a transversal: color {c} not in list of vertex {v}")


def induced_degrees(cover: Cover, t: Transversal) -> dict[int, int]:
    """Degree of each chosen node in the cover subgraph induced by t."""
    deg = {v: 0 for v in t}
    for (u, v), pairs in cover.matchings.items():
        if (t[u], t[v]) in pairs:
            deg[u] += 1
            deg[v] += 1
    return deg


@dataclass(frozen=True)
class DefectReport:
    passed: bool
    degrees: tuple[tuple[int, int], ...]  # (vertex, induced degree)
    violations: tuple[tuple[int, int, int, int], ...]  # (vertex, color, degree, budget)


def verify_defective(cover: Cover, t: Transversal, d: DefectVector) -> DefectReport:
    """Check deg(v, c) <= d_c for every chosen node (v, c)."""
    _check_transversal(cover, t)
    deg = induced_degrees(cover, t)
    violations = []
    for v in sorted(t):
        c = t[v]
        if deg[v] > d.budget(c):
            violations.append((v, c, deg[v], d.budget(c)))
    return DefectReport(not violations, tuple(sorted(deg.items())), tuple(violations))


@dataclass(frozen=True)
class DefectOutcome:
    status: SearchStatus
    transversal: dict[int, int] | None
    nodes_expanded: int


def find_defective_dp(cover: Cover, d: DefectVector, node_limit: int = 2_000_000) -> DefectOutcome:
    """Backtracking search for a defective DP-coloring.

    Vertices are assigned highest-degree-first (ties by id); a branch is
    pruned as soon as any committed node exceeds its budget, which is
    sound because induced degrees only grow along a branch.
    """
    graph = cover.graph
    if len(d) != cover.k:
        raise ValueError(f"defect vector length {len(d)} != k={cover.k}")
    order = sorted(graph.vertices(), key=lambda v: (-graph.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    chosen: dict[int, int] = {}
    deg: dict[int, int] = {}
    expanded = 0

    def place(v: int, c: int) -> list[int] | None:
        """Commit (v, c); return the bumped vertices or None on violation."""
        bumped = []
        dv = 0
        for u in graph.neighbors(v):
            if u in chosen and (c, chosen[u]) in cover.matching(v, u):
                dv += 1
                deg[u] += 1
                bumped.append(u)
                if deg[u] > d.budget(chosen[u]):
                    for w in bumped:
                        deg[w] -= 1
                    return None
        if dv > d.budget(c):
            for w in bumped:
                deg[w] -= 1
            return None
        chosen[v] = c
        deg[v] = dv
        return bumped

    def search(i: int) -> SearchStatus:
        nonlocal expanded
        if i == len(order):
            return SearchStatus.FOUND
        v = order[i]
        for c in cover.lists[v]:
            expanded += 1
            if expanded > node_limit:
                return SearchStatus.EXHAUSTED
            bumped = place(v, c)
            if bumped is None:
                continue
            sub = search(i + 1)
            if sub is not SearchStatus.NONE:
                return sub
            del chosen[v]
            del deg[v]
            for w in bumped:
                deg[w] -= 1
        return SearchStatus.NONE

    status = search(0)
    if status is SearchStatus.FOUND:
        result = dict(chosen)
        report = verify_defective(cover, result, d)
        assert report.passed, "solver soundness: found transversal failed verification"
        return DefectOutcome(status, result, expanded)
    return DefectOutcome(status, None, expanded)


# -- B_A colorings -----------------------------------------------------


@dataclass(frozen=True)
class OrderedTransversal:
    assignment: dict[int, int]
    order: tuple[Node, ...]  # position 0 = leftmost

    def __post_init__(self):
        nodes = {(v, c) for v, c in self.assignment.items()}
        if set(self.order) != nodes or len(self.order) != len(nodes):
            raise ValueError("order must be a permutation of the transversal's nodes")


@dataclass(frozen=True)
class BAViolation:
    condition: int  # 1 or 2
    node: Node
    position: int
    detail: str


@dataclass(frozen=True)
class BAReport:
    passed: bool
    left_neighbor_counts: tuple[tuple[Node, int], ...]
    left_neighbor_loads: tuple[tuple[Node, int], ...]  # unique left neighbor's earlier-degree
    violation: BAViolation | None


def verify_ba(cover: Cover, ot: OrderedTransversal) -> BAReport:
    """Check both order conditions position by position.

    For the node at position p with color c: c = 1 requires no neighbor
    among positions < p; otherwise at most one such neighbor w, and w
    must have at most one neighbor among positions < p.
    """
    _check_transversal(cover, ot.assignment)
    placed: set[Node] = set()
    counts: list[tuple[Node, int]] = []
    loads: list[tuple[Node, int]] = []
    violation: BAViolation | None = None
    for p, node in enumerate(ot.order):
        v, c = node
        lefts = [w for w in cover.neighbors_in_cover(node) if w in placed]
        counts.append((node, len(lefts)))
        if c == 1 and lefts and violation is None:
            violation = BAViolation(1, node, p,
                                    f"color-1 node {node} has left neighbor {lefts[0]}")
        elif c != 1 and len(lefts) > 1 and violation is None:
            violation = BAViolation(2, node, p,
                                    f"node {node} has {len(lefts)} left neighbors")
        elif c != 1 and len(lefts) == 1:
            w = lefts[0]
            load = sum(1 for x in cover.neighbors_in_cover(w) if x in placed)
            loads.append((node, load))
            if load > 1 and violation is None:
                violation = BAViolation(
                    2, node, p,
                    f"left neighbor {w} of {node} is adjacent to {load} nodes left of it")
        placed.add(node)
    return BAReport(violation is None, tuple(counts), tuple(loads), violation)


@dataclass(frozen=True)
class BAOutcome:
    status: SearchStatus
    ordered: OrderedTransversal | None
    nodes_expanded: int


def find_ba(cover: Cover, node_limit: int = 2_000_000) -> BAOutcome:
    """Depth-first search for a B_A coloring; placement order is the
    left-to-right order.

    At each step every uncolored vertex is a candidate, tried in order
    of fewest feasible colors (ties by id); restricting to a single
    candidate vertex would be incomplete because a placement that fails
    now never succeeds later, but a different vertex may have to go
    first.  Dead prefixes are memoized by their placed node set when the
    graph has at most 20 vertices: feasibility of any extension depends
    only on that set, not on the order that reached it.
    """
    graph = cover.graph
    n = graph.vertex_count
    memo_on = n <= 20
    nbrs: dict[Node, tuple[Node, ...]] = {}
    for node in cover.nodes():
        nbrs[node] = tuple(cover.neighbors_in_cover(node))

    chosen: dict[int, int] = {}
    placed_deg: dict[Node, int] = {}  # neighbors of node already placed
    order: list[Node] = []
    failed: set[frozenset[Node]] = set()
    expanded = 0

    def feasible_colors(v: int) -> list[int]:
        out = []
        for c in cover.lists[v]:
            lefts = [w for w in nbrs[(v, c)] if w[0] in chosen and chosen[w[0]] == w[1]]
            if c == 1:
                if not lefts:
                    out.append(c)
            elif len(lefts) == 0 or (len(lefts) == 1 and placed_deg[lefts[0]] <= 1):
                out.append(c)
        return out

    def place(v: int, c: int) -> None:
        chosen[v] = c
        node = (v, c)
        d = 0
        for w in nbrs[node]:
            if w[0] in chosen and chosen[w[0]] == w[1]:
                placed_deg[w] += 1
                d += 1
        placed_deg[node] = d
        order.append(node)

    def unplace(v: int) -> None:
        node = order.pop()
        del placed_deg[node]
        del chosen[v]
        for w in nbrs[node]:
            if w[0] in chosen and chosen[w[0]] == w[1]:
                placed_deg[w] -= 1

    def search() -> SearchStatus:
        nonlocal expanded
        if len(chosen) == n:
            return SearchStatus.FOUND
        if memo_on:
            key = frozenset(order)
            if key in failed:
                return SearchStatus.NONE
        candidates = []
        for v in graph.vertices():
            if v in chosen:
                continue
            cols = feasible_colors(v)
            if not cols:
                # monotone: a vertex with no feasible color never recovers
                if memo_on:
                    failed.add(frozenset(order))
                return SearchStatus.NONE
            candidates.append((len(cols), v, cols))
        candidates.sort()
        for _, v, cols in candidates:
            for c in cols:
                expanded += 1
                if expanded > node_limit:
                    return SearchStatus.EXHAUSTED
                place(v, c)
                sub = search()
                if sub is not SearchStatus.NONE:
                    return sub
                unplace(v)
        if memo_on:
            failed.add(frozenset(order))
        return SearchStatus.NONE

    status = search()
    if status is SearchStatus.FOUND:
        ot = OrderedTransversal(dict(chosen), tuple(order))
        report = verify_ba(cover, ot)
        assert report.passed, "solver soundness: found ordering failed verification"
        return BAOutcome(status, ot, expanded)
    return BAOutcome(status, None, expanded)


@dataclass(frozen=True)
class TransversalStructure:
    is_linear_forest: bool
    color1_independent: bool


def structure_of_transversal(cover: Cover, t: Transversal) -> TransversalStructure:
    """Necessary conditions for a B_A coloring: the induced cover
    subgraph is a linear forest and the color-1 class is independent."""
    _check_transversal(cover, t)
    nodes = [(v, c) for v, c in t.items()]
    edges = []
    for (u, v), pairs in cover.matchings.items():
        if (t[u], t[v]) in pairs:
            edges.append(((u, t[u]), (v, t[v])))
    deg: dict[Node, int] = {x: 0 for x in nodes}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    linear = all(d <= 2 for d in deg.values())
    if linear:
        # acyclic iff every component has fewer edges than vertices
        parent = {x: x for x in nodes}

        def find(x: Node) -> Node:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                linear = False
                break
            parent[ra] = rb
    color1 = not any(a[1] == 1 and b[1] == 1 for a, b in edges)
    return TransversalStructure(linear, color1)
