"""Covers of a plane graph: list assignments plus per-edge matchings.

A cover node is a pair (vertex, color).  For each edge uv of the base
graph the cover holds a matching between the color lists of u and v;
the cover's edge set is the disjoint union of those matchings.  A
matching may be partial or empty; worst-case hunting uses perfect
matchings (full=True).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial
from random import Random
from typing import Iterator, Mapping, Sequence

from .planegraph import PlaneGraph

Node = tuple[int, int]
Pair = tuple[int, int]  # (color at u, color at v) for an edge (u, v) with u < v


@dataclass(frozen=True)
class Cover:
    graph: PlaneGraph
    k: int
    lists: tuple[tuple[int, ...], ...]  # lists[v] = ordered colors of v
    matchings: Mapping[tuple[int, int], tuple[Pair, ...]]  # key (u, v), u < v
    provenance: tuple[tuple[str, object], ...] = ()

    def colors(self, v: int) -> tuple[int, ...]:
        return self.lists[v]

    def nodes(self) -> Iterator[Node]:
        for v in self.graph.vertices():
            for c in self.lists[v]:
                yield (v, c)

    def matching(self, u: int, v: int) -> tuple[Pair, ...]:
        if u > v:
            return tuple((cv, cu) for cu, cv in self.matchings.get((v, u), ()))
        return self.matchings.get((u, v), ())

    def edge_total(self) -> int:
        return sum(len(m) for m in self.matchings.values())

    def adjacent(self, a: Node, b: Node) -> bool:
        (u, cu), (v, cv) = a, b
        if u == v:
            return False
        return (cu, cv) in self.matching(u, v)

    def neighbors_in_cover(self, node: Node) -> list[Node]:
        u, cu = node
        out = []
        for v in sorted(self.graph.neighbors(u)):
            for a, b in self.matching(u, v):
                if a == cu:
                    out.append((v, b))
        return out


def identity_cover(graph: PlaneGraph, k: int) -> Cover:
    """Lists 1..k everywhere, every matching the identity.

    Under this cover an independent transversal is exactly a proper
    k-coloring of the base graph.
    """
    if k < 1:
        raise ValueError("k must be positive")
    colors = tuple(range(1, k + 1))
    ident = tuple((c, c) for c in colors)
    matchings = {e: ident for e in sorted(graph.edges)}
    return Cover(graph, k, tuple(colors for _ in graph.vertices()), matchings,
                 (("kind", "identity"),))


def _rand_below(rng: Random, n: int) -> int:
    return rng.randrange(n) if n > 1 else 0


def _seeded_permutation(rng: Random, items: Sequence[int]) -> list[int]:
    # Fisher-Yates driven only by randrange, so the output is stable
    # across Python versions for a fixed seed.
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = rng.randrange(i + 1)
        out[i], out[j] = out[j], out[i]
    return out


def _matching_size_weights(k: int) -> list[int]:
    return [comb(k, j) ** 2 * factorial(j) for j in range(k + 1)]


def count_matchings(k: int) -> int:
    """Number of matchings between two k-sets: sum_j C(k,j)^2 j!."""
    return sum(_matching_size_weights(k))


def random_cover(graph: PlaneGraph, k: int, seed: int, full: bool) -> Cover:
    """Deterministic function of (graph, k, seed, full).

    full=True draws a uniform perfect matching (a permutation of 1..k)
    per edge; otherwise a uniform matching of any size, empty included.
    """
    if k < 1:
        raise ValueError("k must be positive")
    rng = Random(seed)
    colors = list(range(1, k + 1))
    weights = _matching_size_weights(k)
    total = sum(weights)
    matchings: dict[tuple[int, int], tuple[Pair, ...]] = {}
    for e in sorted(graph.edges):
        if full:
            perm = _seeded_permutation(rng, colors)
            pairs = tuple((colors[i], perm[i]) for i in range(k))
        else:
            # size j with probability C(k,j)^2 j! / total, then uniform
            # j-subsets on both sides and a uniform bijection
            r = _rand_below(rng, total)
            j = 0
            while r >= weights[j]:
                r -= weights[j]
                j += 1
            left = sorted(_seeded_permutation(rng, colors)[:j])
            right = sorted(_seeded_permutation(rng, colors)[:j])
            perm = _seeded_permutation(rng, right)
            pairs = tuple(sorted((left[i], perm[i]) for i in range(j)))
        matchings[e] = pairs
    return Cover(graph, k, tuple(tuple(colors) for _ in graph.vertices()), matchings,
                 (("kind", "random"), ("seed", seed), ("full", full)))


def _all_matchings(left: Sequence[int], right: Sequence[int]) -> list[tuple[Pair, ...]]:
    out: list[tuple[Pair, ...]] = []
    for j in range(min(len(left), len(right)) + 1):
        for ls in combinations(left, j):
            for rs in combinations(right, j):
                for perm in permutations(rs):
                    out.append(tuple(sorted(zip(ls, perm))))
    return out


def enumerate_covers(graph: PlaneGraph, k: int, edge_budget: int) -> Iterator[Cover]:
    """Yield every cover exactly once (all matchings, independently per edge)."""
    if graph.edge_count > edge_budget:
        raise ValueError(
            f"edge budget exceeded: {graph.edge_count} edges > budget {edge_budget}")
    colors = tuple(range(1, k + 1))
    edges = sorted(graph.edges)
    lists = tuple(colors for _ in graph.vertices())
    per_edge = _all_matchings(colors, colors)

    def rec(i: int, acc: dict[tuple[int, int], tuple[Pair, ...]]) -> Iterator[Cover]:
        if i == len(edges):
            yield Cover(graph, k, lists, dict(acc), (("kind", "enumerated"),))
            return
        for m in per_edge:
            acc[edges[i]] = m
            yield from rec(i + 1, acc)
        if edges[i] in acc:
            del acc[edges[i]]

    return rec(0, {})


@dataclass(frozen=True)
class CoverValidation:
    valid: bool
    violations: tuple[str, ...]


def validate_cover(cover: Cover) -> CoverValidation:
    """Check the two cover conditions; violations name the offending edge."""
    problems: list[str] = []
    for (u, v), pairs in sorted(cover.matchings.items()):
        if not cover.graph.has_edge(u, v):
            problems.append(f"edge {u}-{v}: cover edges between non-adjacent vertices")
        left_seen, right_seen = set(), set()
        for cu, cv in pairs:
            if cu not in cover.lists[u]:
                problems.append(f"edge {u}-{v}: color {cu} not in list of {u}")
            if cv not in cover.lists[v]:
                problems.append(f"edge {u}-{v}: color {cv} not in list of {v}")
            if cu in left_seen:
                problems.append(f"edge {u}-{v}: node ({u},{cu}) matched twice (not a matching)")
            if cv in right_seen:
                problems.append(f"edge {u}-{v}: node ({v},{cv}) matched twice (not a matching)")
            left_seen.add(cu)
            right_seen.add(cv)
    for v, lst in enumerate(cover.lists):
        if len(lst) < cover.k:
            problems.append(f"vertex {v}: list size {len(lst)} < k={cover.k}")
        if len(set(lst)) != len(lst):
            problems.append(f"vertex {v}: repeated color in list")
        if any(c < 1 for c in lst):
            problems.append(f"vertex {v}: non-positive color id")
    return CoverValidation(not problems, tuple(problems))


# -- serialization -----------------------------------------------------


def cover_to_json(cover: Cover, include_graph: bool = True) -> str:
    """Canonical JSON text; equal covers serialize byte-identically."""
    from .rotfile import serialize_rotation_file

    doc: dict = {
        "k": cover.k,
        "lists": {str(v): list(cover.lists[v]) for v in cover.graph.vertices()},
        "matchings": {f"{u}-{v}": [list(p) for p in pairs]
                      for (u, v), pairs in sorted(cover.matchings.items())},
        "provenance": {key: val for key, val in cover.provenance},
    }
    if include_graph:
        doc["graph"] = serialize_rotation_file(cover.graph, name="cover-base")
    return json.dumps(doc, sort_keys=True, indent=1)


def cover_from_json(text: str, graph: PlaneGraph | None = None) -> Cover:
    from .rotfile import parse_rotation_file

    doc = json.loads(text)
    if graph is None:
        if "graph" not in doc:
            raise ValueError("cover JSON has no embedded graph and none was supplied")
        graph, _ = parse_rotation_file(doc["graph"])
    lists = tuple(tuple(doc["lists"][str(v)]) for v in graph.vertices())
    matchings: dict[tuple[int, int], tuple[Pair, ...]] = {}
    for key, pairs in doc["matchings"].items():
        u, v = (int(x) for x in key.split("-"))
        matchings[(u, v)] = tuple((int(a), int(b)) for a, b in pairs)
    prov = tuple(sorted(doc.get("provenance", {}).items()))
    return Cover(graph, int(doc["k"]), lists, matchings, prov)
