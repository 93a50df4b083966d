"""Exhaustive fixed-length cycle enumeration.

Cycles are reported in canonical rotation: the walk starts at the
lexicographically least vertex and runs toward the smaller of that
vertex's two cycle neighbors, so each cycle appears exactly once with
no rotation or reflection duplicates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .planegraph import PlaneGraph

MAX_CYCLE_LENGTH = 12


@dataclass(frozen=True)
class CycleList:
    k: int
    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __bool__(self) -> bool:
        return bool(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


def cycles_of_length(graph: PlaneGraph, k: int) -> CycleList:
    """All simple k-cycles of the graph, canonical and duplicate-free.

    k must lie in 3..12; longer enumeration is out of scope.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    if k > MAX_CYCLE_LENGTH:
        raise ValueError(f"cycle length capped at {MAX_CYCLE_LENGTH}, got {k}")
    adj = graph.adjacency
    found: list[tuple[int, ...]] = []
    path = [0] * k
    on_path = [False] * graph.vertex_count

    def extend(start: int, depth: int) -> None:
        last = path[depth - 1]
        if depth == k:
            # close the cycle; path[1] < path[-1] kills the reflected copy
            if start in adj[last] and path[1] < path[k - 1]:
                found.append(tuple(path))
            return
        for w in sorted(adj[last]):
            if w > start and not on_path[w]:
                path[depth] = w
                on_path[w] = True
                extend(start, depth + 1)
                on_path[w] = False

    for s in range(graph.vertex_count):
        path[0] = s
        on_path[s] = True
        extend(s, 1)
        on_path[s] = False
    found.sort()
    return CycleList(k, tuple(found))


def has_chord(graph: PlaneGraph, cycle: tuple[int, ...]) -> bool:
    """True iff some edge joins two non-consecutive vertices of the cycle."""
    n = len(cycle)
    position = {v: i for i, v in enumerate(cycle)}
    for u in cycle:
        for w in graph.neighbors(u):
            if w in position:
                gap = abs(position[u] - position[w])
                if gap not in (1, n - 1) and gap != 0:
                    return True
    return False
