"""Vertex classification, hypothesis profiles, and reducible configurations.

The degree-3 vertex classes follow the counting used throughout the
discharging rules: a 3-vertex is bad when it has a neighbor of degree
exactly 3, good otherwise.  When the minimum degree is at least 3 the
good class coincides with "all neighbors of degree >= 4"; defining good
as not-bad keeps the two classes a partition on degenerate inputs.

A 3-vertex is special when its three corner faces are distinct with
degrees 3, 5 and 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cycles import cycles_of_length
from .planegraph import PlaneGraph


class Profile(Enum):
    """Forbidden-cycle hypothesis: no 4-cycles plus no 8- or 6-cycles."""

    NO48 = "no48"
    NO46 = "no46"

    @property
    def forbidden_lengths(self) -> tuple[int, int]:
        return (4, 8) if self is Profile.NO48 else (4, 6)


@dataclass(frozen=True)
class VertexClassification:
    degrees: tuple[int, ...]
    bad3: frozenset[int]
    good3: frozenset[int]
    special: frozenset[int]

    def is_three(self, v: int) -> bool:
        return self.degrees[v] == 3

    def is_bad(self, v: int) -> bool:
        return v in self.bad3

    def is_good(self, v: int) -> bool:
        return v in self.good3

    def is_special(self, v: int) -> bool:
        return v in self.special

    def degree_class(self, v: int) -> str:
        d = self.degrees[v]
        if d >= 6:
            return "6+"
        if d <= 2:
            return f"{d}"
        return str(d)


def classify_vertices(graph: PlaneGraph) -> VertexClassification:
    bad, good, special = set(), set(), set()
    for v in graph.vertices():
        if graph.degree(v) != 3:
            continue
        if any(graph.degree(u) == 3 for u in graph.neighbors(v)):
            bad.add(v)
        else:
            good.add(v)
        corners = graph.incident_faces(v)
        if len(set(corners)) == 3:
            degs = sorted(graph.faces[f].degree for f in corners)
            if degs == [3, 5, 6]:
                special.add(v)
    return VertexClassification(graph.degrees, frozenset(bad), frozenset(good),
                                frozenset(special))


@dataclass(frozen=True)
class HypothesisReport:
    """Per-profile hypothesis check with witnesses for each violation.

    ``cycles_ok`` is the gate used by the hunt and the theorem-level
    checks; connectivity and minimum degree are reported alongside it.
    """

    profile: Profile
    connected: bool
    min_degree: int
    min_degree_witness: int | None
    four_cycle: tuple[int, ...] | None
    other_length: int
    other_cycle: tuple[int, ...] | None

    @property
    def four_cycle_free(self) -> bool:
        return self.four_cycle is None

    @property
    def other_cycle_free(self) -> bool:
        return self.other_cycle is None

    @property
    def cycles_ok(self) -> bool:
        return self.four_cycle is None and self.other_cycle is None

    def notes(self) -> list[str]:
        out = []
        if not self.connected:
            out.append("graph is disconnected")
        if self.min_degree < 3:
            out.append(f"minimum degree {self.min_degree} < 3 (vertex {self.min_degree_witness})")
        if self.four_cycle is not None:
            out.append(f"4-cycle present: {self.four_cycle}")
        if self.other_cycle is not None:
            out.append(f"{self.other_length}-cycle present: {self.other_cycle}")
        return out


def check_profile(graph: PlaneGraph, profile: Profile) -> HypothesisReport:
    lengths = profile.forbidden_lengths
    four = cycles_of_length(graph, 4)
    other = cycles_of_length(graph, lengths[1])
    min_deg = graph.min_degree()
    witness = None
    for v in graph.vertices():
        if graph.degree(v) == min_deg:
            witness = v
            break
    return HypothesisReport(
        profile=profile,
        connected=graph.is_connected,
        min_degree=min_deg,
        min_degree_witness=witness,
        four_cycle=four.cycles[0] if four else None,
        other_length=lengths[1],
        other_cycle=other.cycles[0] if other else None,
    )


@dataclass(frozen=True)
class ReducibleConfiguration:
    """A local structure that cannot occur in a minimal counterexample."""

    kind: str  # "low-degree-vertex" | "bad3-without-two-5plus" | "5-neighbor-without-4plus"
    vertices: tuple[int, ...]
    detail: str


def find_reducible(graph: PlaneGraph) -> list[ReducibleConfiguration]:
    """Occurrences of the reducible configurations.

    (a) a vertex of degree at most 2;
    (b) a 3-vertex with a degree-3 neighbor but fewer than two
        5+-neighbors;
    (c) a 3-vertex with a degree-3 neighbor and a 5-neighbor that has
        no 4+-neighbor.
    """
    out: list[ReducibleConfiguration] = []
    for v in graph.vertices():
        d = graph.degree(v)
        if d <= 2:
            out.append(ReducibleConfiguration(
                "low-degree-vertex", (v,), f"vertex {v} has degree {d} <= 2"))
            continue
        if d != 3:
            continue
        three_nbrs = [u for u in sorted(graph.neighbors(v)) if graph.degree(u) == 3]
        if not three_nbrs:
            continue
        five_plus = [u for u in sorted(graph.neighbors(v)) if graph.degree(u) >= 5]
        if len(five_plus) < 2:
            out.append(ReducibleConfiguration(
                "bad3-without-two-5plus", (v,),
                f"3-vertex {v} has 3-neighbor {three_nbrs[0]} but only "
                f"{len(five_plus)} neighbor(s) of degree >= 5"))
        for x in sorted(graph.neighbors(v)):
            if graph.degree(x) == 5 and not any(graph.degree(y) >= 4 for y in graph.neighbors(x)):
                out.append(ReducibleConfiguration(
                    "5-neighbor-without-4plus", (v, x),
                    f"3-vertex {v} (with a 3-neighbor) has 5-neighbor {x} "
                    f"whose neighbors all have degree <= 3"))
    return out
