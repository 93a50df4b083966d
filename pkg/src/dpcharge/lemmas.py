"""Mechanized checks of the structural lemmas behind the two rule sets.

Every item is checked in two layers: first the item's hypotheses on the
given graph (absence of the profile's forbidden cycles, and minimum
degree 3 where the item requires it), then the conclusion itself.  The
conclusion is evaluated even when the hypotheses fail, which is what
the contrapositive tests exercise: a failing conclusion on a failing
hypothesis should come with a concrete forbidden cycle as the witness.

A ``violated`` verdict (hypotheses hold, conclusion fails) never occurs
on sound input; one appearing on a catalog graph is a release blocker.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .cycles import cycles_of_length, has_chord
from .planegraph import AdjacencyKind, Face, PlaneGraph
from .structure import Profile, check_profile, classify_vertices


class Verdict(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"


@dataclass(frozen=True)
class LemmaItemResult:
    item: str
    statement: str
    needs_min_degree3: bool
    hypotheses_ok: bool
    hypothesis_notes: tuple[str, ...]
    conclusion_holds: bool
    witness: tuple | None

    @property
    def verdict(self) -> Verdict:
        if not self.hypotheses_ok:
            return Verdict.HYPOTHESIS_NOT_MET
        return Verdict.HOLDS if self.conclusion_holds else Verdict.VIOLATED


@dataclass(frozen=True)
class LemmaReport:
    profile: Profile
    items: tuple[LemmaItemResult, ...]

    @property
    def violated(self) -> tuple[LemmaItemResult, ...]:
        return tuple(r for r in self.items if r.verdict is Verdict.VIOLATED)


Check = Callable[[PlaneGraph], tuple[bool, tuple | None]]


def _pairs_of_degrees(graph: PlaneGraph, d1: int, d2: int):
    for f in graph.faces:
        if f.degree != d1:
            continue
        for g in graph.adjacent_faces(f):
            if g.degree == d2 and (d1 != d2 or f.id < g.id):
                yield f, g


def _no_adjacent_3_faces(graph: PlaneGraph):
    # a doubly covered triangle (the graph K3) is one cycle bounding both
    # of its sides, not two triangles; the 4-cycle argument needs the
    # boundaries to differ, which is automatic once delta >= 3
    for f, g in _pairs_of_degrees(graph, 3, 3):
        if f.vertex_set != g.vertex_set:
            return False, (f.id, g.id)
    return True, None


def _adjacent_implies_normal(d_small: int, d_big: int) -> Check:
    def check(graph: PlaneGraph):
        for f, g in _pairs_of_degrees(graph, d_small, d_big):
            if graph.face_adjacency(f, g) is not AdjacencyKind.NORMALLY_ADJACENT:
                return False, (f.id, g.id)
        return True, None
    return check


def _never_adjacent(d1: int, d2: int) -> Check:
    def check(graph: PlaneGraph):
        for f, g in _pairs_of_degrees(graph, d1, d2):
            return False, (f.id, g.id)
        return True, None
    return check


def _at_most_k_triangles(d: int, limit: int) -> Check:
    def check(graph: PlaneGraph):
        for f in graph.faces:
            if f.degree != d:
                continue
            tris = [g.id for g in graph.adjacent_faces(f) if g.degree == 3]
            if len(tris) > limit:
                return False, (f.id, tuple(tris))
        return True, None
    return check


def _seven_faces_are_chordless_cycles(graph: PlaneGraph):
    for f in graph.faces:
        if f.degree == 7 and not f.simple:
            return False, ("7-face not bounded by a cycle", f.id)
    for cyc in cycles_of_length(graph, 7):
        if has_chord(graph, cyc):
            return False, ("7-cycle with a chord", cyc)
    return True, None


_ITEMS_NO48: tuple[tuple[str, str, bool, Check], ...] = (
    ("no48.i", "no two 3-faces are adjacent", False, lambda g: _no_adjacent_3_faces(g)),
    ("no48.ii", "a 3-face adjacent to a 5-face is normally adjacent", False,
     _adjacent_implies_normal(3, 5)),
    ("no48.iii", "a 3-face adjacent to a 6-face is normally adjacent", True,
     _adjacent_implies_normal(3, 6)),
    ("no48.iv", "no 7-face is adjacent to a 3-face", True, _never_adjacent(3, 7)),
    ("no48.v", "no two 5-faces are adjacent", True, _never_adjacent(5, 5)),
    ("no48.vi", "each 5-face is adjacent to at most two 3-faces", True,
     _at_most_k_triangles(5, 2)),
    ("no48.vii", "each 6-face is adjacent to at most one 3-face", True,
     _at_most_k_triangles(6, 1)),
)

_ITEMS_NO46: tuple[tuple[str, str, bool, Check], ...] = (
    ("no46.i", "no two 3-faces are adjacent", False, lambda g: _no_adjacent_3_faces(g)),
    ("no46.ii", "no 3-face is adjacent to a 5-face", False, _never_adjacent(3, 5)),
    ("no46.iii", "no 3-face is adjacent to a 6-face", True, _never_adjacent(3, 6)),
    ("no46.iv", "every 7-face is bounded by a 7-cycle and every 7-cycle is chordless",
     False, lambda g: _seven_faces_are_chordless_cycles(g)),
    ("no46.v", "a 3-face adjacent to a 7-face is normally adjacent", False,
     _adjacent_implies_normal(3, 7)),
)


def check_structural_lemmas(graph: PlaneGraph, profile: Profile) -> LemmaReport:
    hypothesis = check_profile(graph, profile)
    cycle_notes = []
    if hypothesis.four_cycle is not None:
        cycle_notes.append(f"4-cycle present: {hypothesis.four_cycle}")
    if hypothesis.other_cycle is not None:
        cycle_notes.append(
            f"{hypothesis.other_length}-cycle present: {hypothesis.other_cycle}")
    degree_note = (f"minimum degree {hypothesis.min_degree} < 3 "
                   f"(vertex {hypothesis.min_degree_witness})")
    items = _ITEMS_NO48 if profile is Profile.NO48 else _ITEMS_NO46
    results = []
    for item, statement, needs_d3, check in items:
        notes = list(cycle_notes)
        if needs_d3 and hypothesis.min_degree < 3:
            notes.append(degree_note)
        holds, witness = check(graph)
        results.append(LemmaItemResult(
            item=item,
            statement=statement,
            needs_min_degree3=needs_d3,
            hypotheses_ok=not notes,
            hypothesis_notes=tuple(notes),
            conclusion_holds=holds,
            witness=witness,
        ))
    return LemmaReport(profile, tuple(results))


# -- the special 3-vertex configuration --------------------------------


@dataclass(frozen=True)
class SpecialVertexRecord:
    """One special 3-vertex checked against the unique local shape.

    The three clauses (in a 4,8-cycle-free graph of minimum degree 3):
    the 5-face and the 6-face share exactly one vertex besides the
    special vertex's neighbors; the 5-face is adjacent to exactly one
    3-face; no other special 3-vertex lies on either face.

    Counting is normalized for minimum degree 3: a 3-face containing a
    vertex of degree <= 2 cannot bound in such a graph and is excluded
    from the second clause (listed under ``excluded_triangles``), and a
    putative special vertex adjacent to a degree <= 2 vertex is excluded
    from the third (listed under ``excluded_specials``).  Both filters
    are vacuous when the minimum degree is 3.
    """

    vertex: int
    triangle_face: int
    five_face: int
    six_face: int
    identification_candidates: tuple[int, ...]
    identification_ok: bool
    adjacent_triangles_raw: tuple[int, ...]
    adjacent_triangles: tuple[int, ...]
    excluded_triangles: tuple[tuple[int, str], ...]
    one_triangle_ok: bool
    other_specials_raw: tuple[int, ...]
    other_specials: tuple[int, ...]
    excluded_specials: tuple[tuple[int, str], ...]
    uniqueness_ok: bool
    hypothesis_notes: tuple[str, ...]

    @property
    def all_ok(self) -> bool:
        return self.identification_ok and self.one_triangle_ok and self.uniqueness_ok


def _degenerate_vertex(graph: PlaneGraph, face: Face) -> int | None:
    for u in sorted(face.vertex_set):
        if graph.degree(u) <= 2:
            return u
    return None


def special_vertex_analysis(graph: PlaneGraph) -> list[SpecialVertexRecord]:
    cls = classify_vertices(graph)
    hypothesis = check_profile(graph, Profile.NO48)
    records = []
    for v in sorted(cls.special):
        corners = graph.incident_faces(v)
        by_degree = {graph.faces[f].degree: graph.faces[f] for f in corners}
        f1, f2, f3 = by_degree[3], by_degree[5], by_degree[6]

        ident = tuple(sorted((f2.vertex_set & f3.vertex_set)
                             - ({v} | set(graph.neighbors(v)))))
        identification_ok = len(ident) == 1

        raw_tris = tuple(sorted(g.id for g in graph.adjacent_faces(f2) if g.degree == 3))
        excluded_t = []
        kept_tris = []
        for fid in raw_tris:
            degen = _degenerate_vertex(graph, graph.faces[fid])
            if degen is not None:
                excluded_t.append(
                    (fid, f"3-face {fid} contains vertex {degen} of degree "
                          f"{graph.degree(degen)} <= 2, impossible with minimum degree 3"))
            else:
                kept_tris.append(fid)
        one_triangle_ok = len(kept_tris) == 1 and kept_tris[0] == f1.id

        on_faces = (f2.vertex_set | f3.vertex_set) - {v}
        raw_others = tuple(sorted(u for u in on_faces if cls.is_special(u)))
        excluded_s = []
        kept_others = []
        for u in raw_others:
            low = [w for w in sorted(graph.neighbors(u)) if graph.degree(w) <= 2]
            if low:
                excluded_s.append(
                    (u, f"special vertex {u} is adjacent to vertex {low[0]} of degree "
                        f"{graph.degree(low[0])} <= 2, impossible with minimum degree 3"))
            else:
                kept_others.append(u)
        uniqueness_ok = not kept_others

        notes: list[str] = []
        if not (identification_ok and one_triangle_ok and uniqueness_ok):
            notes = hypothesis.notes()
        records.append(SpecialVertexRecord(
            vertex=v,
            triangle_face=f1.id,
            five_face=f2.id,
            six_face=f3.id,
            identification_candidates=ident,
            identification_ok=identification_ok,
            adjacent_triangles_raw=raw_tris,
            adjacent_triangles=tuple(kept_tris),
            excluded_triangles=tuple(excluded_t),
            one_triangle_ok=one_triangle_ok,
            other_specials_raw=raw_others,
            other_specials=tuple(kept_others),
            excluded_specials=tuple(excluded_s),
            uniqueness_ok=uniqueness_ok,
            hypothesis_notes=tuple(notes),
        ))
    return records
