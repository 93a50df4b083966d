"""Plane graphs given by rotation systems, with faces derived by dart tracing.

A plane graph is stored as one cyclic neighbor sequence per vertex.  Faces
are orbits of the dart successor map: the successor of the dart (u, v) is
(v, w) where w immediately follows u in the cyclic rotation at v.  Every
dart lies on exactly one face, so face degrees sum to 2|E| and a cut edge
contributes both of its darts to the same face.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence


class EmbeddingError(ValueError):
    """Raised when a rotation system does not describe a plane graph."""


Dart = tuple[int, int]


@dataclass(frozen=True)
class Face:
    """One traced face: a cyclic walk of darts.

    degree counts walk length, so a cut edge counts twice.  A face is
    simple iff its boundary walk is a cycle, i.e. no vertex repeats and
    the walk has length >= 3.
    """

    id: int
    walk: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.walk)

    @property
    def boundary_vertices(self) -> tuple[int, ...]:
        """Vertices in walk order (tails of the darts); may repeat."""
        return tuple(u for u, _ in self.walk)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.walk)

    @property
    def edge_multiset(self) -> tuple[tuple[int, int], ...]:
        return tuple((min(u, v), max(u, v)) for u, v in self.walk)

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edge_multiset)

    @property
    def simple(self) -> bool:
        verts = self.boundary_vertices
        return len(set(verts)) == len(verts) and self.degree >= 3

    def __repr__(self) -> str:  # compact: vertices, not darts
        return f"Face({self.id}, deg={self.degree}, [{' '.join(map(str, self.boundary_vertices))}])"


class AdjacencyKind(Enum):
    DISJOINT = "disjoint"
    VERTEX_ONLY = "vertex-only"
    ADJACENT = "adjacent"
    NORMALLY_ADJACENT = "normally-adjacent"


class PlaneGraph:
    """Immutable embedded graph.  All queries are pure; safe to share.

    Build through :func:`build_plane_graph`, which validates the rotation
    system and traces faces.
    """

    def __init__(self, rotations: tuple[tuple[int, ...], ...], faces: tuple[Face, ...],
                 components: tuple[frozenset[int], ...]):
        self.rotations = rotations
        self.faces = faces
        self.components = components
        self.vertex_count = len(rotations)
        self.edges: frozenset[tuple[int, int]] = frozenset(
            (min(u, v), max(u, v)) for u in range(self.vertex_count) for v in rotations[u]
        )
        self.edge_count = len(self.edges)
        self.adjacency: tuple[frozenset[int], ...] = tuple(frozenset(r) for r in rotations)
        self.degrees: tuple[int, ...] = tuple(len(r) for r in rotations)
        self._face_of_dart: dict[Dart, int] = {}
        for f in faces:
            for d in f.walk:
                self._face_of_dart[d] = f.id
        # faces at each vertex, one entry per corner (multiplicity preserved)
        corner: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for f in faces:
            for u, _ in f.walk:
                corner[u].append(f.id)
        self._corner_faces = tuple(tuple(sorted(c)) for c in corner)

    # -- basic queries -------------------------------------------------

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def min_degree(self) -> int:
        return min(self.degrees) if self.degrees else 0

    def vertices(self) -> range:
        return range(self.vertex_count)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def face_of_dart(self, u: int, v: int) -> Face:
        return self.faces[self._face_of_dart[(u, v)]]

    def incident_faces(self, v: int) -> tuple[int, ...]:
        """Face ids at the corners of v (one per corner, may repeat a face)."""
        return self._corner_faces[v]

    def incident_face_degrees(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.faces[f].degree for f in self._corner_faces[v]))

    def faces_of_degree(self, k: int) -> list[Face]:
        return [f for f in self.faces if f.degree == k]

    # -- face adjacency ------------------------------------------------

    def shared_edges(self, f1: Face, f2: Face) -> frozenset[tuple[int, int]]:
        return f1.edge_set & f2.edge_set

    def face_adjacency(self, f1: Face, f2: Face) -> AdjacencyKind:
        """Classify the relation of two distinct faces.

        Adjacent means at least one shared edge; normally adjacent
        additionally requires both boundaries to be cycles sharing
        exactly two vertices.
        """
        if f1.id == f2.id:
            raise ValueError("face_adjacency requires two distinct faces")
        shared_v = f1.vertex_set & f2.vertex_set
        shared_e = self.shared_edges(f1, f2)
        if shared_e:
            if f1.simple and f2.simple and len(shared_v) == 2:
                return AdjacencyKind.NORMALLY_ADJACENT
            return AdjacencyKind.ADJACENT
        if shared_v:
            return AdjacencyKind.VERTEX_ONLY
        return AdjacencyKind.DISJOINT

    def adjacent_faces(self, f: Face) -> list[Face]:
        """Faces sharing at least one edge with f, each listed once."""
        out = []
        for g in self.faces:
            if g.id != f.id and f.edge_set & g.edge_set:
                out.append(g)
        return out

    def __repr__(self) -> str:
        return (f"PlaneGraph(V={self.vertex_count}, E={self.edge_count}, "
                f"F={self.face_count}, connected={self.is_connected})")


def _trace_faces(rotations: Sequence[Sequence[int]]) -> list[tuple[Dart, ...]]:
    index = [{v: i for i, v in enumerate(rot)} for rot in rotations]
    seen: set[Dart] = set()
    walks = []
    for u in range(len(rotations)):
        for v in rotations[u]:
            if (u, v) in seen:
                continue
            walk = []
            cur = (u, v)
            while cur not in seen:
                seen.add(cur)
                walk.append(cur)
                a, b = cur
                rot = rotations[b]
                cur = (b, rot[(index[b][a] + 1) % len(rot)])
            if cur != (u, v):
                raise EmbeddingError(f"dart successor map is not a permutation near {cur}")
            walk = _canonical_walk(walk)
            walks.append(tuple(walk))
    walks.sort(key=lambda w: w[0])
    return walks


def _canonical_walk(walk: list[Dart]) -> list[Dart]:
    i = walk.index(min(walk))
    return walk[i:] + walk[:i]


def _components(rotations: Sequence[Sequence[int]]) -> list[frozenset[int]]:
    n = len(rotations)
    unseen = set(range(n))
    comps = []
    while unseen:
        root = min(unseen)
        comp = {root}
        stack = [root]
        unseen.discard(root)
        while stack:
            u = stack.pop()
            for v in rotations[u]:
                if v in unseen:
                    unseen.discard(v)
                    comp.add(v)
                    stack.append(v)
        comps.append(frozenset(comp))
    return comps


def build_plane_graph(rotations: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]) -> PlaneGraph:
    """Validate a rotation system and trace its faces.

    Rejects loops, repeated neighbors within a rotation, asymmetric
    rotations, and rotation systems whose traced faces violate Euler's
    formula on any component (such input describes a positive-genus
    embedding, not a plane graph).  Disconnected input is accepted; the
    result is flagged through ``is_connected``.
    """
    if isinstance(rotations, Mapping):
        n = len(rotations)
        if set(rotations) != set(range(n)):
            raise EmbeddingError(f"vertex ids must be exactly 0..{n - 1}")
        rot_list: list[tuple[int, ...]] = [tuple(rotations[v]) for v in range(n)]
    else:
        rot_list = [tuple(r) for r in rotations]
        n = len(rot_list)

    for v, rot in enumerate(rot_list):
        for w in rot:
            if not (0 <= w < n):
                raise EmbeddingError(f"vertex {v}: neighbor {w} out of range")
        if v in rot:
            raise EmbeddingError(f"loop at vertex {v}")
        if len(set(rot)) != len(rot):
            raise EmbeddingError(f"repeated neighbor in rotation of vertex {v}")
    for v, rot in enumerate(rot_list):
        for w in rot:
            if v not in rot_list[w]:
                raise EmbeddingError(f"asymmetric rotation: {w} lists no edge back to {v}")

    walks = _trace_faces(rot_list)
    comps = _components(rot_list)
    # an edgeless component (an isolated vertex) still bounds one face,
    # whose boundary walk is empty; synthesize it so Euler holds
    for comp in comps:
        if all(not rot_list[v] for v in comp):
            walks.append(())
    faces = tuple(Face(i, w) for i, w in enumerate(walks))

    # per-component Euler check: each component must be a sphere embedding
    comp_index = {v: ci for ci, comp in enumerate(comps) for v in comp}
    face_counts = [0] * len(comps)
    empty_iter = iter([ci for ci, comp in enumerate(comps)
                       if all(not rot_list[v] for v in comp)])
    for f in faces:
        if f.walk:
            face_counts[comp_index[f.walk[0][0]]] += 1
        else:
            face_counts[next(empty_iter)] += 1
    for ci, comp in enumerate(comps):
        vc = len(comp)
        ec = sum(len(rot_list[v]) for v in comp) // 2
        fc = face_counts[ci]
        if vc - ec + fc != 2:
            raise EmbeddingError(
                f"Euler formula violated on component {sorted(comp)}: "
                f"V-E+F = {vc}-{ec}+{fc} = {vc - ec + fc} != 2 (not a plane embedding)")

    g = PlaneGraph(tuple(rot_list), faces, tuple(comps))
    assert sum(f.degree for f in faces) == 2 * g.edge_count
    return g
