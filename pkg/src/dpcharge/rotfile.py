"""Text format for rotation systems.

    # a plane triangle
    planegraph triangle
    n 3
    v 0: 1 2
    v 1: 2 0
    v 2: 0 1

Comment lines start with '#'; blank lines are ignored.  Vertex ids run
0..n-1 and each 'v' line lists the neighbors in cyclic order.  Parse
errors carry the offending line number; embedding errors from the
builder are surfaced verbatim.
"""

from __future__ import annotations

from .planegraph import EmbeddingError, PlaneGraph, build_plane_graph


class RotationFileError(ValueError):
    def __init__(self, line_no: int | None, message: str):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)


def parse_rotation_file(text: str) -> tuple[PlaneGraph, str]:
    """Parse the grammar above; returns (graph, name)."""
    name: str | None = None
    count: int | None = None
    rotations: dict[int, tuple[int, ...]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if name is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "planegraph":
                raise RotationFileError(line_no, "expected header 'planegraph <name>'")
            name = parts[1]
            continue
        if count is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise RotationFileError(line_no, "expected 'n <count>'")
            count = int(parts[1])
            continue
        if not line.startswith("v "):
            raise RotationFileError(line_no, f"expected 'v <id>: <neighbors>', got {line!r}")
        head, _, tail = line[2:].partition(":")
        head = head.strip()
        if not head.isdigit():
            raise RotationFileError(line_no, f"bad vertex id {head!r}")
        v = int(head)
        if v >= count:
            raise RotationFileError(line_no, f"vertex id {v} out of range 0..{count - 1}")
        if v in rotations:
            raise RotationFileError(line_no, f"duplicate rotation for vertex {v}")
        nbrs = []
        for token in tail.split():
            if not token.isdigit():
                raise RotationFileError(line_no, f"bad neighbor token {token!r}")
            w = int(token)
            if w >= count:
                raise RotationFileError(line_no, f"neighbor {w} out of range 0..{count - 1}")
            nbrs.append(w)
        rotations[v] = tuple(nbrs)
    if name is None:
        raise RotationFileError(None, "missing 'planegraph <name>' header")
    if count is None:
        raise RotationFileError(None, "missing 'n <count>' line")
    for v in range(count):
        rotations.setdefault(v, ())
    try:
        return build_plane_graph(rotations), name
    except EmbeddingError as exc:
        raise RotationFileError(None, str(exc)) from exc


def serialize_rotation_file(graph: PlaneGraph, name: str = "graph") -> str:
    """Canonical text: header, count, one 'v' line per vertex, ascending."""
    lines = [f"planegraph {name}", f"n {graph.vertex_count}"]
    for v in graph.vertices():
        nbrs = " ".join(str(w) for w in graph.rotations[v])
        lines.append(f"v {v}: {nbrs}".rstrip())
    return "\n".join(lines) + "\n"


def load_rotation_file(path: str) -> tuple[PlaneGraph, str]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_rotation_file(fh.read())
