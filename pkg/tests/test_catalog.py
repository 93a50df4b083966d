import pytest

from dpcharge.catalog import DEFAULT_CATALOG, PlanePatch, generate


def test_catalog_names_build(catalog):
    for name in DEFAULT_CATALOG:
        assert catalog[name].is_connected


def test_figure1_conformance():
    g = generate("figure1")
    assert (g.vertex_count, g.edge_count, g.face_count) == (8, 11, 5)
    assert sorted(f.degree for f in g.faces) == [3, 3, 5, 5, 6]
    edges = {(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5),
             (5, 6), (4, 6), (4, 7), (1, 7)}
    assert g.edges == frozenset(edges)


def test_dodecahedron_counts():
    g = generate("dodecahedron")
    assert (g.vertex_count, g.edge_count, g.face_count) == (20, 30, 12)
    assert all(f.degree == 5 for f in g.faces)
    assert all(g.degree(v) == 3 for v in g.vertices())


def test_cycle5_two_pentagon_faces():
    g = generate("cycle:5")
    assert [f.degree for f in g.faces] == [5, 5]


def test_cube_counts():
    g = generate("cube")
    assert (g.vertex_count, g.edge_count, g.face_count) == (8, 12, 6)
    assert all(f.degree == 4 for f in g.faces)


def test_theta_cycle_lengths():
    from dpcharge.cycles import cycles_of_length
    g = generate("theta:1,2,2")
    lengths = {k for k in range(3, 9) if cycles_of_length(g, k)}
    assert lengths == {5, 6}  # 1+2+2, 2+2+2
    g = generate("theta:3,3,3")
    lengths = {k for k in range(3, 12) if cycles_of_length(g, k)}
    assert lengths == {8}


def test_theta_with_bare_edge():
    g = generate("theta:0,2,2")
    assert g.vertex_count == 6 and g.edge_count == 7


def test_unknown_names_rejected():
    for bad in ("nonesuch", "cycle:2", "theta:1,2", "theta:0,0,3", "cycle:x"):
        with pytest.raises(ValueError):
            generate(bad)


def test_triangle_alias():
    assert generate("triangle").vertex_count == 3


def test_patch_attach_apex():
    p = PlanePatch.from_cycle(3)
    apex = p.attach_apex(0, 1)
    g = p.build()
    assert g.degree(apex) == 2
    assert sorted(f.degree for f in g.faces) == [3, 3, 4]


def test_patch_attach_face_on_edge():
    p = PlanePatch.from_cycle(4)
    p.attach_face_on_edge(0, 1, 6)
    g = p.build()
    assert sorted(f.degree for f in g.faces) == [4, 6, 8]


def test_patch_pendant_bumps_face_by_two():
    p = PlanePatch.from_cycle(4)
    p.add_pendant(0, after=1)  # lands in the face containing dart (1, 0)
    g = p.build()
    assert sorted(f.degree for f in g.faces) == [4, 6]


def test_patch_pendant_in_biggest_face():
    p = PlanePatch.from_cycle(3)
    p.attach_face_on_edge(0, 1, 5)
    p.pendant_in_biggest_face(2)  # outer has the largest degree
    g = p.build()
    assert sorted(f.degree for f in g.faces) == [3, 5, 8]
