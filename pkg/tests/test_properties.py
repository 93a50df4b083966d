"""Property-based checks over seeded random covers and catalog graphs."""

from itertools import product

from hypothesis import given, settings, strategies as st

from dpcharge.catalog import generate
from dpcharge.cover import (count_matchings, cover_to_json, enumerate_covers,
                            identity_cover, random_cover)
from dpcharge.cycles import cycles_of_length
from dpcharge.discharge import RuleSet, run_rules
from dpcharge.solver import (SearchStatus, find_ba, structure_of_transversal,
                             verify_ba)

SMALL_GRAPHS = ["triangle", "k4", "cycle:5", "theta:1,2,2", "cube", "figure1"]


@given(name=st.sampled_from(SMALL_GRAPHS), seed=st.integers(0, 2**63 - 1),
       full=st.booleans())
@settings(max_examples=200, deadline=None)
def test_ba_necessity_on_random_covers(name, seed, full):
    cover = random_cover(generate(name), 3, seed, full)
    out = find_ba(cover, node_limit=200_000)
    if out.status is SearchStatus.FOUND:
        assert verify_ba(cover, out.ordered).passed
        s = structure_of_transversal(cover, out.ordered.assignment)
        assert s.is_linear_forest and s.color1_independent


@given(name=st.sampled_from(SMALL_GRAPHS), seed=st.integers(0, 2**63 - 1),
       full=st.booleans())
@settings(max_examples=60, deadline=None)
def test_random_cover_reproducible(name, seed, full):
    g = generate(name)
    assert cover_to_json(random_cover(g, 3, seed, full)) == \
        cover_to_json(random_cover(g, 3, seed, full))


@given(a=st.integers(1, 3), b=st.integers(1, 3), c=st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_theta_cycle_spectrum(a, b, c):
    g = generate(f"theta:{a},{b},{c}")
    expected = {a + b + 2, a + c + 2, b + c + 2}
    for k in range(3, min(12, g.vertex_count) + 1):
        cycles = cycles_of_length(g, k)
        assert bool(cycles) == (k in expected)
        for cyc in cycles:
            assert len(set(cyc)) == k


def test_identity_cover_matches_proper_coloring():
    # independence in the identity cover is exactly properness in the graph
    for name in ("triangle", "k4", "cycle:5"):
        g = generate(name)
        cover = identity_cover(g, 3)
        for combo in product((1, 2, 3), repeat=g.vertex_count):
            t = dict(enumerate(combo))
            independent = not any(
                (t[u], t[v]) in cover.matching(u, v) for (u, v) in g.edges)
            proper = all(t[u] != t[v] for (u, v) in g.edges)
            assert independent == proper


def test_partition_property_identity_covers():
    # a passing order on an identity cover partitions the graph into
    # three linear forests, the first class independent
    for name in ("triangle", "cycle:5", "cycle:7", "figure1"):
        g = generate(name)
        out = find_ba(identity_cover(g, 3))
        assert out.status is SearchStatus.FOUND
        t = out.ordered.assignment
        class1 = [v for v, c in t.items() if c == 1]
        assert not any(g.has_edge(u, v) for u in class1 for v in class1 if u < v)
        for color in (1, 2, 3):
            verts = {v for v, c in t.items() if c == color}
            inside = [(u, v) for (u, v) in g.edges if u in verts and v in verts]
            deg: dict[int, int] = {}
            for u, v in inside:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            assert all(d <= 2 for d in deg.values())
            # acyclic: each class's edge count stays below its vertex count
            assert len(inside) < len(verts) + 1 if verts else True


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=50, deadline=None)
def test_conservation_on_random_decorations(seed):
    # decorate a catalog graph with seeded pendants: charge still conserved
    import random
    from dpcharge.catalog import PlanePatch
    rng = random.Random(seed)
    base = generate(rng.choice(["triangle", "cycle:5", "figure1", "k4"]))
    p = PlanePatch({v: list(base.rotations[v]) for v in base.vertices()})
    for _ in range(rng.randrange(4)):
        p.pendant_in_biggest_face(rng.randrange(base.vertex_count))
    g = p.build()
    for ruleset in (RuleSet.RS48, RuleSet.RS46):
        ledger = run_rules(g, ruleset)
        assert ledger.sum_final() == ledger.sum_initial() == -8


def test_single_edge_matching_count_closed_form():
    from dpcharge.planegraph import build_plane_graph
    edge = build_plane_graph({0: [1], 1: [0]})
    for k in (1, 2, 3):
        enumerated = sum(1 for _ in enumerate_covers(edge, k, 5))
        assert enumerated == count_matchings(k)
