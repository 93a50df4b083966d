import pytest

from dpcharge.catalog import generate
from dpcharge.cover import enumerate_covers, random_cover
from dpcharge.oracle import brute_ba, brute_defective
from dpcharge.planegraph import build_plane_graph
from dpcharge.solver import DefectVector, find_ba, find_defective_dp

EDGE = build_plane_graph({0: [1], 1: [0]})
D022 = DefectVector.of(0, 2, 2)


def test_all_single_edge_covers_agree():
    for cover in enumerate_covers(EDGE, 3, 5):
        assert find_ba(cover).status is brute_ba(cover).status
        assert find_defective_dp(cover, D022).status is brute_defective(cover, D022).status


def test_seeded_triangle_covers_agree():
    g = generate("triangle")
    for seed in range(60):
        cover = random_cover(g, 3, seed, full=True)
        assert find_ba(cover).status is brute_ba(cover).status
        assert find_defective_dp(cover, D022).status is brute_defective(cover, D022).status


def test_every_triangle_cover_agrees():
    # exhaustive: all 34^3 covers of the smallest cycle
    g = generate("triangle")
    for cover in enumerate_covers(g, 3, 5):
        assert find_ba(cover).status is brute_ba(cover).status
        assert (find_defective_dp(cover, D022).status
                is brute_defective(cover, D022).status)


def test_size_guard():
    g = generate("cube")  # 8 vertices
    with pytest.raises(ValueError, match="limited"):
        brute_ba(random_cover(g, 3, 0, full=True))
