import random

import pytest

import edgeouter as eo
from helpers import k4, path, petersen, random_connected_multigraph, theta, triangle


def test_dart_encoding():
    assert eo.make_dart(3, 0) == 6
    assert eo.make_dart(3, 1) == 7
    assert eo.opposite(6) == 7
    for d in range(20):
        assert eo.opposite(eo.opposite(d)) == d


def test_build_theta():
    g = theta()
    assert g.degrees() == (3, 3)
    assert g.edge_count == 3
    assert g.incidence == ((0, 2, 4), (1, 3, 5))


def test_build_k4():
    g = k4()
    assert g.degrees() == (3, 3, 3, 3)
    assert g.edge_count == 6


def test_build_loop():
    g = eo.build_graph(1, [(0, 0)])
    assert g.degree(0) == 2
    assert g.incidence == ((0, 1),)
    assert g.endpoint(0) == g.endpoint(1) == 0


def test_build_rejects_bad_endpoint():
    with pytest.raises(ValueError):
        eo.build_graph(2, [(0, 2)])


def test_endpoint_consistency():
    g = k4()
    for d in g.darts():
        e = d >> 1
        u, v = g.edges[e]
        assert g.endpoint(d) == (u if d & 1 == 0 else v)
        assert g.head(d) == (v if d & 1 == 0 else u)


def test_handshake_on_random_graphs():
    rng = random.Random(7)
    for _ in range(50):
        g = random_connected_multigraph(rng)
        assert sum(g.degrees()) == 2 * g.edge_count


def test_degree_profile_examples():
    assert eo.degree_profile(k4()) == eo.DegreeProfile(True, True, (3, 3, 3, 3))
    p = eo.degree_profile(theta())
    assert p.is_cubic and not p.is_simple
    p = eo.degree_profile(eo.build_graph(1, [(0, 0)]))
    assert not p.is_cubic and not p.is_simple


def test_connectivity_k4():
    assert eo.vertex_connectivity_at_least(k4(), 3)
    assert eo.vertex_connectivity_at_least(k4(), 2)


def test_connectivity_path():
    assert not eo.vertex_connectivity_at_least(path(3), 2)
    assert eo.vertex_connectivity_at_least(path(3), 1)


def test_connectivity_requires_enough_vertices():
    with pytest.raises(ValueError):
        eo.vertex_connectivity_at_least(theta(), 3)


def test_petersen_is_3_connected():
    assert eo.vertex_connectivity_at_least(petersen(), 3)


def test_edge_disjoint_paths_bridge():
    # two triangles joined by one edge: the bridge caps the flow at 1
    g = eo.build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
    assert eo.edge_disjoint_path_count(g, 0, 4, cap=3) == 1
    assert eo.edge_disjoint_path_count(g, 0, 1, cap=3) == 2


def test_edge_disjoint_paths_parallel_edges():
    assert eo.edge_disjoint_path_count(theta(), 0, 1, cap=5) == 3


def test_e3_classes_k4():
    assert eo.e3_classes(k4()) == ((0, 1, 2, 3),)


def test_e3_classes_bridge():
    g = eo.build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
    assert eo.e3_classes(g) == ((0, 1, 2), (3, 4, 5))


def test_e3_requires_connected():
    with pytest.raises(ValueError):
        eo.e3_classes(eo.build_graph(2, []))


def test_e3_is_consistent_partition():
    # pairwise flow values must agree with the class structure
    rng = random.Random(13)
    for _ in range(15):
        g = random_connected_multigraph(rng, max_n=8)
        classes = eo.e3_classes(g)
        label = {}
        for i, cls in enumerate(classes):
            for v in cls:
                label[v] = i
        for u in range(g.vertex_count):
            for v in range(u + 1, g.vertex_count):
                related = eo.edge_disjoint_path_count(g, u, v, cap=3) >= 3
                assert related == (label[u] == label[v])


def test_cubic_three_connected_iff_single_e3_class():
    rng = random.Random(99)
    from helpers import random_cubic_2connected

    graphs = [k4(), theta(), petersen()]
    graphs += [random_cubic_2connected(rng, rng.choice([6, 8, 10])) for _ in range(10)]
    for g in graphs:
        single = len(eo.e3_classes(g)) == 1
        if g.vertex_count >= 4:
            assert eo.vertex_connectivity_at_least(g, 3) == single
