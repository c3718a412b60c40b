import random

import pytest

import edgeouter as eo
from edgeouter.optimal import iter_rotation_systems
from helpers import (
    closed_walks_up_to,
    k4,
    k4_planar,
    random_connected_multigraph,
    random_embedding,
    theta,
    triangle,
)


def test_check_walk_rejects_gaps():
    g = k4()
    with pytest.raises(ValueError):
        eo.validate_walk(g, eo.Walk((0, 10)))
    with pytest.raises(ValueError):
        eo.validate_walk(g, eo.Walk(()))


def test_check_walk_rejects_open():
    g = theta()
    with pytest.raises(ValueError):
        eo.validate_walk(g, eo.Walk((0,), closed=False))


def test_theta_postman_walk_has_retraction():
    g = theta()
    # edge 0 forward, edge 1 back, edge 2 out and straight back
    w = eo.Walk((0, 3, 4, 5))
    report = eo.validate_walk(g, w)
    assert report.edge_spanning and report.edge_2_bounded
    assert not report.retraction_free
    assert not eo.is_reporter_strand_walk(g, w)
    assert len(w) == eo.chinese_postman_length(g)


def test_theta_alternating_walk_all_flags():
    g = theta()
    w = eo.Walk((0, 3, 4, 1, 2, 5))
    report = eo.validate_walk(g, w)
    assert report == eo.WalkReport(
        True, True, True, True, True, frozenset(), frozenset({0, 1, 2})
    )
    assert eo.is_reporter_strand_walk(g, w)


def test_triangle_euler_circuit():
    g = triangle()
    w = eo.Walk((0, 4, 3))  # 0->1->2->0
    report = eo.validate_walk(g, w)
    assert report.edge_spanning and report.orientable
    assert report.retraction_free and report.rotation_compatible
    assert report.solo_edges == frozenset({0, 1, 2})


def test_solo_double_partition():
    g = theta()
    w = eo.Walk((0, 3, 4, 5))
    report = eo.validate_walk(g, w)
    assert report.solo_edges == frozenset({0, 1})
    assert report.double_edges == frozenset({2})
    assert not (report.solo_edges & report.double_edges)


def test_rot_graph_degree_two_eulerian():
    g = triangle()
    w = eo.Walk((0, 4, 3))
    rg = eo.rot_graph(g, w, 1)
    assert sorted(rg.nodes) == sorted(g.incidence[1])
    assert len(rg.links) == 1
    assert rg.is_compatible()


def test_rot_graph_eulerian_two_cycle():
    # degree-2 vertex visited twice by the double cover of a path: the two
    # links pair the same darts, a spanning 2-cycle
    g = eo.build_graph(3, [(0, 1), (1, 2)])
    w = eo.Walk((0, 2, 3, 1))
    rg = eo.rot_graph(g, w, 1)
    assert len(rg.links) == 2
    assert rg.is_spanning_cycle()
    assert eo.is_reporter_strand_walk(g, w)


def test_rot_graph_single_visit_is_path():
    g = k4()
    w = eo.Walk((0, 6, 3))  # the triangle 0 -> 1 -> 2 -> 0
    rg = eo.rot_graph(g, w, 1)
    assert len(rg.links) == 1
    assert rg.is_path_union()


def test_k2_retraction_is_still_compatible():
    g = eo.build_graph(2, [(0, 1)])
    w = eo.Walk((0, 1))
    report = eo.validate_walk(g, w)
    assert not report.retraction_free
    assert report.rotation_compatible
    assert eo.is_reporter_strand_walk(g, w)
    emb = eo.realize_as_face(g, w)
    assert eo.genus(emb) == 0


def test_canonical_form_rotation_and_reversal():
    g = theta()
    w = eo.Walk((0, 3, 4, 1, 2, 5))
    rotated = eo.Walk(w.darts[2:] + w.darts[:2])
    assert eo.canonical_form(w) == eo.canonical_form(rotated)
    assert eo.canonical_form(w) == eo.canonical_form(w.reverse())


def test_exhaustive_implications_small_graphs():
    # rotation-compatible or orientable walks are edge-2-bounded; in cubic
    # graphs rotation-compatible equals edge-2-bounded plus retraction-free
    for g in (theta(), k4()):
        for w in closed_walks_up_to(g, 6):
            report = eo.validate_walk(g, w)
            if report.rotation_compatible or report.orientable:
                assert report.edge_2_bounded
            assert report.rotation_compatible == (
                report.edge_2_bounded and report.retraction_free
            )


def test_implications_with_degree_four_vertex():
    g = eo.build_graph(3, [(0, 1), (0, 1), (0, 2), (0, 2)])
    for w in closed_walks_up_to(g, 6):
        report = eo.validate_walk(g, w)
        if report.rotation_compatible or report.orientable:
            assert report.edge_2_bounded


def test_traced_faces_are_orientable_and_compatible():
    rng = random.Random(23)
    for _ in range(25):
        g = random_connected_multigraph(rng, max_n=9)
        emb = random_embedding(rng, g)
        for orbit in eo.trace_faces(emb).faces:
            report = eo.validate_walk(g, eo.Walk(orbit))
            assert report.orientable and report.rotation_compatible


def test_realize_theta_one_face():
    g = theta()
    w = eo.Walk((0, 3, 4, 1, 2, 5))
    emb = eo.realize_as_face(g, w)
    assert eo.genus(emb) == 1
    assert len(eo.trace_faces(emb)) == 1


def test_realize_planar_triangle_face():
    g, emb = k4_planar()
    fs = eo.trace_faces(emb)
    w = eo.Walk(fs.faces[0])
    emb2 = eo.realize_as_face(g, w)
    target = eo.canonical_form(w)
    assert any(eo.canonical_form(eo.Walk(f)) == target for f in eo.trace_faces(emb2).faces)


def test_realize_all_k4_face_walks():
    g = k4()
    for rotation in iter_rotation_systems(g):
        emb = eo.make_embedding(g, rotation)
        for orbit in eo.trace_faces(emb).faces:
            w = eo.Walk(orbit)
            emb2 = eo.realize_as_face(g, w)
            target = eo.canonical_form(w)
            assert any(
                eo.canonical_form(eo.Walk(f)) == target
                for f in eo.trace_faces(emb2).faces
            )


def test_realize_rejects_invalid():
    g = theta()
    with pytest.raises(ValueError):
        eo.realize_as_face(g, eo.Walk((0, 3, 4, 5)))  # retraction at a cubic vertex
    t = triangle()
    # the doubled triangle is rotation-compatible but not orientable
    doubled = eo.Walk((0, 4, 3, 0, 4, 3))
    report = eo.validate_walk(t, doubled)
    assert report.rotation_compatible and not report.orientable
    with pytest.raises(ValueError):
        eo.realize_as_face(t, doubled)
