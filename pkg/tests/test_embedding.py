import random
from collections import Counter

import pytest

import edgeouter as eo
from helpers import (
    k4,
    k4_planar,
    path,
    random_connected_multigraph,
    random_embedding,
    theta,
    theta_planar,
)


def test_identity_embedding_uses_input_order():
    g = theta()
    emb = eo.identity_embedding(g)
    assert emb.rotation == ((0, 2, 4), (1, 3, 5))


def test_identity_embedding_loop():
    g = eo.build_graph(1, [(0, 0)])
    emb = eo.identity_embedding(g)
    assert emb.rotation == ((0, 1),)


def test_make_embedding_validates():
    g = theta()
    with pytest.raises(ValueError):
        eo.make_embedding(g, [(0, 2, 4), (1, 3, 3)])
    with pytest.raises(ValueError):
        eo.make_embedding(g, [(0, 2), (1, 3, 5)])


def test_theta_one_face():
    g = theta()
    fs = eo.trace_faces(eo.identity_embedding(g))
    assert fs.faces == ((0, 3, 4, 1, 2, 5),)
    assert eo.genus(eo.identity_embedding(g)) == 1


def test_theta_three_faces():
    g, emb = theta_planar()
    fs = eo.trace_faces(emb)
    assert fs.lengths == (2, 2, 2)
    assert eo.genus(emb) == 0


def test_face_lengths_sum_to_dart_count():
    rng = random.Random(5)
    for _ in range(40):
        g = random_connected_multigraph(rng)
        emb = random_embedding(rng, g)
        assert sum(eo.trace_faces(emb).lengths) == g.dart_count


def test_k4_planar_genus():
    g, emb = k4_planar()
    fs = eo.trace_faces(emb)
    assert len(fs) == 4
    assert eo.genus(emb) == 0


def test_genus_requires_connected():
    with pytest.raises(ValueError):
        eo.genus(eo.identity_embedding(eo.build_graph(2, [])))


def test_flip_theta_example():
    g, emb = theta_planar()
    fs = eo.trace_faces(emb)
    # face 0 is the digon on edges 0 and 2; flip the vertex-0 end of edge 1 into it
    assert fs.edge_sets[0] == frozenset({0, 2})
    flipped = eo.flip(emb, 2, 0, (4, 0), fs)
    fs2 = eo.trace_faces(flipped)
    new_face = fs2.face_of[2]
    assert fs2.edge_sets[new_face] == frozenset({0, 1, 2})
    counts = Counter(d >> 1 for d in fs2.faces[new_face])
    assert counts[1] == 2


def test_flip_rejects_boundary_dart():
    g, emb = theta_planar()
    fs = eo.trace_faces(emb)
    with pytest.raises(ValueError):
        eo.flip(emb, 0, 0, (4, 0), fs)  # edge 0 already on face 0


def test_flip_rejects_wrong_corner():
    g, emb = theta_planar()
    fs = eo.trace_faces(emb)
    with pytest.raises(ValueError):
        eo.flip(emb, 2, 0, (0, 4), fs)  # not consecutive in the rotation
    with pytest.raises(ValueError):
        eo.flip(emb, 2, 2, (4, 0), fs)  # corner belongs to face 0, not 2


def _random_flip(rng, g, emb):
    faces = eo.trace_faces(emb)
    fi = rng.randrange(len(faces))
    face_vertices = faces.vertices_of(g, fi)
    candidates = []
    for e in range(g.edge_count):
        if e in faces.edge_sets[fi]:
            continue
        for s in (0, 1):
            d = 2 * e + s
            if g.endpoint(d) in face_vertices:
                candidates.append(d)
    if not candidates:
        return None
    d = rng.choice(candidates)
    from edgeouter.embedding import face_corners_at

    corners = face_corners_at(emb, faces, fi, g.endpoint(d))
    corner = rng.choice(corners)
    return eo.flip(emb, d, fi, corner, faces), fi, d, faces


def test_flip_properties_random():
    rng = random.Random(11)
    done = 0
    while done < 60:
        g = random_connected_multigraph(rng, max_n=8)
        emb = random_embedding(rng, g)
        result = _random_flip(rng, g, emb)
        if result is None:
            continue
        flipped, fi, d, faces = result
        fs2 = eo.trace_faces(flipped)
        assert sum(fs2.lengths) == g.dart_count
        # the face through the moved dart strictly absorbs the old face
        new_face = fs2.face_of[d]
        assert faces.edge_sets[fi] < fs2.edge_sets[new_face]
        assert (d >> 1) in fs2.edge_sets[new_face]
        # genus stays or climbs by one
        delta = len(faces) - len(fs2)
        assert delta in (0, 2)
        done += 1


def test_genus_invariant_under_cyclic_relabeling():
    rng = random.Random(3)
    for _ in range(20):
        g = random_connected_multigraph(rng, max_n=7)
        emb = random_embedding(rng, g)
        rotated = []
        for rot in emb.rotation:
            if rot:
                k = rng.randrange(len(rot))
                rotated.append(rot[k:] + rot[:k])
            else:
                rotated.append(rot)
        assert eo.genus(eo.make_embedding(g, rotated)) == eo.genus(emb)


def test_reversal_preserves_face_length_multiset():
    rng = random.Random(17)
    for _ in range(20):
        g = random_connected_multigraph(rng, max_n=8)
        emb = random_embedding(rng, g)
        mirrored = eo.make_embedding(g, [tuple(reversed(rot)) for rot in emb.rotation])
        assert sorted(eo.trace_faces(emb).lengths) == sorted(eo.trace_faces(mirrored).lengths)


def test_clockwise_neighbor_k4():
    g, emb = k4_planar()
    assert eo.clockwise_neighbor(emb, 0, 1) == 2
    assert eo.clockwise_neighbor(emb, 0, 2) == 3
    assert eo.clockwise_neighbor(emb, 0, 3) == 1  # cyclic wraparound


def test_clockwise_neighbor_full_cycle():
    g, emb = k4_planar()
    for u in range(4):
        start = next(w for w in range(4) if w != u)
        w = start
        for _ in range(g.degree(u)):
            w = eo.clockwise_neighbor(emb, u, w)
        assert w == start


def test_clockwise_neighbor_errors():
    g, emb = k4_planar()
    with pytest.raises(ValueError):
        eo.clockwise_neighbor(emb, 0, 0)
    t = theta()
    with pytest.raises(ValueError):
        eo.clockwise_neighbor(eo.identity_embedding(t), 0, 1)
    p = path(3)
    with pytest.raises(ValueError):
        eo.clockwise_neighbor(eo.identity_embedding(p), 0, 2)
