"""Construction of reporter strand walks by repeated dart flips.

Starting from any embedding, pick a face, and while some edge is missing
from it flip an end of a missing edge (incident with a face vertex) into
the face.  The face's edge set strictly grows each time, each edge is
flipped at most once, and the loop ends with a face whose boundary walk
uses every edge: a reporter strand walk.  Genus never decreases along the
way, so starting from a maximum-genus embedding keeps the genus maximal.
"""

from __future__ import annotations

from .embedding import (
    Embedding,
    face_corners_at,
    flip,
    genus,
    identity_embedding,
    trace_faces,
)
from .multigraph import Graph, is_connected, make_dart
from .optimal import DEFAULT_BUDGET, max_genus_embedding
from .walks import Walk


def reporter_strand_walk(
    g: Graph,
    start: Embedding | None = None,
    history: list[frozenset[int]] | None = None,
) -> tuple[Embedding, int, Walk]:
    """Embedding plus a face whose boundary uses every edge of ``g``.

    Deterministic tie-breaking: the initial face is the one containing the
    smallest dart; each iteration flips the smallest-id missing edge at its
    smallest qualifying dart, into the first corner of the face (in trace
    order) at that dart's vertex.  When ``history`` is a list, the face's
    edge set is appended after every flip.
    """
    if not is_connected(g):
        raise ValueError("reporter strand walks require a connected graph")
    if g.edge_count == 0:
        raise ValueError("graph has no edges to cover")
    emb = identity_embedding(g) if start is None else start
    if emb.graph != g:
        raise ValueError("start embedding belongs to a different graph")
    faces = trace_faces(emb)
    face_index = faces.face_of[0]
    flips = 0
    while True:
        covered = faces.edge_sets[face_index]
        if len(covered) == g.edge_count:
            break
        face_vertices = faces.vertices_of(g, face_index)
        dart = None
        for e in range(g.edge_count):
            if e in covered:
                continue
            ends = [make_dart(e, s) for s in (0, 1) if g.endpoint(make_dart(e, s)) in face_vertices]
            if ends:
                dart = min(ends)
                break
        if dart is None:
            raise AssertionError("no flippable edge found on a connected graph")
        corner = face_corners_at(emb, faces, face_index, g.endpoint(dart))[0]
        emb = flip(emb, dart, face_index, corner, faces)
        faces = trace_faces(emb)
        face_index = faces.face_of[dart]
        if not covered < faces.edge_sets[face_index]:
            raise AssertionError("face edge set did not strictly grow")
        flips += 1
        if flips > g.edge_count:
            raise AssertionError("more flips than edges")
        if history is not None:
            history.append(faces.edge_sets[face_index])
    return emb, face_index, Walk(faces.faces[face_index])


def reporter_strand_walk_max_genus(
    g: Graph, limit: int = DEFAULT_BUDGET
) -> tuple[Embedding, int, Walk]:
    """Reporter strand walk on a maximum-genus embedding.

    The starting embedding comes from exhaustive search (budgeted), and
    since flips never lower the genus the result is still maximum genus.
    """
    target, start = max_genus_embedding(g, limit)
    emb, face_index, walk = reporter_strand_walk(g, start)
    if genus(emb) != target:
        raise AssertionError("genus dropped during flips")
    return emb, face_index, walk
