"""Rotation systems for orientable cellular embeddings.

An embedding is a rotation system: one cyclic order of incident darts per
vertex, read as the clockwise order around the vertex.  Faces are the
orbits of the tracing rule

    next(d) = successor, at the head vertex of d, of opposite(d),

so every face boundary is a directed closed walk and the face lengths sum
to twice the edge count.  All "clockwise" conventions elsewhere in this
package (gadget constructions included) are pinned to this rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .multigraph import Graph, dart_edge, is_connected, opposite


@dataclass(frozen=True)
class Embedding:
    """Immutable rotation system over a fixed graph."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    @cached_property
    def _succ(self) -> tuple[int, ...]:
        succ = [0] * self.graph.dart_count
        for rot in self.rotation:
            k = len(rot)
            for i, d in enumerate(rot):
                succ[d] = rot[(i + 1) % k]
        return tuple(succ)

    def successor(self, d: int) -> int:
        """Next dart clockwise after ``d`` at ``endpoint(d)``."""
        return self._succ[d]

    def face_next(self, d: int) -> int:
        """Dart following ``d`` on its face boundary walk."""
        return self._succ[d ^ 1]


def make_embedding(g: Graph, rotation: Sequence[Sequence[int]]) -> Embedding:
    """Validate and freeze a rotation system for ``g``."""
    if len(rotation) != g.vertex_count:
        raise ValueError("rotation must cover every vertex")
    frozen = []
    for v, rot in enumerate(rotation):
        if sorted(rot) != sorted(g.incidence[v]):
            raise ValueError(f"rotation at vertex {v} is not a cyclic order of its darts")
        frozen.append(tuple(rot))
    return Embedding(g, tuple(frozen))


def identity_embedding(g: Graph) -> Embedding:
    """The embedding whose rotations are the stored incidence order."""
    return Embedding(g, g.incidence)


def embedding_from_neighbor_rotations(
    g: Graph, rotations: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]
) -> Embedding:
    """Build an embedding of a simple graph from neighbor orderings.

    Convenient for hand-written planar rotations: each vertex lists its
    neighbors clockwise instead of raw darts.  Rejects multigraphs, where
    a neighbor name does not determine a dart.
    """
    dart_to = [dict() for _ in range(g.vertex_count)]
    for d in g.darts():
        u, w = g.endpoint(d), g.head(d)
        if w in dart_to[u] or u == w:
            raise ValueError("neighbor rotations need a simple graph")
        dart_to[u][w] = d
    rot = []
    for v in range(g.vertex_count):
        nbrs = rotations[v]
        rot.append(tuple(dart_to[v][w] for w in nbrs))
    return make_embedding(g, rot)


@dataclass(frozen=True)
class FaceSet:
    """Orbits of the face-tracing permutation of an embedding.

    Each face is stored as its dart cycle beginning at the smallest dart
    of the orbit; faces are ordered by that starting dart.
    """

    faces: tuple[tuple[int, ...], ...]
    face_of: dict[int, int]
    edge_sets: tuple[frozenset[int], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.faces)

    def __len__(self) -> int:
        return len(self.faces)

    def vertices_of(self, graph: Graph, i: int) -> frozenset[int]:
        return frozenset(graph.endpoint(d) for d in self.faces[i])


def face_orbits(g: Graph, rotation: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Face orbits of a rotation system, without building an Embedding."""
    n = g.dart_count
    succ = [0] * n
    for rot in rotation:
        k = len(rot)
        for i, d in enumerate(rot):
            succ[d] = rot[(i + 1) % k]
    seen = bytearray(n)
    faces = []
    for d0 in range(n):
        if seen[d0]:
            continue
        orbit = []
        d = d0
        while not seen[d]:
            seen[d] = 1
            orbit.append(d)
            d = succ[d ^ 1]
        faces.append(tuple(orbit))
    return faces


def trace_faces(emb: Embedding) -> FaceSet:
    faces = tuple(face_orbits(emb.graph, emb.rotation))
    face_of = {}
    edge_sets = []
    for i, orbit in enumerate(faces):
        for d in orbit:
            face_of[d] = i
        edge_sets.append(frozenset(dart_edge(d) for d in orbit))
    return FaceSet(faces, face_of, tuple(edge_sets))


def genus(emb: Embedding) -> int:
    """Genus of the embedded surface via Euler's formula."""
    g = emb.graph
    if not is_connected(g):
        raise ValueError("genus requires a connected graph")
    faces = len(face_orbits(g, emb.rotation)) if g.edge_count else 1
    euler = g.vertex_count - g.edge_count + faces
    if euler % 2:
        raise AssertionError("odd Euler characteristic for an orientable embedding")
    return (2 - euler) // 2


def flip(
    emb: Embedding,
    d: int,
    face_index: int,
    corner: tuple[int, int],
    faces: FaceSet | None = None,
) -> Embedding:
    """Move dart ``d`` into a corner of a face its edge does not bound.

    ``corner`` is a pair ``(d1, d2)`` of darts consecutive in the rotation
    at ``endpoint(d)`` through which the face passes (the boundary arrives
    on ``opposite(d1)`` and departs on ``d2``).  The result differs only at
    ``endpoint(d)``: ``d`` is removed from its position and reinserted
    between ``d1`` and ``d2``.  Retracing afterwards yields a face through
    ``d`` whose edge set strictly contains that of the old face, with
    ``edge(d)`` used twice.
    """
    if faces is None:
        faces = trace_faces(emb)
    if not (0 <= face_index < len(faces.faces)):
        raise ValueError(f"no face {face_index}")
    if dart_edge(d) in faces.edge_sets[face_index]:
        raise ValueError("dart's edge already lies on the face boundary")
    v = emb.graph.endpoint(d)
    d1, d2 = corner
    if emb.graph.endpoint(d1) != v or emb.graph.endpoint(d2) != v:
        raise ValueError("corner darts must share the flipped dart's vertex")
    if emb.successor(d1) != d2:
        raise ValueError("corner darts are not consecutive in the rotation")
    if faces.face_of[d2] != face_index:
        raise ValueError("corner is not an occurrence of the face")
    rot = list(emb.rotation[v])
    rot.remove(d)
    rot.insert(rot.index(d1) + 1, d)
    new_rotation = list(emb.rotation)
    new_rotation[v] = tuple(rot)
    return Embedding(emb.graph, tuple(new_rotation))


def face_corners_at(emb: Embedding, faces: FaceSet, face_index: int, v: int) -> list[tuple[int, int]]:
    """Corners ``(d1, d2)`` of a face at vertex ``v``, in boundary order."""
    corners = []
    orbit = faces.faces[face_index]
    k = len(orbit)
    for i, x in enumerate(orbit):
        if emb.graph.head(x) == v:
            corners.append((opposite(x), orbit[(i + 1) % k]))
    return corners


def clockwise_neighbor(emb: Embedding, u: int, v: int) -> int:
    """Neighbor of ``u`` immediately clockwise from ``v`` in the rotation at ``u``."""
    g = emb.graph
    toward = [d for d in g.incidence[u] if g.head(d) == v and g.endpoint(d) == u]
    if not toward:
        raise ValueError(f"vertices {u} and {v} are not adjacent")
    if len(toward) > 1 or u == v:
        raise ValueError(f"multiple edges between {u} and {v}")
    return g.head(emb.successor(toward[0]))


def counterclockwise_neighbor(emb: Embedding, u: int, v: int) -> int:
    """Neighbor of ``u`` immediately counterclockwise from ``v``."""
    w = v
    while True:
        nxt = clockwise_neighbor(emb, u, w)
        if nxt == v:
            return w
        w = nxt
