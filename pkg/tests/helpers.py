"""Shared graph builders and random generators for the test suite."""

from __future__ import annotations

import random

import edgeouter as eo


def theta() -> eo.Graph:
    return eo.build_graph(2, [(0, 1)] * 3)


def triangle() -> eo.Graph:
    return eo.build_graph(3, [(0, 1), (0, 2), (1, 2)])


def k4() -> eo.Graph:
    return eo.build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k4_planar() -> tuple[eo.Graph, eo.Embedding]:
    g = k4()
    emb = eo.embedding_from_neighbor_rotations(
        g, {0: [1, 2, 3], 1: [2, 0, 3], 2: [3, 0, 1], 3: [1, 0, 2]}
    )
    return g, emb


def theta_planar() -> tuple[eo.Graph, eo.Embedding]:
    g = theta()
    return g, eo.make_embedding(g, [(0, 2, 4), (5, 3, 1)])


def petersen() -> eo.Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return eo.build_graph(10, edges)


def prism() -> eo.Graph:
    return eo.build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def path(n: int) -> eo.Graph:
    return eo.build_graph(n, [(i, i + 1) for i in range(n - 1)])


def random_connected_multigraph(rng: random.Random, max_n: int = 12) -> eo.Graph:
    """Connected multigraph with at least one edge; loops and parallels allowed."""
    n = rng.randint(1, max_n)
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[rng.randrange(i)], order[i]) for i in range(1, n)]
    extra = rng.randint(0, 4)
    for _ in range(extra):
        edges.append((rng.randrange(n), rng.randrange(n)))
    if not edges:
        edges.append((0, 0))
    return eo.build_graph(n, edges)


def random_cubic_2connected(rng: random.Random, n: int) -> eo.Graph:
    """Hamiltonian cubic multigraph: a spanning cycle plus a perfect matching."""
    assert n % 2 == 0 and n >= 4
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    positions = list(range(n))
    rng.shuffle(positions)
    for i in range(0, n, 2):
        edges.append((order[positions[i]], order[positions[i + 1]]))
    return eo.build_graph(n, edges)


def random_embedding(rng: random.Random, g: eo.Graph) -> eo.Embedding:
    rotation = []
    for inc in g.incidence:
        rot = list(inc)
        rng.shuffle(rot)
        rotation.append(tuple(rot))
    return eo.make_embedding(g, rotation)


def closed_walks_up_to(g: eo.Graph, max_len: int):
    """Every closed walk of length <= max_len, as Walk objects."""
    results = []

    def extend(seq: list[int]) -> None:
        if g.head(seq[-1]) == g.endpoint(seq[0]):
            results.append(eo.Walk(tuple(seq)))
        if len(seq) == max_len:
            return
        v = g.head(seq[-1])
        for nxt in g.incidence[v]:
            seq.append(nxt)
            extend(seq)
            seq.pop()

    for d in g.darts():
        extend([d])
    return results
