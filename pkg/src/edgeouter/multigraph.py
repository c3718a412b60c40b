"""Undirected multigraphs with dart (edge-end) incidence.

Every edge ``e`` owns two darts, ``2*e`` (at the first endpoint) and
``2*e + 1`` (at the second).  A loop contributes both of its darts to the
same vertex, at distinct positions of that vertex's incidence list.  Darts
are the atomic unit of incidence here: rotation systems, walks and face
traces are all sequences of darts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


def make_dart(edge_id: int, side: int) -> int:
    """Dart for the given end (side 0 or 1) of an edge."""
    if side not in (0, 1):
        raise ValueError(f"dart side must be 0 or 1, got {side}")
    return 2 * edge_id + side


def opposite(d: int) -> int:
    """Dart at the other end of the same edge."""
    return d ^ 1


def dart_edge(d: int) -> int:
    return d >> 1


def dart_side(d: int) -> int:
    return d & 1


@dataclass(frozen=True)
class Graph:
    """Immutable undirected multigraph; loops and parallel edges allowed.

    ``incidence[v]`` lists the darts at ``v`` in construction order; its
    length is the degree of ``v`` (a loop counts twice).
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    incidence: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.edges)

    def darts(self) -> range:
        return range(2 * len(self.edges))

    def endpoint(self, d: int) -> int:
        """Vertex holding dart ``d``."""
        return self.edges[d >> 1][d & 1]

    def head(self, d: int) -> int:
        """Vertex reached by traversing ``d`` away from ``endpoint(d)``."""
        return self.edges[d >> 1][(d & 1) ^ 1]

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(inc) for inc in self.incidence)

    def neighbor_lists(self) -> list[list[int]]:
        """Sorted, deduplicated neighbor lists; loops dropped."""
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return [sorted(s) for s in adj]


def build_graph(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a Graph from an edge list; incidence follows edge-list order."""
    if vertex_count < 0:
        raise ValueError("vertex_count must be nonnegative")
    edges = []
    incidence: list[list[int]] = [[] for _ in range(vertex_count)]
    for eid, (u, v) in enumerate(edge_list):
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge {eid} endpoint out of range: ({u}, {v})")
        edges.append((int(u), int(v)))
        incidence[u].append(2 * eid)
        incidence[v].append(2 * eid + 1)
    return Graph(vertex_count, tuple(edges), tuple(tuple(inc) for inc in incidence))


@dataclass(frozen=True)
class DegreeProfile:
    is_cubic: bool
    is_simple: bool
    degrees: tuple[int, ...]


def degree_profile(g: Graph) -> DegreeProfile:
    """Cubic and simple flags plus the degree sequence."""
    degrees = g.degrees()
    is_cubic = bool(degrees) and all(d == 3 for d in degrees)
    seen_pairs = set()
    is_simple = True
    for u, v in g.edges:
        if u == v:
            is_simple = False
            break
        key = (u, v) if u < v else (v, u)
        if key in seen_pairs:
            is_simple = False
            break
        seen_pairs.add(key)
    return DegreeProfile(is_cubic, is_simple, degrees)


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    adj = g.neighbor_lists()
    seen = [False] * g.vertex_count
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.vertex_count


def _connected_without(adj: list[list[int]], n: int, removed: frozenset[int]) -> bool:
    """Connectivity of the graph induced on the non-removed vertices."""
    remaining = n - len(removed)
    if remaining <= 1:
        return True
    start = next(v for v in range(n) if v not in removed)
    seen = bytearray(n)
    seen[start] = 1
    stack = [start]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w] and w not in removed:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == remaining


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """Whether no removal of fewer than ``k`` vertices disconnects ``g``.

    Decided by exhaustive enumeration of all vertex subsets of size < k,
    which is fine at desk scale and easy to trust as an oracle.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    n = g.vertex_count
    if n < k + 1:
        raise ValueError(f"need at least {k + 1} vertices, got {n}")
    if not is_connected(g):
        return False
    adj = g.neighbor_lists()
    for size in range(1, k):
        for removed in combinations(range(n), size):
            if not _connected_without(adj, n, frozenset(removed)):
                return False
    return True


def edge_disjoint_path_count(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of edge-disjoint s-t paths, optionally capped.

    Unit-capacity augmenting-path flow on darts, so parallel edges each
    carry one path.  ``s == t`` returns the cap (trivial paths).
    """
    if s == t:
        return cap if cap is not None else 2 * g.edge_count
    used = bytearray(g.dart_count)
    flow = 0
    while cap is None or flow < cap:
        pred: dict[int, int] = {s: -1}
        queue = [s]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            u = queue[qi]
            qi += 1
            for d in g.incidence[u]:
                # residual along d: unused, or cancels flow on the reverse dart
                if used[d] and not used[d ^ 1]:
                    continue
                w = g.head(d)
                if w in pred:
                    continue
                pred[w] = d
                if w == t:
                    found = True
                    break
                queue.append(w)
        if not found:
            break
        v = t
        while v != s:
            d = pred[v]
            if used[d ^ 1]:
                used[d ^ 1] = 0
            else:
                used[d] = 1
            v = g.endpoint(d)
        flow += 1
    return flow


def e3_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Partition of the vertices into classes joined by 3 edge-disjoint paths.

    Two vertices land in the same class when the maximum flow between them
    (unit edge capacities) is at least 3.  Transitivity lets each vertex be
    compared against one representative per class.
    """
    if not is_connected(g):
        raise ValueError("e3_classes requires a connected graph")
    classes: list[list[int]] = []
    for v in range(g.vertex_count):
        for cls in classes:
            if edge_disjoint_path_count(g, cls[0], v, cap=3) >= 3:
                cls.append(v)
                break
        else:
            classes.append([v])
    return tuple(tuple(cls) for cls in classes)


def edge_multiplicities(g: Graph) -> Counter:
    """Multiplicity of each unordered endpoint pair."""
    counts: Counter = Counter()
    for u, v in g.edges:
        counts[(u, v) if u <= v else (v, u)] += 1
    return counts
