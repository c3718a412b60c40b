"""Closed directed walks and the predicates that make them face boundaries.

A walk is a dart sequence; dart ``d`` is traversed from ``endpoint(d)`` to
``endpoint(opposite(d))``.  A closed walk occurs as a face boundary in some
orientable embedding exactly when it is orientable (each edge at most once
per direction) and rotation-compatible (its local transition graph at each
vertex is a spanning cycle of that vertex's darts or a disjoint union of
paths).  ``realize_as_face`` constructs such an embedding.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

from .embedding import Embedding, face_orbits, make_embedding
from .multigraph import Graph, dart_edge, opposite


@dataclass(frozen=True)
class Walk:
    """A directed walk as a dart sequence (closed unless stated otherwise)."""

    darts: tuple[int, ...]
    closed: bool = True

    def __len__(self) -> int:
        return len(self.darts)

    def reverse(self) -> "Walk":
        return Walk(tuple(opposite(d) for d in reversed(self.darts)), self.closed)


def check_walk(g: Graph, w: Walk) -> None:
    """Raise unless consecutive darts are incident (cyclically if closed)."""
    if not w.darts:
        raise ValueError("walk must be nonempty")
    for d in w.darts:
        if not (0 <= d < g.dart_count):
            raise ValueError(f"dart {d} out of range")
    k = len(w.darts)
    last = k if w.closed else k - 1
    for i in range(last):
        d, e = w.darts[i], w.darts[(i + 1) % k]
        if g.head(d) != g.endpoint(e):
            raise ValueError(f"darts {d} and {e} are not incident at position {i}")


def canonical_form(w: Walk) -> tuple[int, ...]:
    """Least rotation over the dart sequence and its reversal.

    Two closed walks are the same route exactly when their canonical
    forms agree.
    """
    best: tuple[int, ...] | None = None
    for seq in (w.darts, w.reverse().darts):
        k = len(seq)
        for r in range(k):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


@dataclass(frozen=True)
class WalkReport:
    edge_spanning: bool
    edge_2_bounded: bool
    orientable: bool
    retraction_free: bool
    rotation_compatible: bool
    solo_edges: frozenset[int]
    double_edges: frozenset[int]


@dataclass(frozen=True)
class RotGraph:
    """Local transition graph of a closed walk at one vertex.

    ``nodes`` are the darts at the vertex; ``links`` holds one
    (arrival end, departure end) pair per visit.  The compatibility test
    reads the links as undirected.
    """

    vertex: int
    nodes: tuple[int, ...]
    links: tuple[tuple[int, int], ...]

    def is_spanning_cycle(self) -> bool:
        if not self.nodes or len(self.links) != len(self.nodes):
            return False
        deg: Counter = Counter()
        adj = defaultdict(list)
        for a, b in self.links:
            deg[a] += 1
            deg[b] += 1
            adj[a].append(b)
            adj[b].append(a)
        if any(deg[x] != 2 for x in self.nodes):
            return False
        seen = {self.nodes[0]}
        stack = [self.nodes[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.nodes)

    def is_path_union(self) -> bool:
        if not self.links:
            return True
        pair_counts: Counter = Counter()
        deg: Counter = Counter()
        adj = defaultdict(list)
        for a, b in self.links:
            if a == b:
                return False
            pair_counts[(a, b) if a < b else (b, a)] += 1
            deg[a] += 1
            deg[b] += 1
            adj[a].append(b)
            adj[b].append(a)
        if any(c > 1 for c in pair_counts.values()):
            return False
        if any(c > 2 for c in deg.values()):
            return False
        # forest check: every touched component has one link fewer than nodes
        seen: set[int] = set()
        for start in adj:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            link_count = sum(len(adj[x]) for x in comp) // 2
            if link_count != len(comp) - 1:
                return False
        return True

    def is_compatible(self) -> bool:
        return self.is_path_union() or self.is_spanning_cycle()


def _transitions_by_vertex(g: Graph, w: Walk) -> dict[int, list[tuple[int, int]]]:
    out: dict[int, list[tuple[int, int]]] = defaultdict(list)
    k = len(w.darts)
    for i, x in enumerate(w.darts):
        y = w.darts[(i + 1) % k]
        out[g.head(x)].append((opposite(x), y))
    return out


def rot_graph(g: Graph, w: Walk, v: int) -> RotGraph:
    if not w.closed:
        raise ValueError("rot_graph is defined for closed walks")
    check_walk(g, w)
    links = _transitions_by_vertex(g, w).get(v, [])
    return RotGraph(v, tuple(g.incidence[v]), tuple(links))


def validate_walk(g: Graph, w: Walk) -> WalkReport:
    """Compute all walk predicates at once."""
    if not w.closed:
        raise ValueError("validate_walk is defined for closed walks")
    check_walk(g, w)
    edge_counts = Counter(dart_edge(d) for d in w.darts)
    dart_counts = Counter(w.darts)
    edge_spanning = len(edge_counts) == g.edge_count
    edge_2_bounded = all(c <= 2 for c in edge_counts.values())
    orientable = all(c <= 1 for c in dart_counts.values())
    k = len(w.darts)
    retraction_free = all(w.darts[(i + 1) % k] != opposite(w.darts[i]) for i in range(k))
    rotation_compatible = True
    for v, links in _transitions_by_vertex(g, w).items():
        rg = RotGraph(v, tuple(g.incidence[v]), tuple(links))
        if not rg.is_compatible():
            rotation_compatible = False
            break
    solo = frozenset(e for e, c in edge_counts.items() if c == 1)
    double = frozenset(e for e, c in edge_counts.items() if c == 2)
    return WalkReport(
        edge_spanning,
        edge_2_bounded,
        orientable,
        retraction_free,
        rotation_compatible,
        solo,
        double,
    )


def is_reporter_strand_walk(g: Graph, w: Walk) -> bool:
    """Edge-spanning, orientable and rotation-compatible, all at once."""
    report = validate_walk(g, w)
    return report.edge_spanning and report.orientable and report.rotation_compatible


def realize_as_face(g: Graph, w: Walk) -> Embedding:
    """Embedding of ``g`` in which ``w`` is a traced face boundary.

    The walk's transitions pin a partial rotation at each vertex; chains
    are completed into full cyclic orders deterministically (chains sorted
    by first dart, unused darts appended in increasing order).  Requires
    the walk to be orientable and rotation-compatible.
    """
    report = validate_walk(g, w)
    if not (report.orientable and report.rotation_compatible):
        raise ValueError("walk is not realizable as a face boundary")
    succ_at: list[dict[int, int]] = [dict() for _ in range(g.vertex_count)]
    pred_at: list[dict[int, int]] = [dict() for _ in range(g.vertex_count)]
    for v, links in _transitions_by_vertex(g, w).items():
        for a, b in links:
            if succ_at[v].get(a, b) != b or pred_at[v].get(b, a) != a:
                raise ValueError("walk is not realizable as a face boundary")
            succ_at[v][a] = b
            pred_at[v][b] = a

    rotation = []
    for v in range(g.vertex_count):
        darts_here = g.incidence[v]
        succ = succ_at[v]
        pred = pred_at[v]
        constrained = set(succ) | set(pred)
        if len(succ) == len(darts_here) and len(darts_here) > 0:
            # fully constrained: a single spanning cycle
            start = min(darts_here)
            order = [start]
            for _ in range(len(darts_here) - 1):
                order.append(succ[order[-1]])
            if len(set(order)) != len(darts_here) or succ[order[-1]] != start:
                raise ValueError("walk is not realizable as a face boundary")
            rotation.append(tuple(order))
            continue
        chains = []
        for d in sorted(constrained):
            if d in pred:
                continue
            chain = [d]
            while chain[-1] in succ:
                chain.append(succ[chain[-1]])
            chains.append(chain)
        for d in sorted(set(darts_here) - constrained):
            chains.append([d])
        chains.sort(key=lambda c: c[0])
        rotation.append(tuple(x for chain in chains for x in chain))
    emb = make_embedding(g, rotation)

    # the walk must now be a face orbit; cheap to confirm
    target = set()
    k = len(w.darts)
    for r in range(k):
        target.add(w.darts[r:] + w.darts[:r])
    if not any(tuple(orbit) in target for orbit in face_orbits(g, rotation)):
        raise AssertionError("constructed embedding does not trace the walk")
    return emb
