"""Exact desk-scale solvers.

Chinese postman length by subset-DP pairing of odd vertices, shortest
reporter strand walks and maximum genus by exhausting rotation systems,
Chinese-postman reporter-strand (CPRS) walk enumeration for cubic graphs
by perfect matchings plus cycle orientations, and an exact hamilton cycle
oracle.  Every exhaustive routine takes an explicit budget and reports
overruns instead of silently truncating.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator

from .embedding import Embedding, face_orbits, identity_embedding, make_embedding
from .multigraph import (
    Graph,
    _connected_without,
    degree_profile,
    is_connected,
    opposite,
)
from .walks import Walk, canonical_form, is_reporter_strand_walk, validate_walk

DEFAULT_BUDGET = 200_000


class BudgetExceededError(RuntimeError):
    """An exhaustive search would exceed its stated budget."""


def chinese_postman_length(g: Graph) -> int:
    """Length of a shortest edge-spanning closed walk.

    Equals |E| plus the cheapest pairing of odd-degree vertices by
    shortest-path distance (unit edge lengths).  Exact subset DP, so the
    number of odd vertices is capped at 16.
    """
    if not is_connected(g):
        raise ValueError("chinese postman length requires a connected graph")
    m = g.edge_count
    odd = [v for v in range(g.vertex_count) if g.degree(v) % 2 == 1]
    if not odd:
        return m
    if len(odd) > 16:
        raise ValueError(f"too many odd-degree vertices for exact pairing: {len(odd)}")
    adj = g.neighbor_lists()
    dist = []
    for s in odd:
        d = [-1] * g.vertex_count
        d[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if d[w] < 0:
                    d[w] = d[u] + 1
                    queue.append(w)
        dist.append([d[t] for t in odd])
    k = len(odd)
    full = (1 << k) - 1
    inf = float("inf")
    dp = [inf] * (full + 1)
    dp[0] = 0
    for mask in range(full):
        if dp[mask] == inf:
            continue
        i = next(b for b in range(k) if not mask & (1 << b))
        for j in range(i + 1, k):
            if mask & (1 << j):
                continue
            nxt = mask | (1 << i) | (1 << j)
            cost = dp[mask] + dist[i][j]
            if cost < dp[nxt]:
                dp[nxt] = cost
    return m + int(dp[full])


def rotation_system_count(g: Graph) -> int:
    """Number of rotation systems enumerated (one per cyclic order per vertex)."""
    return prod(factorial(max(d - 1, 0)) for d in g.degrees())


def iter_rotation_systems(g: Graph, limit: int = DEFAULT_BUDGET) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All rotation systems, anchored at each vertex's first dart."""
    count = rotation_system_count(g)
    if count > limit:
        raise BudgetExceededError(f"{count} rotation systems exceed budget {limit}")
    options = []
    for inc in g.incidence:
        if len(inc) <= 2:
            options.append((tuple(inc),))
        else:
            anchor = inc[0]
            options.append(tuple((anchor,) + p for p in permutations(inc[1:])))
    return product(*options)


def exact_srs(g: Graph, limit: int = DEFAULT_BUDGET) -> tuple[int, Walk, Embedding]:
    """Shortest reporter strand walk length, with a witness walk and embedding.

    Exhausts rotation systems, traces faces, and minimizes the boundary
    length over faces incident with every edge.
    """
    if not is_connected(g):
        raise ValueError("exact_srs requires a connected graph")
    if g.edge_count == 0:
        raise ValueError("exact_srs requires at least one edge")
    full_mask = (1 << g.edge_count) - 1
    best: tuple[int, tuple[tuple[int, ...], ...], tuple[int, ...]] | None = None
    for rotation in iter_rotation_systems(g, limit):
        for orbit in face_orbits(g, rotation):
            if best is not None and len(orbit) >= best[0]:
                continue
            mask = 0
            for d in orbit:
                mask |= 1 << (d >> 1)
            if mask == full_mask:
                best = (len(orbit), rotation, orbit)
    if best is None:
        raise AssertionError("no edge-spanning face found in any rotation system")
    length, rotation, orbit = best
    return length, Walk(orbit), make_embedding(g, rotation)


def max_genus_embedding(g: Graph, limit: int = DEFAULT_BUDGET) -> tuple[int, Embedding]:
    """Maximum orientable genus with a witness embedding, by exhaustion."""
    if not is_connected(g):
        raise ValueError("max genus requires a connected graph")
    if g.edge_count == 0:
        return 0, identity_embedding(g)
    best: tuple[int, tuple[tuple[int, ...], ...]] | None = None
    for rotation in iter_rotation_systems(g, limit):
        nfaces = len(face_orbits(g, rotation))
        if best is None or nfaces < best[0]:
            best = (nfaces, rotation)
    assert best is not None
    nfaces, rotation = best
    gen = (2 - g.vertex_count + g.edge_count - nfaces) // 2
    return gen, make_embedding(g, rotation)


def max_genus_exhaustive(g: Graph, limit: int = DEFAULT_BUDGET) -> int:
    return max_genus_embedding(g, limit)[0]


@dataclass(frozen=True)
class CprsCandidate:
    """A choice of double edges plus orientations of the solo-edge cycles."""

    matching: frozenset[int]
    cycle_orientations: tuple[bool, ...]


@dataclass(frozen=True)
class TraceFailure:
    """Tracing closed up before covering every edge."""

    cycle: Walk


def _check_perfect_matching(g: Graph, matching: frozenset[int]) -> None:
    covered = set()
    for e in matching:
        u, v = g.edges[e]
        if u == v:
            raise ValueError("a loop cannot belong to a perfect matching")
        if u in covered or v in covered:
            raise ValueError("matching covers a vertex twice")
        covered.add(u)
        covered.add(v)
    if len(covered) != g.vertex_count:
        raise ValueError("matching is not perfect")


def solo_cycles(g: Graph, matching: frozenset[int]) -> list[tuple[int, ...]]:
    """Cycles of the complementary 2-factor, each as a dart sequence.

    Every cycle starts at its smallest dart and follows the factor; the
    reverse traversal is obtained by reversing and flipping the darts.
    """
    factor_at: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for v in range(g.vertex_count):
        for d in g.incidence[v]:
            if (d >> 1) not in matching:
                factor_at[v].append(d)
    if any(len(lst) != 2 for lst in factor_at):
        raise ValueError("matching complement is not 2-regular (graph not cubic?)")
    seen = set()
    cycles = []
    for d0 in range(g.dart_count):
        if d0 in seen or (d0 >> 1) in matching:
            continue
        cycle = []
        d = d0
        while d not in seen:
            seen.add(d)
            seen.add(opposite(d))
            cycle.append(d)
            v = g.head(d)
            arrive = opposite(d)
            a, b = factor_at[v]
            d = b if a == arrive else a
        cycles.append(tuple(cycle))
    return cycles


def cprs_trace(g: Graph, candidate: CprsCandidate) -> Walk | TraceFailure:
    """Trace the closed walk forced by a CPRS candidate.

    At every vertex the forced transitions are solo-in to double and double
    to solo-out.  Succeeds only if one orbit covers all 2|V| directed edge
    occurrences; otherwise the premature cycle is reported.
    """
    if not degree_profile(g).is_cubic:
        raise ValueError("cprs_trace requires a cubic graph")
    _check_perfect_matching(g, candidate.matching)
    cycles = solo_cycles(g, candidate.matching)
    if len(candidate.cycle_orientations) != len(cycles):
        raise ValueError(
            f"expected {len(cycles)} cycle orientations, got {len(candidate.cycle_orientations)}"
        )
    solo_darts = set()
    out_solo = [0] * g.vertex_count
    for cyc, flipped in zip(cycles, candidate.cycle_orientations):
        directed = tuple(opposite(d) for d in reversed(cyc)) if flipped else cyc
        for d in directed:
            solo_darts.add(d)
            out_solo[g.endpoint(d)] = d
    match_dart = [0] * g.vertex_count
    for e in candidate.matching:
        match_dart[g.edges[e][0]] = 2 * e
        match_dart[g.edges[e][1]] = 2 * e + 1
    start = min(solo_darts)
    seq = [start]
    v = g.head(start)
    cur = match_dart[v]
    while cur != start:
        seq.append(cur)
        v = g.head(cur)
        cur = match_dart[v] if cur in solo_darts else out_solo[v]
    walk = Walk(tuple(seq))
    if len(seq) != 2 * g.vertex_count:
        return TraceFailure(walk)
    return walk


def perfect_matchings(g: Graph, limit: int | None = None) -> Iterator[frozenset[int]]:
    """All perfect matchings by backtracking, in lexicographic edge order."""
    n = g.vertex_count
    if n % 2:
        return
    edges_at: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(g.edges):
        if u != v:
            edges_at[u].append((e, v))
            edges_at[v].append((e, u))
    covered = bytearray(n)
    chosen: list[int] = []
    emitted = 0

    def rec() -> Iterator[frozenset[int]]:
        nonlocal emitted
        u = next((v for v in range(n) if not covered[v]), None)
        if u is None:
            emitted += 1
            if limit is not None and emitted > limit:
                raise BudgetExceededError(f"more than {limit} perfect matchings")
            yield frozenset(chosen)
            return
        covered[u] = 1
        for e, w in edges_at[u]:
            if not covered[w]:
                covered[w] = 1
                chosen.append(e)
                yield from rec()
                chosen.pop()
                covered[w] = 0
        covered[u] = 0

    yield from rec()


def _is_2connected_cubic(g: Graph) -> bool:
    """Connected, cubic, and free of cutvertices (theta-style 2-vertex graphs count)."""
    if g.vertex_count < 2 or not degree_profile(g).is_cubic:
        return False
    if not is_connected(g):
        return False
    adj = g.neighbor_lists()
    return all(
        _connected_without(adj, g.vertex_count, frozenset((v,)))
        for v in range(g.vertex_count)
    )


def enumerate_cprs(g: Graph, matching_limit: int | None = None) -> list[Walk]:
    """All CPRS walks of a 2-connected cubic graph, up to rotation and reversal.

    Exhausts perfect matchings and solo-cycle orientations, traces each
    candidate, and validates every success independently.  Walks are
    deduplicated by canonical form and returned in canonical order; an
    empty list means no Chinese postman walk is realizable as a face.
    """
    if not degree_profile(g).is_cubic:
        raise ValueError("enumerate_cprs requires a cubic graph")
    if not _is_2connected_cubic(g):
        raise ValueError("enumerate_cprs requires a 2-connected graph")
    found: dict[tuple[int, ...], Walk] = {}
    for matching in perfect_matchings(g, matching_limit):
        cycles = solo_cycles(g, matching)
        for bits in product((False, True), repeat=len(cycles)):
            result = cprs_trace(g, CprsCandidate(matching, bits))
            if isinstance(result, TraceFailure):
                continue
            report = validate_walk(g, result)
            if not (
                report.edge_spanning
                and report.orientable
                and report.rotation_compatible
                and report.double_edges == matching
                and len(result) == 2 * g.vertex_count
            ):
                raise AssertionError("traced candidate failed independent validation")
            found.setdefault(canonical_form(result), result)
    return [found[key] for key in sorted(found)]


def hamilton_cycle(g: Graph) -> tuple[int, ...] | None:
    """A hamilton cycle as a vertex sequence, or None (exact backtracking).

    Prunes on connectivity of the unvisited region and on unvisited
    vertices running out of usable neighbors.
    """
    if not degree_profile(g).is_simple:
        raise ValueError("hamilton_cycle requires a simple graph")
    n = g.vertex_count
    if n < 3:
        return None
    adj = [set(lst) for lst in g.neighbor_lists()]
    order = g.neighbor_lists()
    visited = bytearray(n)
    path = [0]
    visited[0] = 1

    def feasible(cur: int) -> bool:
        unvisited = [v for v in range(n) if not visited[v]]
        if not unvisited:
            return True
        allowed = set(unvisited)
        allowed.add(cur)
        allowed.add(0)
        seen = {cur}
        stack = [cur]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if any(v not in seen for v in unvisited) or 0 not in seen:
            return False
        for v in unvisited:
            free = sum(1 for w in adj[v] if not visited[w])
            if cur in adj[v]:
                free += 1
            if 0 in adj[v]:
                free += 1
            if free < 2:
                return False
        return True

    def extend() -> bool:
        cur = path[-1]
        if len(path) == n:
            return 0 in adj[cur]
        if not feasible(cur):
            return False
        for w in order[cur]:
            if not visited[w]:
                visited[w] = 1
                path.append(w)
                if extend():
                    return True
                path.pop()
                visited[w] = 0
        return False

    if extend():
        return tuple(path)
    return None
