"""Gadget constructions tying hamilton cycles to shortest-postman face walks.

Three staged builders transform a 3-connected cubic planar simple graph N:

* ``build_P`` replaces every edge by a seven-edge diamond gadget (a 4-cycle
  on new vertices a(uv), d(uv), a(vu), d(vu) plus a chord and two
  connectors), giving a 2-connected cubic planar simple graph whose CPRS
  walks encode hamilton cycles of N.
* ``build_Q`` subdivides each a-d gadget edge into a path a-b-c-d and adds
  one bracing edge c(uv)-b(vw) per subdivision, where w is the clockwise
  neighbor of u around v; this restores 3-connectedness.
* ``build_R`` replaces every b vertex by a 19-vertex vertex gadget B (two
  mirrored 9-vertex ladder gadgets A joined through a new vertex q), which
  forces CPRS walks of R to project back onto CPRS walks of P.

All plane rotations are produced by local surgery on the input embedding,
with each diamond 4-cycle oriented clockwise under the face-tracing
convention of :mod:`edgeouter.embedding`; the builders assert genus 0.
Walk translators implement both directions of the reductions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .embedding import (
    Embedding,
    clockwise_neighbor,
    counterclockwise_neighbor,
    genus,
    make_embedding,
)
from .multigraph import (
    Graph,
    build_graph,
    dart_edge,
    degree_profile,
    opposite,
    vertex_connectivity_at_least,
)
from .walks import Walk, validate_walk

STUB = "*"


def _a(u: int, v: int) -> str:
    return f"a({u},{v})"


def _d(u: int, v: int) -> str:
    return f"d({u},{v})"


def _b(u: int, v: int) -> str:
    return f"b({u},{v})"


def _c(u: int, v: int) -> str:
    return f"c({u},{v})"


def _edge_key(n1: str, n2: str) -> str:
    return f"{n1}|{n2}" if n1 < n2 else f"{n2}|{n1}"


@dataclass(frozen=True, eq=False)
class GadgetMap:
    """Name tables linking structured vertex names to a constructed graph.

    Names survive across stages (a(0,1) means the same attachment corner
    in P, Q and R), so walks translate between stages by name without any
    isomorphism tests.  ``parent`` links each stage to the one it was
    built from.
    """

    stage: str
    source: str
    graph: Graph
    vertex_names: dict[str, int]
    edge_names: dict[str, int]
    parent: "GadgetMap | None" = None

    @cached_property
    def names_by_id(self) -> dict[int, str]:
        return {i: name for name, i in self.vertex_names.items()}

    def vertex(self, name: str) -> int:
        return self.vertex_names[name]

    def edge(self, n1: str, n2: str) -> int:
        return self.edge_names[_edge_key(n1, n2)]

    def dart(self, frm: str, to: str) -> int:
        """Dart of edge frm-to sitting at ``frm``."""
        eid = self.edge(frm, to)
        return 2 * eid + (0 if self.graph.edges[eid][0] == self.vertex_names[frm] else 1)

    def darts_along(self, names: list[str] | tuple[str, ...], closed: bool = False) -> tuple[int, ...]:
        k = len(names)
        last = k if closed else k - 1
        return tuple(self.dart(names[i], names[(i + 1) % k]) for i in range(last))


class _PlaneBuilder:
    """Accumulates a simple graph plus clockwise rotations given by neighbor names."""

    def __init__(self) -> None:
        self._ids: dict[str, int] = {}
        self._edges: list[tuple[str, str]] = []
        self._rot: dict[str, tuple[str, ...]] = {}

    def add_vertex(self, name: str) -> None:
        if name in self._ids:
            raise ValueError(f"duplicate vertex name {name}")
        self._ids[name] = len(self._ids)

    def add_edge(self, n1: str, n2: str) -> None:
        self._edges.append((n1, n2))

    def set_rotation(self, name: str, neighbors: tuple[str, ...] | list[str]) -> None:
        self._rot[name] = tuple(neighbors)

    def finish(self, stage: str, source: str, parent: GadgetMap | None = None):
        edge_ids = {}
        pairs = []
        for eid, (n1, n2) in enumerate(self._edges):
            key = _edge_key(n1, n2)
            if key in edge_ids:
                raise ValueError(f"duplicate edge {key}")
            edge_ids[key] = eid
            pairs.append((self._ids[n1], self._ids[n2]))
        graph = build_graph(len(self._ids), pairs)
        gm = GadgetMap(stage, source, graph, dict(self._ids), edge_ids, parent)
        rotation: list[tuple[int, ...]] = [()] * len(self._ids)
        for name, vid in self._ids.items():
            nbrs = self._rot[name]
            rotation[vid] = tuple(gm.dart(name, w) for w in nbrs)
        emb = make_embedding(graph, rotation)
        return graph, emb, gm


def _source_label(n: Graph) -> str:
    return f"N[{n.vertex_count}v,{n.edge_count}e]"


def _check_seed(n: Graph, emb_n: Embedding) -> None:
    if emb_n.graph != n:
        raise ValueError("embedding belongs to a different graph")
    profile = degree_profile(n)
    if not profile.is_cubic or not profile.is_simple:
        raise ValueError("seed graph must be cubic and simple")
    if not vertex_connectivity_at_least(n, 3):
        raise ValueError("seed graph must be 3-connected")
    if genus(emb_n) != 0:
        raise ValueError("seed embedding must have genus 0")


def build_P(n: Graph, emb_n: Embedding) -> tuple[Graph, Embedding, GadgetMap]:
    """Edge-substitution stage: one diamond gadget per edge of N.

    Per edge uv the gadget holds the 4-cycle (a(uv) d(uv) a(vu) d(vu)),
    the chord d(uv)-d(vu), and connectors u-a(uv), v-a(vu).  The returned
    plane rotation draws every 4-cycle clockwise, which the bracing rule
    of :func:`build_Q` relies on.
    """
    _check_seed(n, emb_n)
    b = _PlaneBuilder()
    for u in range(n.vertex_count):
        b.add_vertex(str(u))
    for u, v in n.edges:
        auv, duv, avu, dvu = _a(u, v), _d(u, v), _a(v, u), _d(v, u)
        for name in (auv, duv, avu, dvu):
            b.add_vertex(name)
        b.add_edge(str(u), auv)
        b.add_edge(str(v), avu)
        b.add_edge(auv, duv)
        b.add_edge(duv, avu)
        b.add_edge(avu, dvu)
        b.add_edge(dvu, auv)
        b.add_edge(duv, dvu)
        b.set_rotation(auv, (str(u), duv, dvu))
        b.set_rotation(duv, (auv, avu, dvu))
        b.set_rotation(avu, (str(v), dvu, duv))
        b.set_rotation(dvu, (auv, duv, avu))
    for u in range(n.vertex_count):
        b.set_rotation(str(u), tuple(_a(u, n.head(dt)) for dt in emb_n.rotation[u]))
    graph, emb, gm = b.finish("P", _source_label(n))
    if genus(emb) != 0:
        raise AssertionError("edge-substitution surgery lost planarity")
    return graph, emb, gm


def build_Q(n: Graph, emb_n: Embedding) -> tuple[Graph, Embedding, GadgetMap]:
    """Subdivision-plus-bracing stage on top of :func:`build_P`.

    Each gadget edge a(uv)-d(uv) becomes a path a(uv) b(uv) c(uv) d(uv),
    and c(uv) is braced to b(vw) where w is the clockwise neighbor of u
    around v in the seed embedding.  The braces hug the seed faces, so the
    extended rotation stays plane.
    """
    _, _, p_map = build_P(n, emb_n)
    b = _PlaneBuilder()
    for u in range(n.vertex_count):
        b.add_vertex(str(u))
    ordered = [(u, v) for u, v in n.edges] + [(v, u) for u, v in n.edges]
    for u, v in n.edges:
        for x, y in ((u, v), (v, u)):
            for name in (_a(x, y), _b(x, y), _c(x, y), _d(x, y)):
                b.add_vertex(name)
        for x, y in ((u, v), (v, u)):
            b.add_edge(str(x), _a(x, y))
            b.add_edge(_a(x, y), _b(x, y))
            b.add_edge(_b(x, y), _c(x, y))
            b.add_edge(_c(x, y), _d(x, y))
        b.add_edge(_d(u, v), _a(v, u))
        b.add_edge(_d(v, u), _a(u, v))
        b.add_edge(_d(u, v), _d(v, u))
    for x, y in ordered:
        w = clockwise_neighbor(emb_n, y, x)
        b.add_edge(_c(x, y), _b(y, w))
    for x, y in ordered:
        t = counterclockwise_neighbor(emb_n, x, y)
        w = clockwise_neighbor(emb_n, y, x)
        b.set_rotation(_a(x, y), (str(x), _b(x, y), _d(y, x)))
        b.set_rotation(_b(x, y), (_a(x, y), _c(t, x), _c(x, y)))
        b.set_rotation(_c(x, y), (_b(x, y), _b(y, w), _d(x, y)))
        b.set_rotation(_d(x, y), (_c(x, y), _a(y, x), _d(y, x)))
    for u in range(n.vertex_count):
        b.set_rotation(str(u), tuple(_a(u, n.head(dt)) for dt in emb_n.rotation[u]))
    graph, emb, gm = b.finish("Q", _source_label(n), parent=p_map)
    if genus(emb) != 0:
        raise AssertionError("bracing surgery lost planarity")
    return graph, emb, gm


# ---------------------------------------------------------------------------
# Vertex gadgets A and B
#
# A is a triangular ladder: triangle (p x1 y1), rails x1..x4 and y1..y4,
# rungs x_i y_i.  Its degree-2 vertices p, x4, y4 are the attachment
# points.  B glues A to a mirrored copy A' through x4-x4' and a new vertex
# q adjacent to y4 and y4'; its attachment points are p, q, p'.
# ---------------------------------------------------------------------------

_A_VERTICES = ("p", "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4")

_A_EDGES = (
    ("p", "x1"),
    ("p", "y1"),
    ("x1", "y1"),
    ("x1", "x2"),
    ("y1", "y2"),
    ("x2", "y2"),
    ("x2", "x3"),
    ("y2", "y3"),
    ("x3", "y3"),
    ("x3", "x4"),
    ("y3", "y4"),
    ("x4", "y4"),
)

_A_ROTATIONS = {
    "p": (STUB, "x1", "y1"),
    "x1": ("p", "x2", "y1"),
    "y1": ("p", "x1", "y2"),
    "x2": ("x1", "x3", "y2"),
    "y2": ("y1", "x2", "y3"),
    "x3": ("x2", "x4", "y3"),
    "y3": ("y2", "x3", "y4"),
    "x4": ("x3", STUB, "y4"),
    "y4": ("y3", "x4", STUB),
}

_A_BOUNDARY = ("p", "x4", "y4")


def _primed(name: str) -> str:
    return name + "'"


_B_VERTICES = _A_VERTICES + tuple(_primed(x) for x in _A_VERTICES) + ("q",)

_B_EDGES = (
    _A_EDGES
    + tuple((_primed(x), _primed(y)) for x, y in _A_EDGES)
    + (("x4", "x4'"), ("y4", "q"), ("y4'", "q"))
)

# Mirror image of the natural side-by-side drawing, so that the attachment
# points appear in clockwise order (p, q, p'); that matches the rotation of
# the b vertices the copies replace in build_R.
_B_ROTATIONS = {
    "p": ("y1", "x1", STUB),
    "x1": ("y1", "x2", "p"),
    "y1": ("y2", "x1", "p"),
    "x2": ("y2", "x3", "x1"),
    "y2": ("y3", "x2", "y1"),
    "x3": ("y3", "x4", "x2"),
    "y3": ("y4", "x3", "y2"),
    "x4": ("y4", "x4'", "x3"),
    "y4": ("q", "x4", "y3"),
    "q": ("y4'", "y4", STUB),
    "y4'": ("x4'", "q", "y3'"),
    "x4'": ("x4", "y4'", "x3'"),
    "x3'": ("x4'", "y3'", "x2'"),
    "y3'": ("x3'", "y4'", "y2'"),
    "x2'": ("x3'", "y2'", "x1'"),
    "y2'": ("x2'", "y3'", "y1'"),
    "x1'": ("x2'", "y1'", "p'"),
    "y1'": ("x1'", "y2'", "p'"),
    "p'": ("x1'", "y1'", STUB),
}

_B_BOUNDARY = ("p", "q", "p'")


@dataclass(frozen=True)
class Fragment:
    """A gadget with dangling attachment slots.

    ``rotation_names`` gives clockwise neighbor orders with ``STUB``
    marking where an external edge attaches; ``boundary`` lists the
    attachment vertices in clockwise order around the gadget.
    """

    name: str
    graph: Graph
    vertex_names: dict[str, int]
    boundary: tuple[str, ...]
    rotation_names: dict[str, tuple[str, ...]]


def _fragment(name, vertices, edges, rotations, boundary) -> Fragment:
    ids = {v: i for i, v in enumerate(vertices)}
    graph = build_graph(len(vertices), [(ids[x], ids[y]) for x, y in edges])
    return Fragment(name, graph, ids, boundary, dict(rotations))


def build_A() -> Fragment:
    """The 9-vertex ladder gadget with attachment points p, x4, y4."""
    return _fragment("A", _A_VERTICES, _A_EDGES, _A_ROTATIONS, _A_BOUNDARY)


def build_B() -> Fragment:
    """The 19-vertex gadget B = A + mirrored A' + q, attachments p, q, p'."""
    return _fragment("B", _B_VERTICES, _B_EDGES, _B_ROTATIONS, _B_BOUNDARY)


def cubic_completion(frag: Fragment) -> tuple[Graph, Embedding, GadgetMap]:
    """Close a vertex gadget with one apex joined to its attachment points."""
    b = _PlaneBuilder()
    for name in frag.vertex_names:
        b.add_vertex(name)
    b.add_vertex("apex")
    order = sorted(frag.vertex_names, key=frag.vertex_names.get)
    edge_pairs = [(order[x], order[y]) for x, y in frag.graph.edges]
    for n1, n2 in edge_pairs:
        b.add_edge(n1, n2)
    for name in frag.boundary:
        b.add_edge(name, "apex")
    for name, rot in frag.rotation_names.items():
        b.set_rotation(name, tuple("apex" if x == STUB else x for x in rot))
    b.set_rotation("apex", tuple(reversed(frag.boundary)))
    return b.finish(frag.name + "+", frag.name)


def build_R(n: Graph, emb_n: Embedding) -> tuple[Graph, Embedding, GadgetMap]:
    """Vertex-replacement stage: every b vertex of Q becomes a copy of B.

    The copy B_uv attaches through a(uv)-p(uv), q(uv)-c(tu) (the brace
    that used to reach b(uv)) and p'(uv)-c(uv).
    """
    _, _, q_map = build_Q(n, emb_n)
    b = _PlaneBuilder()
    for u in range(n.vertex_count):
        b.add_vertex(str(u))
    ordered = [(u, v) for u, v in n.edges] + [(v, u) for u, v in n.edges]

    def copy_name(local: str, x: int, y: int) -> str:
        return f"{local[:-1]}'({x},{y})" if local.endswith("'") else f"{local}({x},{y})"

    for u, v in n.edges:
        for x, y in ((u, v), (v, u)):
            for name in (_a(x, y), _c(x, y), _d(x, y)):
                b.add_vertex(name)
            for local in _B_VERTICES:
                b.add_vertex(copy_name(local, x, y))
        for x, y in ((u, v), (v, u)):
            b.add_edge(str(x), _a(x, y))
            b.add_edge(_a(x, y), copy_name("p", x, y))
            for e1, e2 in _B_EDGES:
                b.add_edge(copy_name(e1, x, y), copy_name(e2, x, y))
            b.add_edge(copy_name("p'", x, y), _c(x, y))
            b.add_edge(_c(x, y), _d(x, y))
        b.add_edge(_d(u, v), _a(v, u))
        b.add_edge(_d(v, u), _a(u, v))
        b.add_edge(_d(u, v), _d(v, u))
    for x, y in ordered:
        w = clockwise_neighbor(emb_n, y, x)
        b.add_edge(_c(x, y), copy_name("q", y, w))
    for x, y in ordered:
        t = counterclockwise_neighbor(emb_n, x, y)
        w = clockwise_neighbor(emb_n, y, x)
        b.set_rotation(_a(x, y), (str(x), copy_name("p", x, y), _d(y, x)))
        b.set_rotation(_c(x, y), (copy_name("p'", x, y), copy_name("q", y, w), _d(x, y)))
        b.set_rotation(_d(x, y), (_c(x, y), _a(y, x), _d(y, x)))
        stubs = {
            "p": _a(x, y),
            "q": _c(t, x),
            "p'": _c(x, y),
        }
        for local, rot in _B_ROTATIONS.items():
            full = tuple(
                stubs[local] if nb == STUB else copy_name(nb, x, y) for nb in rot
            )
            b.set_rotation(copy_name(local, x, y), full)
    for u in range(n.vertex_count):
        b.set_rotation(str(u), tuple(_a(u, n.head(dt)) for dt in emb_n.rotation[u]))
    graph, emb, gm = b.finish("R", _source_label(n), parent=q_map)
    if genus(emb) != 0:
        raise AssertionError("vertex-replacement surgery lost planarity")
    return graph, emb, gm


def verify_stage(stage: str, g: Graph, emb: Embedding) -> dict[str, object]:
    """Mechanical validity checks for a constructed stage."""
    profile = degree_profile(g)
    checks: dict[str, object] = {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "cubic": profile.is_cubic,
        "simple": profile.is_simple,
        "planar": genus(emb) == 0,
        "connected2": vertex_connectivity_at_least(g, 2),
        "connected3": vertex_connectivity_at_least(g, 3),
    }
    expected3 = stage.upper() != "P"
    checks["ok"] = bool(
        checks["cubic"]
        and checks["simple"]
        and checks["planar"]
        and checks["connected2"]
        and checks["connected3"] == expected3
    )
    return checks


# ---------------------------------------------------------------------------
# Forced passage shapes through the P gadgets and translators
# ---------------------------------------------------------------------------


def _w1_names(u: int, v: int, swapped: bool = False) -> tuple[str, ...]:
    duv, dvu = (_d(v, u), _d(u, v)) if swapped else (_d(u, v), _d(v, u))
    return (str(u), _a(u, v), duv, _a(v, u), dvu, duv, _a(u, v), dvu, _a(v, u), str(v))


def _w2_names(u: int, v: int) -> tuple[str, ...]:
    return (str(u), _a(u, v), _d(u, v), _d(v, u), _a(u, v), str(u))


def _rev_darts(darts: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(opposite(d) for d in reversed(darts))


@dataclass(frozen=True)
class PassageForm:
    """How a CPRS walk traverses one diamond gadget.

    Form "a" is the single through-walk (doubling two gadget edges), form
    "b" the pair of closed detours from u and from v (doubling the chord
    and both connectors).  ``runs`` are (start, length) slices of the
    classified walk, cyclic indices.
    """

    edge: tuple[int, int]
    form: str
    is_reversed: bool
    is_swapped: bool
    runs: tuple[tuple[int, int], ...]


def _is_perfect_matching(g: Graph, edge_ids: frozenset[int]) -> bool:
    covered = set()
    for e in edge_ids:
        u, v = g.edges[e]
        if u == v or u in covered or v in covered:
            return False
        covered.add(u)
        covered.add(v)
    return len(covered) == g.vertex_count


def check_cprs_cubic(g: Graph, w: Walk) -> None:
    """Raise unless ``w`` is a CPRS walk of the 2-connected cubic graph ``g``."""
    report = validate_walk(g, w)
    if not (report.edge_spanning and report.orientable and report.rotation_compatible):
        raise ValueError("walk is not a reporter strand walk")
    if not _is_perfect_matching(g, report.double_edges):
        raise ValueError("double edges do not form a perfect matching")
    if len(w) != 2 * g.vertex_count:
        raise ValueError("walk is longer than a Chinese postman walk")


def _seed_edges(gmap: GadgetMap) -> list[tuple[int, int]]:
    pairs = set()
    pattern = re.compile(r"a\((\d+),(\d+)\)$")
    for name in gmap.vertex_names:
        m = pattern.match(name)
        if m:
            pairs.add((int(m.group(1)), int(m.group(2))))
    return sorted((u, v) for u, v in pairs if u < v and (v, u) in pairs)


def _gadget_runs(w: Walk, gadget_edges: set[int]) -> list[tuple[int, int]]:
    k = len(w.darts)
    inside = [dart_edge(d) in gadget_edges for d in w.darts]
    if all(inside):
        raise ValueError("walk never leaves the gadget")
    starts = [i for i in range(k) if inside[i] and not inside[i - 1]]
    runs = []
    for s in starts:
        length = 0
        while inside[(s + length) % k]:
            length += 1
        runs.append((s, length))
    return runs


def _run_darts(w: Walk, run: tuple[int, int]) -> tuple[int, ...]:
    s, length = run
    k = len(w.darts)
    return tuple(w.darts[(s + i) % k] for i in range(length))


def classify_P_passages(p: Graph, gmap: GadgetMap, w: Walk) -> list[PassageForm]:
    """Match a CPRS walk of P against the forced gadget passage shapes.

    Every genuine CPRS walk decomposes, per gadget, into the single-walk
    form or the two-detour form up to the chord-swapping automorphism and
    reversal; anything else raises.
    """
    if p != gmap.graph:
        raise ValueError("graph does not match the gadget map")
    check_cprs_cubic(p, w)
    forms = []
    for u, v in _seed_edges(gmap):
        auv, duv, avu, dvu = _a(u, v), _d(u, v), _a(v, u), _d(v, u)
        gadget_edges = {
            gmap.edge(str(u), auv),
            gmap.edge(str(v), avu),
            gmap.edge(auv, duv),
            gmap.edge(duv, avu),
            gmap.edge(avu, dvu),
            gmap.edge(dvu, auv),
            gmap.edge(duv, dvu),
        }
        runs = _gadget_runs(w, gadget_edges)
        matched = _match_passage(gmap, w, u, v, runs)
        if matched is None:
            raise ValueError(f"passage through gadget ({u},{v}) fits no forced form")
        forms.append(matched)
    return forms


def _match_passage(gmap, w, u, v, runs) -> PassageForm | None:
    if len(runs) == 1:
        run = _run_darts(w, runs[0])
        for swapped in (False, True):
            t = gmap.darts_along(_w1_names(u, v, swapped))
            if run == t:
                return PassageForm((u, v), "a", False, swapped, tuple(runs))
            if run == _rev_darts(t):
                return PassageForm((u, v), "a", True, swapped, tuple(runs))
        return None
    if len(runs) == 2:
        t_uv = gmap.darts_along(_w2_names(u, v))
        t_vu = gmap.darts_along(_w2_names(v, u))
        got = {_run_darts(w, r) for r in runs}
        if got == {t_uv, t_vu}:
            return PassageForm((u, v), "b", False, False, tuple(runs))
        if got == {_rev_darts(t_uv), _rev_darts(t_vu)}:
            return PassageForm((u, v), "b", True, False, tuple(runs))
        return None
    return None


def normalize_P_walk(gmap: GadgetMap, w: Walk) -> Walk:
    """Rewrite form-"a" passages so every a(uv)-d(uv) edge becomes solo.

    Applies the chord-swapping automorphism to each unswapped single-walk
    passage; the result is still a CPRS walk and is the shape the lift to
    R requires.
    """
    forms = classify_P_passages(gmap.graph, gmap, w)
    darts = list(w.darts)
    k = len(darts)
    for pf in forms:
        if pf.form != "a" or pf.is_swapped:
            continue
        u, v = pf.edge
        replacement = gmap.darts_along(_w1_names(u, v, swapped=True))
        if pf.is_reversed:
            replacement = _rev_darts(replacement)
        start, length = pf.runs[0]
        for i in range(length):
            darts[(start + i) % k] = replacement[i]
    result = Walk(tuple(darts))
    check_cprs_cubic(gmap.graph, result)
    return result


def hamilton_to_cprs_P(n: Graph, gmap: GadgetMap, cycle: tuple[int, ...]) -> Walk:
    """CPRS walk of P encoding a hamilton cycle of N.

    Cycle edges become single through-walks; at each vertex the one
    non-cycle edge contributes a closed detour spliced in between arrival
    and departure.
    """
    if gmap.stage != "P":
        raise ValueError("expected the gadget map of stage P")
    k = n.vertex_count
    if len(cycle) != k or len(set(cycle)) != k or k < 3:
        raise ValueError("not a hamilton cycle: wrong vertex set")
    nbrs = [set(lst) for lst in n.neighbor_lists()]
    for i, u in enumerate(cycle):
        if cycle[(i + 1) % k] not in nbrs[u]:
            raise ValueError("not a hamilton cycle: consecutive vertices not adjacent")
    darts: list[int] = []
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % k]
        t = cycle[i - 1]
        others = nbrs[u] - {v, t}
        if len(others) != 1:
            raise ValueError("seed graph is not cubic along the cycle")
        (w_u,) = others
        darts.extend(gmap.darts_along(_w2_names(u, w_u)))
        darts.extend(gmap.darts_along(_w1_names(u, v)))
    walk = Walk(tuple(darts))
    check_cprs_cubic(gmap.graph, walk)
    return walk


def cprs_P_to_hamilton(n: Graph, gmap: GadgetMap, w: Walk) -> tuple[int, ...]:
    """Hamilton cycle of N read off a CPRS walk of P.

    Single-walk passages mark the cycle edges; detour passages are the
    chords.  Starts at vertex 0 toward its smaller cycle neighbor.
    """
    forms = classify_P_passages(gmap.graph, gmap, w)
    cycle_nbrs: list[list[int]] = [[] for _ in range(n.vertex_count)]
    for pf in forms:
        if pf.form == "a":
            u, v = pf.edge
            cycle_nbrs[u].append(v)
            cycle_nbrs[v].append(u)
    if any(len(lst) != 2 for lst in cycle_nbrs):
        raise ValueError("single-walk passages do not form a 2-factor")
    cycle = [0, min(cycle_nbrs[0])]
    while len(cycle) < n.vertex_count:
        a, b = cycle_nbrs[cycle[-1]]
        cycle.append(a if a != cycle[-2] else b)
    if cycle[0] not in cycle_nbrs[cycle[-1]] or len(set(cycle)) != n.vertex_count:
        raise ValueError("single-walk passages do not form a hamilton cycle")
    return tuple(cycle)


# ---------------------------------------------------------------------------
# Lifting between P and R
# ---------------------------------------------------------------------------

_B_W1 = ("p", "x1", "x2", "x3", "x4", "x4'", "x3'", "x2'", "x1'", "p'")

_B_W2 = (
    ("q",)
    + tuple(_primed(x) for x in reversed(("x4", "y4", "y3", "x3", "x2", "y2", "y1", "x1", "p", "y1", "y2", "y3", "y4")))
    + ("x4", "y4", "y3", "x3", "x2", "y2", "y1", "x1", "p", "y1", "y2", "y3", "y4", "q")
)


def forced_bplus_walk(gm: GadgetMap) -> Walk:
    """The unique CPRS walk of the cubic completion of gadget B."""
    names = ("apex",) + _B_W1 + ("apex",) + _B_W2
    return Walk(gm.darts_along(names, closed=True))


def _p_map_of(r_map: GadgetMap) -> GadgetMap:
    gm = r_map
    while gm is not None and gm.stage != "P":
        gm = gm.parent
    if gm is None:
        raise ValueError("gadget map carries no stage-P parent")
    return gm


def _copy_names(u: int, v: int, walk: tuple[str, ...]) -> list[str]:
    return [
        f"{x[:-1]}'({u},{v})" if x.endswith("'") else f"{x}({u},{v})" for x in walk
    ]


def _brace_targets(r_map: GadgetMap) -> dict[tuple[int, int], tuple[int, int]]:
    """For each ordered pair (u, v), the copy (v, w) braced from c(uv)."""
    g = r_map.graph
    names = r_map.names_by_id
    targets = {}
    pattern = re.compile(r"q\((\d+),(\d+)\)$")
    for name, vid in r_map.vertex_names.items():
        m = re.match(r"c\((\d+),(\d+)\)$", name)
        if not m:
            continue
        u, v = int(m.group(1)), int(m.group(2))
        for d in g.incidence[vid]:
            qm = pattern.match(names[g.head(d)])
            if qm:
                targets[(u, v)] = (int(qm.group(1)), int(qm.group(2)))
    return targets


def _t_walk_names(u: int, v: int, w: int, dir_uv: bool, dir_vw: bool) -> list[str]:
    """Vertex-name path replacing a traversal of a(uv)-d(uv) inside R."""
    b1 = _copy_names(u, v, _B_W1)
    b2 = _copy_names(v, w, _B_W2)
    if not dir_vw:
        b2 = b2[::-1]
    cuv = _c(u, v)
    if dir_uv:
        return [_a(u, v)] + b1 + [cuv] + b2 + [cuv, _d(u, v)]
    return [_d(u, v), cuv] + b2 + [cuv] + b1[::-1] + [_a(u, v)]


def lift_P_to_R(r_map: GadgetMap, w: Walk) -> Walk:
    """Translate a CPRS walk of P (all a-d edges solo) into one of R.

    Every traversal of an a(uv)-d(uv) edge is replaced by the forced tour
    through B_uv and around the braced copy B_vw; all other darts map
    across by endpoint names.
    """
    p_map = _p_map_of(r_map)
    p = p_map.graph
    check_cprs_cubic(p, w)
    braces = _brace_targets(r_map)
    directions: dict[tuple[int, int], bool] = {}
    ad_darts: dict[int, tuple[int, int, bool]] = {}
    for u, v in braces:
        fwd = p_map.dart(_a(u, v), _d(u, v))
        uses_fwd = w.darts.count(fwd)
        uses_rev = w.darts.count(opposite(fwd))
        if uses_fwd + uses_rev != 1:
            raise ValueError(f"edge a({u},{v})-d({u},{v}) is not solo; normalize first")
        directions[(u, v)] = uses_fwd == 1
        ad_darts[fwd] = (u, v, True)
        ad_darts[opposite(fwd)] = (u, v, False)
    p_names = p_map.names_by_id
    out: list[int] = []
    for d in w.darts:
        hit = ad_darts.get(d)
        if hit is None:
            out.append(r_map.dart(p_names[p.endpoint(d)], p_names[p.head(d)]))
            continue
        u, v, forward = hit
        vw = braces[(u, v)]
        path = _t_walk_names(u, v, vw[1], forward, directions[vw])
        out.extend(r_map.darts_along(path))
    lifted = Walk(tuple(out))
    check_cprs_cubic(r_map.graph, lifted)
    return lifted


def project_R_to_P(r_map: GadgetMap, w: Walk) -> Walk:
    """Collapse a CPRS walk of R back onto P, making every a-d edge solo.

    Darts on surviving P edges map across by name; every maximal run of
    gadget darts must match one of the four forced tours and contracts to
    a single a(uv)-d(uv) traversal.
    """
    p_map = _p_map_of(r_map)
    p, r = p_map.graph, r_map.graph
    check_cprs_cubic(r, w)
    r_names = r_map.names_by_id
    survivors: dict[int, int] = {}
    for eid, (x, y) in enumerate(r.edges):
        nx, ny = r_names[x], r_names[y]
        if (
            nx in p_map.vertex_names
            and ny in p_map.vertex_names
            and _edge_key(nx, ny) in p_map.edge_names
        ):
            survivors[2 * eid] = p_map.dart(nx, ny)
            survivors[2 * eid + 1] = p_map.dart(ny, nx)
    braces = _brace_targets(r_map)
    start = next(i for i, d in enumerate(w.darts) if d in survivors)
    seq = w.darts[start:] + w.darts[:start]
    out: list[int] = []
    i = 0
    name_pat = re.compile(r"([ad])\((\d+),(\d+)\)$")
    while i < len(seq):
        d = seq[i]
        if d in survivors:
            out.append(survivors[d])
            i += 1
            continue
        j = i
        while j < len(seq) and seq[j] not in survivors:
            j += 1
        run = seq[i:j]
        m = name_pat.match(r_names[r.endpoint(run[0])])
        if not m:
            raise ValueError("gadget run does not begin at an attachment corner")
        u, v = int(m.group(2)), int(m.group(3))
        forward = m.group(1) == "a"
        vw = braces[(u, v)]
        matched = None
        for dir_vw in (True, False):
            path = _t_walk_names(u, v, vw[1], forward, dir_vw)
            if run == r_map.darts_along(path):
                matched = forward
                break
        if matched is None:
            raise ValueError(f"gadget run at B({u},{v}) fits no forced tour")
        ad = p_map.dart(_a(u, v), _d(u, v))
        out.append(ad if forward else opposite(ad))
        i = j
    projected = Walk(tuple(out))
    check_cprs_cubic(p, projected)
    return projected
