"""Text formats and the command line interface.

Graph files are line oriented: a ``graph <n> <m>`` header, one
``edge <id> <u> <v>`` line per edge, and optionally one ``rot <v> <darts>``
line per vertex fixing a rotation system.  Dart tokens read
``<edge_id>.<side>``.  Walk files hold ``walk closed <k>`` followed by k
dart tokens.  Exit codes: 0 success/true, 1 false/none-exist, 2 invalid
input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import gadgets, optimal, reporter
from .embedding import Embedding, genus, identity_embedding, make_embedding, trace_faces
from .multigraph import Graph, build_graph, dart_edge, make_dart
from .walks import Walk, check_walk, validate_walk, is_reporter_strand_walk

EXIT_OK = 0
EXIT_NONE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


class GraphFormatError(ValueError):
    """Malformed graph or walk file."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def dart_token(d: int) -> str:
    return f"{d >> 1}.{d & 1}"


def parse_dart_token(token: str, line: int | None = None) -> int:
    parts = token.split(".")
    if len(parts) != 2 or not parts[0].isdigit() or parts[1] not in ("0", "1"):
        raise GraphFormatError(f"malformed dart token {token!r}", line)
    return 2 * int(parts[0]) + int(parts[1])


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped.split()


def parse_graph(text: str) -> tuple[Graph, Embedding | None]:
    """Parse a graph file, returning the graph and any stored rotation."""
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty graph file")
    lineno, header = lines[0]
    if len(header) != 3 or header[0] != "graph":
        raise GraphFormatError("expected header 'graph <n> <m>'", lineno)
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise GraphFormatError("non-integer counts in header", lineno) from None
    edges: list[tuple[int, int] | None] = [None] * m
    rot_lines: dict[int, tuple[int, ...]] = {}
    for lineno, parts in lines[1:]:
        if parts[0] == "edge":
            if len(parts) != 4:
                raise GraphFormatError("expected 'edge <id> <u> <v>'", lineno)
            try:
                eid, u, v = (int(x) for x in parts[1:])
            except ValueError:
                raise GraphFormatError("non-integer edge fields", lineno) from None
            if not 0 <= eid < m:
                raise GraphFormatError(f"edge id {eid} out of range", lineno)
            if edges[eid] is not None:
                raise GraphFormatError(f"duplicate edge id {eid}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"dangling vertex index on edge {eid}", lineno)
            edges[eid] = (u, v)
        elif parts[0] == "rot":
            if len(parts) < 2 or not parts[1].isdigit():
                raise GraphFormatError("expected 'rot <v> <dart>*'", lineno)
            v = int(parts[1])
            if v >= n or v in rot_lines:
                raise GraphFormatError(f"bad or duplicate rot vertex {v}", lineno)
            rot_lines[v] = tuple(parse_dart_token(tok, lineno) for tok in parts[2:])
        else:
            raise GraphFormatError(f"unknown directive {parts[0]!r}", lineno)
    if any(e is None for e in edges):
        missing = next(i for i, e in enumerate(edges) if e is None)
        raise GraphFormatError(f"edge id {missing} missing")
    g = build_graph(n, [e for e in edges if e is not None])
    if not rot_lines:
        return g, None
    if set(rot_lines) != set(range(n)):
        raise GraphFormatError("rot lines must cover every vertex or be absent")
    for v, rot in rot_lines.items():
        if sorted(rot) != sorted(g.incidence[v]):
            raise GraphFormatError(f"rot line for vertex {v} lists the wrong darts")
    return g, make_embedding(g, [rot_lines[v] for v in range(n)])


def _anchored(rot: tuple[int, ...]) -> tuple[int, ...]:
    if not rot:
        return rot
    i = rot.index(min(rot))
    return rot[i:] + rot[:i]


def serialize_graph(g: Graph, emb: Embedding | None = None) -> str:
    """Canonical text form: edges by id, rotations anchored at their least dart."""
    out = [f"graph {g.vertex_count} {g.edge_count}"]
    for eid, (u, v) in enumerate(g.edges):
        out.append(f"edge {eid} {u} {v}")
    if emb is not None:
        for v in range(g.vertex_count):
            tokens = " ".join(dart_token(d) for d in _anchored(emb.rotation[v]))
            out.append(f"rot {v} {tokens}".rstrip())
    return "\n".join(out) + "\n"


def parse_walk(text: str) -> Walk:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty walk file")
    lineno, header = lines[0]
    if len(header) != 3 or header[0] != "walk" or header[1] != "closed":
        raise GraphFormatError("expected header 'walk closed <k>'", lineno)
    try:
        k = int(header[2])
    except ValueError:
        raise GraphFormatError("non-integer walk length", lineno) from None
    tokens: list[int] = []
    for lineno, parts in lines[1:]:
        tokens.extend(parse_dart_token(tok, lineno) for tok in parts)
    if len(tokens) != k:
        raise GraphFormatError(f"expected {k} darts, found {len(tokens)}")
    return Walk(tuple(tokens))


def serialize_walk(w: Walk) -> str:
    header = f"walk closed {len(w.darts)}"
    return header + "\n" + " ".join(dart_token(d) for d in w.darts) + "\n"


def export_dot(g: Graph, walk: Walk | None = None, emb: Embedding | None = None) -> str:
    """Undirected DOT output; double edges of the walk are drawn bold."""
    counts: dict[int, int] = {}
    if walk is not None:
        check_walk(g, walk)
        for d in walk.darts:
            counts[dart_edge(d)] = counts.get(dart_edge(d), 0) + 1
        if any(c > 2 for c in counts.values()):
            raise ValueError("walk uses an edge more than twice")
    out = ["graph G {"]
    if emb is not None:
        for v in range(g.vertex_count):
            tokens = " ".join(dart_token(d) for d in _anchored(emb.rotation[v]))
            out.append(f"  // rot {v} {tokens}".rstrip())
    for v in range(g.vertex_count):
        out.append(f"  {v};")
    for eid, (u, v) in enumerate(g.edges):
        used = counts.get(eid)
        if walk is None:
            attrs = ""
        elif used == 2:
            attrs = ' [penwidth=2.5, label="x2"]'
        elif used == 1:
            attrs = ""
        else:
            attrs = " [style=dashed]"
        out.append(f"  {u} -- {v}{attrs};")
    out.append("}")
    return "\n".join(out) + "\n"


def _load_graph(path: str) -> tuple[Graph, Embedding | None]:
    return parse_graph(Path(path).read_text())


def _embedding_or_identity(g: Graph, emb: Embedding | None) -> Embedding:
    return emb if emb is not None else identity_embedding(g)


def _print_walk(w: Walk) -> None:
    sys.stdout.write(serialize_walk(w))


def _cmd_faces(args) -> int:
    g, emb = _load_graph(args.graph)
    emb = _embedding_or_identity(g, emb)
    faces = trace_faces(emb)
    for i, orbit in enumerate(faces.faces):
        tokens = " ".join(dart_token(d) for d in orbit)
        print(f"face {i} len {len(orbit)}: {tokens}")
    print(f"faces {len(faces.faces)}")
    print(f"genus {genus(emb)}")
    return EXIT_OK


def _cmd_rsw(args) -> int:
    g, emb = _load_graph(args.graph)
    if args.max_genus_start:
        final, _, walk = reporter.reporter_strand_walk_max_genus(g, args.budget)
    else:
        final, _, walk = reporter.reporter_strand_walk(g, _embedding_or_identity(g, emb))
    sys.stdout.write(serialize_graph(g, final))
    _print_walk(walk)
    print(f"length {len(walk)}")
    print(f"genus {genus(final)}")
    return EXIT_OK


def _cmd_cp(args) -> int:
    g, _ = _load_graph(args.graph)
    print(optimal.chinese_postman_length(g))
    return EXIT_OK


def _cmd_srs(args) -> int:
    g, _ = _load_graph(args.graph)
    length, walk, emb = optimal.exact_srs(g, args.budget)
    print(length)
    _print_walk(walk)
    sys.stdout.write(serialize_graph(g, emb))
    return EXIT_OK


def _cmd_maxgenus(args) -> int:
    g, _ = _load_graph(args.graph)
    print(optimal.max_genus_exhaustive(g, args.budget))
    return EXIT_OK


def _cmd_cprs(args) -> int:
    g, _ = _load_graph(args.graph)
    walks = optimal.enumerate_cprs(g, args.budget)
    if not walks:
        print("none")
        return EXIT_NONE
    print(f"count {len(walks)}")
    for w in walks:
        _print_walk(w)
    return EXIT_OK


def _cmd_hamilton(args) -> int:
    g, _ = _load_graph(args.graph)
    cycle = optimal.hamilton_cycle(g)
    if cycle is None:
        print("none")
        return EXIT_NONE
    print(" ".join(str(v) for v in cycle))
    return EXIT_OK


def _cmd_verify_walk(args) -> int:
    g, _ = _load_graph(args.graph)
    w = parse_walk(Path(args.walk).read_text())
    report = validate_walk(g, w)
    for field in (
        "edge_spanning",
        "edge_2_bounded",
        "orientable",
        "retraction_free",
        "rotation_compatible",
    ):
        print(f"{field} {str(getattr(report, field)).lower()}")
    print(f"solo {len(report.solo_edges)}")
    print(f"double {len(report.double_edges)}")
    rsw = report.edge_spanning and report.orientable and report.rotation_compatible
    print(f"reporter_strand_walk {str(rsw).lower()}")
    try:
        cprs = rsw and len(w) == optimal.chinese_postman_length(g)
        print(f"cprs {str(cprs).lower()}")
    except ValueError:
        print("cprs unknown")
    return EXIT_OK if rsw else EXIT_NONE


_BUILDERS = {"p": gadgets.build_P, "q": gadgets.build_Q, "r": gadgets.build_R}


def _require_rotation(emb: Embedding | None) -> Embedding:
    if emb is None:
        raise GraphFormatError("this command needs a graph file with rot lines")
    return emb


def _cmd_gadget(args) -> int:
    g, emb = _load_graph(args.graph)
    built, built_emb, gm = _BUILDERS[args.stage](g, _require_rotation(emb))
    sys.stdout.write(serialize_graph(built, built_emb))
    for name in sorted(gm.vertex_names):
        print(f"# vname {name} {gm.vertex_names[name]}")
    for key in sorted(gm.edge_names):
        print(f"# ename {key} {gm.edge_names[key]}")
    checks = gadgets.verify_stage(gm.stage, built, built_emb)
    for key, value in checks.items():
        print(f"# check {key} {str(value).lower()}")
    return EXIT_OK if checks["ok"] else EXIT_INVALID


def _cmd_reduce(args) -> int:
    n, emb = _load_graph(args.graph)
    emb = _require_rotation(emb)
    cycle = optimal.hamilton_cycle(n)
    if cycle is None:
        print("hamilton none")
        print("consequence: P, Q and R built from this seed admit no CPRS walk")
        return EXIT_NONE
    print("hamilton " + " ".join(str(v) for v in cycle))
    _, _, r_map = gadgets.build_R(n, emb)
    p_map = r_map.parent.parent
    walk_p = gadgets.hamilton_to_cprs_P(n, p_map, cycle)
    print(f"cprs-P length {len(walk_p)} valid true")
    normalized = gadgets.normalize_P_walk(p_map, walk_p)
    print(f"normalized-P length {len(normalized)} valid true")
    lifted = gadgets.lift_P_to_R(r_map, normalized)
    print(f"cprs-R length {len(lifted)} valid true")
    projected = gadgets.project_R_to_P(r_map, lifted)
    round_trip = projected.darts == normalized.darts
    print(f"projected-P length {len(projected)} matches {str(round_trip).lower()}")
    recovered = gadgets.cprs_P_to_hamilton(n, p_map, projected)
    print("recovered-hamilton " + " ".join(str(v) for v in recovered))
    return EXIT_OK if round_trip else EXIT_INVALID


def _cmd_dot(args) -> int:
    g, emb = _load_graph(args.graph)
    walk = parse_walk(Path(args.walk).read_text()) if args.walk else None
    sys.stdout.write(export_dot(g, walk, emb))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeouter",
        description="Edge-outer embeddings, reporter strand walks, exact postman solvers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("graph", help="graph file")
        return p

    add("faces", _cmd_faces, help="trace faces and report the genus")
    p = add("rsw", _cmd_rsw, help="construct a reporter strand walk by flips")
    p.add_argument("--max-genus-start", action="store_true")
    p.add_argument("--budget", type=int, default=optimal.DEFAULT_BUDGET)
    add("cp", _cmd_cp, help="Chinese postman length")
    p = add("srs", _cmd_srs, help="exact shortest reporter strand walk")
    p.add_argument("--budget", type=int, default=optimal.DEFAULT_BUDGET)
    p = add("maxgenus", _cmd_maxgenus, help="exact maximum orientable genus")
    p.add_argument("--budget", type=int, default=optimal.DEFAULT_BUDGET)
    p = add("cprs", _cmd_cprs, help="enumerate CPRS walks of a cubic graph")
    p.add_argument("--budget", type=int, default=None)
    add("hamilton", _cmd_hamilton, help="exact hamilton cycle search")
    p = add("verify-walk", _cmd_verify_walk, help="full walk report")
    p.add_argument("walk", help="walk file")
    p = sub.add_parser("gadget", help="build a hardness gadget graph")
    p.set_defaults(func=_cmd_gadget)
    p.add_argument("stage", choices=sorted(_BUILDERS))
    p.add_argument("graph", help="graph file with rot lines")
    add("reduce", _cmd_reduce, help="end-to-end hamilton-to-CPRS demo")
    p = add("dot", _cmd_dot, help="DOT export, optionally styling a walk")
    p.add_argument("--walk", default=None)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except optimal.BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphFormatError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main(argv: list[str] | None = None) -> int:
    return run(argv)
