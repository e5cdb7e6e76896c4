"""Graph and constraint file formats.

Edge-list text, one item per line:

    node u        declare a vertex (required for isolated vertices)
    u -- v        undirected edge
    u -> v        directed edge
    # ...         comment (also allowed after an item)

Vertex names are arbitrary non-whitespace tokens. The serializer declares
every vertex with a `node` line before the edges so that parse ->
serialize -> parse is the identity, including vertex order.

JSON graphs:

    {"vertices": ["a", ...],
     "edges": [{"a": "u", "b": "v", "directed": false}, ...]}

A `spec_version` field is written alongside and ignored on input.

Constraint files for prior knowledge hold one required orientation per
line, `u -> v` (plus comments), meaning the edge {u,v} may only be
oriented u -> v.
"""

from __future__ import annotations

import json

from .errors import InvalidGraphError
from .graph import MixedGraph

SPEC_VERSION = "1.0"


def parse_graph_text(text: str) -> MixedGraph:
    vertices: list[str] = []
    und = []
    dire = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "node" and len(tokens) == 2:
            vertices.append(tokens[1])
        elif len(tokens) == 3 and tokens[1] in ("--", "->"):
            a, op, b = tokens
            (und if op == "--" else dire).append((a, b))
        else:
            raise InvalidGraphError(f"line {ln}: cannot parse {raw!r}")
    return MixedGraph(vertices, undirected_edges=und, directed_edges=dire)


def serialize_graph_text(g: MixedGraph) -> str:
    lines = [f"node {v}" for v in g.vertices]
    order = {v: i for i, v in enumerate(g.vertices)}
    for a, b in sorted(g.undirected_edges, key=lambda e: (order[e[0]], order[e[1]])):
        lines.append(f"{a} -- {b}")
    for a, b in sorted(g.directed_edges, key=lambda e: (order[e[0]], order[e[1]])):
        lines.append(f"{a} -> {b}")
    return "\n".join(lines) + "\n"


def graph_to_obj(g: MixedGraph) -> dict:
    order = {v: i for i, v in enumerate(g.vertices)}
    edges = [
        {"a": a, "b": b, "directed": False}
        for a, b in sorted(g.undirected_edges, key=lambda e: (order[e[0]], order[e[1]]))
    ] + [
        {"a": a, "b": b, "directed": True}
        for a, b in sorted(g.directed_edges, key=lambda e: (order[e[0]], order[e[1]]))
    ]
    return {"vertices": list(g.vertices), "edges": edges}


def graph_from_obj(obj: dict) -> MixedGraph:
    try:
        vertices = obj["vertices"]
        edges = obj.get("edges", [])
        und = [(e["a"], e["b"]) for e in edges if not e.get("directed", False)]
        dire = [(e["a"], e["b"]) for e in edges if e.get("directed", False)]
    except (KeyError, TypeError) as exc:
        raise InvalidGraphError(f"malformed graph object: {exc}") from exc
    return MixedGraph(vertices, undirected_edges=und, directed_edges=dire)


def serialize_graph_json(g: MixedGraph) -> str:
    obj = {"spec_version": SPEC_VERSION}
    obj.update(graph_to_obj(g))
    return json.dumps(obj, indent=2) + "\n"


def parse_graph_json(text: str) -> MixedGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGraphError(f"invalid JSON: {exc}") from exc
    return graph_from_obj(obj)


def parse_graph(text: str) -> MixedGraph:
    """Auto-detect the two graph formats (JSON starts with '{')."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def load_graph(path: str) -> MixedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def parse_constraints(text: str) -> list[tuple[str, str]]:
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 3 and tokens[1] == "->":
            out.append((tokens[0], tokens[2]))
        else:
            raise InvalidGraphError(f"line {ln}: cannot parse constraint {raw!r}")
    return out


def load_constraints(path: str) -> list[tuple[str, str]]:
    with open(path, encoding="utf-8") as fh:
        return parse_constraints(fh.read())


def format_rational(x) -> str:
    """`num/den` plus a 15-significant-digit decimal rendering."""
    frac = f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return f"{frac} ({float(x):.15g})"
