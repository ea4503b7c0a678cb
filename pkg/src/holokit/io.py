"""Reading matroid, arrangement and graph files."""
from __future__ import annotations

import json
from pathlib import Path

from . import named as _catalog
from .errors import InputError
from .graphs import graph_arrangement
from .matroid import (
    Graph,
    Matroid,
    SetArrangement,
    TwoPartition,
    GroundSet,
    arrangement_of,
    dependent_triples_matroid,
    explicit_matroid,
    graphic_matroid,
    matroid_from_two_partition,
    matroid_of_arrangement,
)

MATROID_TYPES = ("explicit", "graphic", "dependent_triples", "two_partition")


def parse_edge_list(text: str) -> Graph:
    """One edge per line, ``u v [label]``; ``#`` starts a comment."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise InputError(f"line {lineno}: expected 'u v [label]', got {raw.strip()!r}")
        edges.append(tuple(parts))
    return Graph.from_edges(edges)


def matroid_from_json(data: dict, validate: bool = True) -> Matroid:
    kind = data.get("type")
    if kind not in MATROID_TYPES:
        raise InputError(f"matroid type must be one of {MATROID_TYPES}, got {kind!r}")
    try:
        elements = [str(e) for e in data.get("elements", [])]
        if kind == "explicit":
            return explicit_matroid(elements, data["independent"], validate=validate)
        if kind == "graphic":
            edges = [tuple(str(x) for x in e) for e in data["edges"]]
            verts = data.get("vertices")
            g = Graph.from_edges(edges, [str(v) for v in verts] if verts else None)
            if elements and list(g.edge_labels) != elements:
                raise InputError("graphic 'elements' must list the edge labels in edge order")
            return graphic_matroid(g, validate=validate)
        if kind == "dependent_triples":
            return dependent_triples_matroid(elements, data["triples"], validate=validate)
        tp = TwoPartition(GroundSet(tuple(elements)),
                          tuple(tuple(str(x) for x in b) for b in data["blocks"]))
        return matroid_from_two_partition(tp)
    except KeyError as exc:
        raise InputError(f"{kind} matroid file is missing the field {exc.args[0]!r}") from None


def _read_json(path: Path):
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError:
        return None


def _open(path: str) -> Path:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such file or catalog entry: {path!r}")
    return p


def _catalog_name(source: str) -> str | None:
    if source.startswith("catalog:"):
        return source
    try:
        _catalog.catalog(source)
    except InputError:
        return None
    return source


def load_arrangement(source: str, validate: bool = True) -> SetArrangement:
    """Catalog name, arrangement JSON, matroid JSON, or edge-list file."""
    name = _catalog_name(source)
    if name is not None:
        return _catalog.catalog(name)
    p = _open(source)
    data = _read_json(p)
    if data is None:
        return graph_arrangement(parse_edge_list(p.read_text()))
    if not isinstance(data, dict):
        raise InputError(f"{source}: expected a JSON object")
    if "type" in data:
        return arrangement_of(matroid_from_json(data, validate))
    if "blocks" in data and "elements" in data:
        return SetArrangement.from_json(data)
    raise InputError(f"{source}: neither an arrangement nor a matroid file")


def load_matroid(source: str, validate: bool = True) -> Matroid:
    """Matroid JSON, edge-list file (graphic), or a catalog arrangement (rank <= 3)."""
    name = _catalog_name(source)
    if name is not None:
        g = _catalog.catalog_graph(name)
        if g is not None:
            return graphic_matroid(g, validate=validate)
        return matroid_of_arrangement(_catalog.catalog(name))
    p = _open(source)
    data = _read_json(p)
    if data is None:
        return graphic_matroid(parse_edge_list(p.read_text()), validate=validate)
    if not isinstance(data, dict):
        raise InputError(f"{source}: expected a JSON object")
    if "type" in data:
        return matroid_from_json(data, validate)
    if "blocks" in data and "elements" in data:
        return matroid_of_arrangement(SetArrangement.from_json(data))
    raise InputError(f"{source}: neither a matroid nor an arrangement file")


def load_graph(source: str) -> Graph:
    name = _catalog_name(source)
    if name is not None and _catalog.catalog_graph(name) is not None:
        return _catalog.catalog_graph(name)
    p = _open(source)
    data = _read_json(p)
    if data is None:
        return parse_edge_list(p.read_text())
    if isinstance(data, dict) and data.get("type") == "graphic":
        verts = data.get("vertices")
        return Graph.from_edges([tuple(str(x) for x in e) for e in data["edges"]],
                                [str(v) for v in verts] if verts else None)
    raise InputError(f"{source}: expected an edge list or a graphic matroid file")
