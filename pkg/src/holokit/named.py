"""Named arrangements: Fano, non-Fano, Roos, the seven-element example, braid arrangements."""
from __future__ import annotations

import re

from .errors import InputError
from .graphs import graph_arrangement
from .matroid import Graph, SetArrangement, complete_graph

FANO = ("123", "145", "167", "246", "257", "347", "356")
ROOS = ("124", "135", "236", "167", "258", "457", "468")
EXAMPLE7 = (("1", "2", "3", "4"), ("1", "5", "6"), ("2", "5", "7"), ("3", "6", "7"))

DESCRIPTIONS = {
    "fano": "Fano plane: seven triples on 1..7",
    "nonfano": "Fano plane with the triple (123) deleted",
    "roos": "seven triples on 1..8 with a one-dimensional ideal in each degree >= 3",
    "example7": "blocks {1,2,3,4}, {1,5,6}, {2,5,7}, {3,6,7} on 1..7",
    "kN": "triangles of the complete graph K_N (braid arrangement), e.g. k4 or kn(4)",
}


def _digits(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def names() -> list[str]:
    return list(DESCRIPTIONS)


def _key(name: str) -> str:
    key = name.strip().lower()
    return key[len("catalog:"):] if key.startswith("catalog:") else key


def _complete_size(key: str) -> int | None:
    m = re.fullmatch(r"k(\d+)|kn\((\d+)\)", key)
    if not m:
        return None
    n = int(m.group(1) or m.group(2))
    if n < 2:
        raise InputError("complete graphs need at least two vertices")
    return n


def catalog_graph(name: str) -> Graph | None:
    """The underlying graph for graph entries (kN), else None."""
    n = _complete_size(_key(name))
    return None if n is None else complete_graph(n)


def catalog(name: str) -> SetArrangement:
    key = _key(name)
    if key == "fano":
        return SetArrangement.from_blocks(_digits(7), [tuple(t) for t in FANO])
    if key == "nonfano":
        return SetArrangement.from_blocks(_digits(7), [tuple(t) for t in FANO if t != "123"])
    if key == "roos":
        return SetArrangement.from_blocks(_digits(8), [tuple(t) for t in ROOS])
    if key == "example7":
        return SetArrangement.from_blocks(_digits(7), EXAMPLE7)
    n = _complete_size(key)
    if n is not None:
        return graph_arrangement(complete_graph(n))
    raise InputError(f"unknown catalog name {name!r}; known: fano, nonfano, roos, example7, kN")
