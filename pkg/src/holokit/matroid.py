"""Simple matroids in several encodings.

Subsets are handled internally as integer bitmasks over the ground set
(bit ``i`` is the ``i``-th declared element).  Public functions accept any
iterable of labels and return label tuples in declaration order.

Four encodings are supported:

* ``explicit``           -- the full family of independent sets (small ground sets only)
* ``graphic``            -- the cycle matroid of a simple graph
* ``dependent_triples``  -- a rank <= 3 matroid given by its dependent 3-sets
* ``two_partition``      -- a rank <= 3 matroid given by its 2-flats
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, InvariantError

EXPLICIT_MAX_ELEMENTS = 20


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class GroundSet:
    elements: tuple[str, ...]
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        index = {}
        for i, e in enumerate(elements):
            if e in index:
                raise InputError(f"duplicate element label {e!r}")
            index[e] = i
        object.__setattr__(self, "index", index)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def mask(self, labels: Iterable) -> int:
        m = 0
        for x in labels:
            try:
                m |= 1 << self.index[str(x)]
            except KeyError:
                raise InputError(f"unknown element label {x!r}") from None
        return m

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))


def _sort_masks(masks: Iterable[int]) -> list[int]:
    return sorted(set(masks), key=lambda m: (popcount(m), bits(m)))


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    """A simple graph with labeled edges ``(u, v, label)``."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        verts = tuple(str(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise InputError("duplicate vertex label")
        vset = set(verts)
        seen_pairs = {}
        labels = set()
        edges = []
        for e in self.edges:
            if len(e) == 2:
                u, v = e
                label = f"{u}-{v}"
            else:
                u, v, label = e
            u, v, label = str(u), str(v), str(label)
            if u not in vset or v not in vset:
                raise InputError(f"edge {label!r} uses an undeclared vertex")
            if u == v:
                raise InputError(f"loop at vertex {u!r}: graphic matroid would not be simple")
            key = frozenset((u, v))
            if key in seen_pairs:
                raise InputError(
                    f"multiple edges between {u!r} and {v!r} "
                    f"({seen_pairs[key]!r}, {label!r}): graphic matroid would not be simple")
            if label in labels:
                raise InputError(f"duplicate edge label {label!r}")
            seen_pairs[key] = label
            labels.add(label)
            edges.append((u, v, label))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def from_edges(cls, pairs: Iterable[Sequence], vertices: Iterable | None = None) -> "Graph":
        """Build a graph from ``(u, v)`` or ``(u, v, label)`` tuples.

        Vertices default to the endpoints in order of first appearance.
        """
        pairs = [tuple(p) for p in pairs]
        if vertices is None:
            vs: list[str] = []
            for p in pairs:
                for x in p[:2]:
                    if str(x) not in vs:
                        vs.append(str(x))
            vertices = vs
        return cls(tuple(vertices), tuple(pairs))

    @property
    def edge_labels(self) -> tuple[str, ...]:
        return tuple(e[2] for e in self.edges)

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def edge_between(self) -> dict[frozenset, str]:
        return {frozenset((u, v)): lab for u, v, lab in self.edges}

    def subgraph(self, vertices: Iterable[str]) -> "Graph":
        keep = [v for v in self.vertices if v in set(vertices)]
        ks = set(keep)
        return Graph(tuple(keep), tuple(e for e in self.edges if e[0] in ks and e[1] in ks))


def complete_graph(n: int) -> Graph:
    verts = [str(i) for i in range(1, n + 1)]
    return Graph(tuple(verts), tuple((u, v, f"{u}-{v}") for u, v in combinations(verts, 2)))


# ---------------------------------------------------------------------------
# matroids


class Matroid:
    """Base class: a simple matroid with an independence oracle on bitmasks."""

    kind = "abstract"

    def __init__(self, ground: GroundSet):
        self.ground = ground
        self._flats: list[list[int]] | None = None

    def __repr__(self):
        return f"<{type(self).__name__} kind={self.kind} n={len(self.ground)} rank={self.rank()}>"

    def is_independent(self, mask: int) -> bool:
        raise NotImplementedError

    def basis_of(self, mask: int) -> int:
        b = 0
        for i in bits(mask):
            if self.is_independent(b | (1 << i)):
                b |= 1 << i
        return b

    def rank_mask(self, mask: int) -> int:
        return popcount(self.basis_of(mask))

    def closure_mask(self, mask: int) -> int:
        b = self.basis_of(mask)
        closed = mask | b
        for i in range(len(self.ground)):
            bit = 1 << i
            if not closed & bit and not self.is_independent(b | bit):
                closed |= bit
        return closed

    def rank(self, subset: Iterable | None = None) -> int:
        if subset is None:
            return self.rank_mask(self.ground.full)
        return self.rank_mask(self.ground.mask(subset))

    def closure(self, subset: Iterable) -> tuple[str, ...]:
        return self.ground.labels(self.closure_mask(self.ground.mask(subset)))

    def flat_masks(self, k: int) -> list[int]:
        """All k-flats as bitmasks, built upward by closing F + x."""
        if self._flats is None:
            self._flats = [[self.closure_mask(0)]]
        top = self.rank()
        if k < 0 or k > top:
            return []
        n = len(self.ground)
        while len(self._flats) <= k:
            nxt = set()
            for f in self._flats[-1]:
                for i in range(n):
                    if not f >> i & 1:
                        nxt.add(self.closure_mask(f | (1 << i)))
            self._flats.append(_sort_masks(nxt))
        return list(self._flats[k])

    def flats(self, k: int) -> list[tuple[str, ...]]:
        return [self.ground.labels(f) for f in self.flat_masks(k)]


class ExplicitMatroid(Matroid):
    kind = "explicit"

    def __init__(self, ground: GroundSet, independent: Iterable[int]):
        super().__init__(ground)
        self.independent = frozenset(independent)

    def is_independent(self, mask):
        return mask in self.independent


class GraphicMatroid(Matroid):
    kind = "graphic"

    def __init__(self, graph: Graph):
        super().__init__(GroundSet(graph.edge_labels))
        self.graph = graph
        vidx = {v: i for i, v in enumerate(graph.vertices)}
        self._ends = [(vidx[u], vidx[v]) for u, v, _ in graph.edges]

    def _forest_rank(self, mask: int) -> tuple[int, bool]:
        parent: dict[int, int] = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        r = 0
        acyclic = True
        for i in bits(mask):
            a, b = self._ends[i]
            ra, rb = find(a), find(b)
            if ra == rb:
                acyclic = False
            else:
                parent[ra] = rb
                r += 1
        return r, acyclic

    def is_independent(self, mask):
        return self._forest_rank(mask)[1]

    def rank_mask(self, mask):
        # |vertices touched| - |components| == number of successful unions
        return self._forest_rank(mask)[0]


class BlockMatroid(Matroid):
    """Rank <= 3 matroid whose dependent 3-sets are the 3-subsets of blocks."""

    def __init__(self, ground: GroundSet, blocks: Iterable[int], kind: str = "two_partition"):
        super().__init__(ground)
        self.kind = kind
        self.blocks = tuple(_sort_masks(blocks))
        self._pair_block: dict[tuple[int, int], int] = {}
        for b in self.blocks:
            for i, j in combinations(bits(b), 2):
                self._pair_block[i, j] = b

    def is_independent(self, mask):
        c = popcount(mask)
        if c <= 2:
            return True
        if c > 3:
            return False
        return not self._in_one_block(mask)

    def _in_one_block(self, mask):
        i, j = bits(mask)[:2]
        b = self._pair_block.get((i, j))
        return b is not None and mask & ~b == 0

    def rank_mask(self, mask):
        c = popcount(mask)
        if c >= 3 and self._in_one_block(mask):
            return 2
        return min(c, 3)


# ---------------------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: int | None = None
    witness: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.ok


def validate_matroid(candidate: Iterable[Iterable], ground: GroundSet | Sequence[str]) -> ValidationReport:
    """Check the two independence axioms on an explicit family of subsets.

    Axiom 1 (downward closure) is checked before axiom 2 (exchange); the
    report carries the first violating pair in a deterministic order.
    """
    if not isinstance(ground, GroundSet):
        ground = GroundSet(tuple(ground))
    masks = [ground.mask(s) for s in candidate]
    if len(set(masks)) != len(masks):
        dup = next(m for m in masks if masks.count(m) > 1)
        raise InputError(f"duplicate subset {ground.labels(dup)} in family")
    family = set(masks)
    ordered = _sort_masks(family)

    def show(m):
        return "{" + ", ".join(ground.labels(m)) + "}"

    for a in ordered:
        for i in bits(a):
            b = a & ~(1 << i)
            if b not in family:
                return ValidationReport(
                    False, 1, (ground.labels(a), ground.labels(b)),
                    f"axiom 1: {show(a)} is independent but its subset {show(b)} is not")
    for a in ordered:
        for b in ordered:
            if popcount(a) >= popcount(b):
                continue
            if not any((a | (1 << i)) in family for i in bits(b & ~a)):
                return ValidationReport(
                    False, 2, (ground.labels(a), ground.labels(b)),
                    f"axiom 2: no element of {show(b)} extends {show(a)}")
    return ValidationReport(True)


def _check_simple(m: Matroid):
    n = len(m.ground)
    for i in range(n):
        if not m.is_independent(1 << i):
            raise InputError(f"element {m.ground.elements[i]!r} is a loop; matroid is not simple")
    for i, j in combinations(range(n), 2):
        if not m.is_independent((1 << i) | (1 << j)):
            raise InputError(
                f"elements {m.ground.elements[i]!r}, {m.ground.elements[j]!r} are parallel; "
                "matroid is not simple")


def explicit_matroid(elements: Sequence[str], independent: Iterable[Iterable], validate: bool = True) -> ExplicitMatroid:
    ground = GroundSet(tuple(elements))
    if len(ground) > EXPLICIT_MAX_ELEMENTS:
        raise InputError(
            f"explicit encoding limited to {EXPLICIT_MAX_ELEMENTS} elements (got {len(ground)})")
    family = [list(s) for s in independent]
    if validate:
        report = validate_matroid(family, ground)
        if not report.ok:
            raise InputError(report.message)
    m = ExplicitMatroid(ground, (ground.mask(s) for s in family))
    if validate:
        _check_simple(m)
    return m


def graphic_matroid(g: Graph, validate: bool = True) -> GraphicMatroid:
    # Graph construction already rejects loops and multi-edges; validate is
    # kept for signature symmetry with the other constructors.
    return GraphicMatroid(g)


def _blocks_from_triples(ground: GroundSet, triples: Iterable[int]) -> list[int]:
    pair_owner: dict[tuple[int, int], int] = {}
    blocks: list[int] = []
    for t in triples:
        members = bits(t)
        owners = {pair_owner[p] for p in combinations(members, 2) if p in pair_owner}
        merged = t
        for o in owners:
            merged |= blocks[o]
        # merging can make a block swallow further pairs owned by others
        changed = True
        while changed:
            changed = False
            for p in combinations(bits(merged), 2):
                o = pair_owner.get(p)
                if o is not None and blocks[o] & ~merged:
                    merged |= blocks[o]
                    changed = True
        idx = len(blocks)
        blocks.append(merged)
        for p in combinations(bits(merged), 2):
            pair_owner[p] = idx
    live = {pair_owner[p] for p in pair_owner}
    return _sort_masks(blocks[i] for i in live)


def dependent_triples_matroid(elements: Sequence[str], triples: Iterable[Iterable], validate: bool = True) -> BlockMatroid:
    """Rank <= 3 matroid from its dependent 3-sets.

    Triples sharing a pair are merged into one 2-flat; with ``validate`` every
    3-subset of a merged 2-flat must itself be listed (circuit elimination
    forces it), otherwise :class:`InputError` names the missing triple.
    """
    ground = GroundSet(tuple(elements))
    tmasks = []
    for t in triples:
        m = ground.mask(t)
        if popcount(m) != 3:
            raise InputError(f"dependent triple {tuple(t)} does not have three distinct elements")
        tmasks.append(m)
    listed = set(tmasks)
    blocks = _blocks_from_triples(ground, tmasks)
    if validate:
        for b in blocks:
            for t in combinations(bits(b), 3):
                tm = sum(1 << i for i in t)
                if tm not in listed:
                    raise InputError(
                        f"dependent triples are not closed: {ground.labels(tm)} is forced by "
                        f"the 2-flat {ground.labels(b)} but is not listed")
    return BlockMatroid(ground, blocks, kind="dependent_triples")


# ---------------------------------------------------------------------------
# 2-partitions and set-arrangements


@dataclass(frozen=True)
class TwoPartition:
    """Blocks covering every 2-subset of the ground set exactly once."""

    ground: GroundSet
    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        masks = []
        owner: dict[tuple[int, int], int] = {}
        for blk in self.blocks:
            m = self.ground.mask(blk)
            if popcount(m) < 2 or popcount(m) != len(tuple(blk)):
                raise InputError(f"2-partition block {tuple(blk)} must have >= 2 distinct elements")
            for p in combinations(bits(m), 2):
                if p in owner:
                    a, b = self.ground.labels((1 << p[0]) | (1 << p[1]))
                    raise InputError(
                        f"pair {{{a}, {b}}} is covered twice (blocks "
                        f"{self.ground.labels(owner[p])} and {self.ground.labels(m)})")
                owner[p] = m
            masks.append(m)
        for p in combinations(range(len(self.ground)), 2):
            if p not in owner:
                a, b = self.ground.labels((1 << p[0]) | (1 << p[1]))
                raise InputError(f"pair {{{a}, {b}}} is not covered by any block")
        object.__setattr__(self, "blocks", tuple(self.ground.labels(m) for m in _sort_masks(masks)))

    @property
    def block_masks(self) -> list[int]:
        return [self.ground.mask(b) for b in self.blocks]


@dataclass(frozen=True)
class SetArrangement:
    """Blocks of size >= 3, any two sharing at most one element."""

    ground: GroundSet
    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        ground = self.ground if isinstance(self.ground, GroundSet) else GroundSet(tuple(self.ground))
        object.__setattr__(self, "ground", ground)
        masks = []
        for blk in self.blocks:
            blk = tuple(blk)
            m = ground.mask(blk)
            if popcount(m) != len(blk):
                raise InputError(f"block {blk} repeats an element")
            if popcount(m) < 3:
                raise InputError(f"block {blk} has fewer than three elements")
            if m in masks:
                raise InputError(f"block {blk} listed twice")
            masks.append(m)
        for a, b in combinations(masks, 2):
            if popcount(a & b) > 1:
                raise InputError(
                    f"blocks {ground.labels(a)} and {ground.labels(b)} share more than one element")
        # block order is kept as given; elements within a block follow the ground set
        object.__setattr__(self, "blocks", tuple(ground.labels(m) for m in masks))

    @classmethod
    def from_blocks(cls, elements: Sequence, blocks: Iterable[Iterable]) -> "SetArrangement":
        return cls(GroundSet(tuple(str(e) for e in elements)),
                   tuple(tuple(str(x) for x in b) for b in blocks))

    @property
    def block_masks(self) -> list[int]:
        return [self.ground.mask(b) for b in self.blocks]

    @property
    def elements(self) -> tuple[str, ...]:
        return self.ground.elements

    def two_partition(self) -> TwoPartition:
        masks = self.block_masks
        covered = set()
        for m in masks:
            covered.update(combinations(bits(m), 2))
        pairs = [(1 << i) | (1 << j) for i, j in combinations(range(len(self.ground)), 2)
                 if (i, j) not in covered]
        return TwoPartition(self.ground, tuple(self.ground.labels(m) for m in masks + pairs))

    def support(self, blocks: Iterable[Sequence[str]] | None = None) -> tuple[str, ...]:
        chosen = self.blocks if blocks is None else blocks
        m = 0
        for b in chosen:
            m |= self.ground.mask(b)
        return self.ground.labels(m)

    def restrict(self, blocks: Iterable[Sequence[str]]) -> "SetArrangement":
        """The sub-arrangement of ``blocks`` viewed on its own support."""
        chosen = [tuple(b) for b in blocks]
        return SetArrangement(GroundSet(self.support(chosen)), tuple(chosen))

    def to_json(self) -> dict:
        return {"elements": list(self.ground.elements), "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "SetArrangement":
        return cls.from_blocks(data["elements"], data.get("blocks", []))


# ---------------------------------------------------------------------------
# module-level operations


def rank(m: Matroid, subset: Iterable = ()) -> int:
    return m.rank(subset)


def closure(m: Matroid, subset: Iterable) -> tuple[str, ...]:
    return m.closure(subset)


def flats(m: Matroid, k: int) -> list[tuple[str, ...]]:
    return m.flats(k)


def two_partition(m: Matroid) -> TwoPartition:
    if isinstance(m, BlockMatroid):
        masks = list(m.blocks)
        covered = set()
        for b in masks:
            covered.update(combinations(bits(b), 2))
        masks += [(1 << i) | (1 << j) for i, j in combinations(range(len(m.ground)), 2)
                  if (i, j) not in covered]
    else:
        masks = m.flat_masks(2)
    try:
        return TwoPartition(m.ground, tuple(m.ground.labels(b) for b in masks))
    except InputError as exc:
        raise InvariantError(f"2-flats of {m!r} do not form a 2-partition: {exc}") from exc


def matroid_from_two_partition(tp: TwoPartition) -> BlockMatroid:
    return BlockMatroid(tp.ground, [b for b in tp.block_masks if popcount(b) >= 3], kind="two_partition")


def arrangement_of(m: Matroid) -> SetArrangement:
    tp = two_partition(m)
    return SetArrangement(m.ground, tuple(b for b in tp.blocks if len(b) >= 3))


def matroid_of_arrangement(a: SetArrangement) -> BlockMatroid:
    """The rank <= 3 matroid whose 2-flats are the arrangement's 2-partition."""
    return BlockMatroid(a.ground, a.block_masks, kind="two_partition")


class _Truncation(Matroid):
    def __init__(self, base: Matroid, r: int):
        super().__init__(base.ground)
        self.base = base
        self.r = r
        self.kind = f"truncation({base.kind},{r})"

    def is_independent(self, mask):
        return popcount(mask) <= self.r and self.base.is_independent(mask)


def truncation(m: Matroid, r: int = 3) -> Matroid:
    """Independent sets of ``m`` of size at most ``r``."""
    return _Truncation(m, r)


def brute_force_rank(m: Matroid, mask: int) -> int:
    """Largest independent subset of ``mask`` by exhaustive search (test oracle)."""
    members = bits(mask)
    for size in range(len(members), -1, -1):
        for combo in combinations(members, size):
            if m.is_independent(sum(1 << i for i in combo)):
                return size
    return 0
