"""Holonomy Lie algebras of set-arrangements and their exact-sequence ideals.

The holonomy presentation on elements ``E`` has, for each block A and each
i in A, the relation ``Σ_{j in A, j != i} [x_i, x_j]``, and ``[x_i, x_j]``
for every pair lying in no block.  Ideal dimensions are obtained by
subtraction along split exact sequences; they are never built explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import lie, nq
from .errors import InputError, InvariantError
from .graphs import graph_arrangement, lfs_exponents
from .matroid import Graph, SetArrangement
from .series import GradedDims, SeriesTruncation, enveloping_series, series_product, witt

ENGINES = ("quotient", "tensor")


@dataclass(frozen=True)
class HolonomyPresentation:
    arrangement: SetArrangement
    presentation: lie.LiePresentation
    block_index: dict = field(compare=False)

    @property
    def n(self) -> int:
        return self.presentation.n

    @property
    def elements(self) -> tuple[str, ...]:
        return self.arrangement.elements

    def to_json(self) -> dict:
        return {
            "arrangement": self.arrangement.to_json(),
            "presentation": self.presentation.to_json(),
            "relations_text": [self.presentation.relation_text(k)
                               for k in range(len(self.presentation.relations))],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HolonomyPresentation":
        h = holonomy_presentation(SetArrangement.from_json(data["arrangement"]))
        if "presentation" in data and lie.LiePresentation.from_json(data["presentation"]) != h.presentation:
            raise InputError("stored presentation does not match its arrangement")
        return h


def holonomy_presentation(a: SetArrangement) -> HolonomyPresentation:
    g = a.ground
    rels = []
    block_index = {}
    covered = set()
    for blk in a.blocks:
        idx = [g.index[x] for x in blk]
        rows = []
        for i in idx:
            rows.append(len(rels))
            rels.append({(i, j): 1 for j in idx if j != i})
        block_index[blk] = tuple(rows)
        covered.update(combinations(sorted(idx), 2))
    for pair in combinations(range(len(g)), 2):
        if pair not in covered:
            rels.append({pair: 1})
    # a block's relations sum to zero; LiePresentation keeps them all
    p = lie.LiePresentation(len(g), g.elements, tuple(rels))
    if len(p.relations) != len(rels):
        raise InvariantError("a holonomy relation vanished under normalization")
    return HolonomyPresentation(a, p, block_index)


def graph_holonomy(g: Graph) -> HolonomyPresentation:
    return holonomy_presentation(graph_arrangement(g))


# ---------------------------------------------------------------------------
# dimensions


def graded_dims(h: HolonomyPresentation | lie.LiePresentation, max_degree: int,
                engine: str = "quotient") -> GradedDims:
    """dim of each degree of the holonomy Lie algebra, through ``max_degree``."""
    p = h.presentation if isinstance(h, HolonomyPresentation) else h
    if engine == "quotient":
        return nq.graded_dims(p, max_degree)
    if engine == "tensor":
        return lie.graded_dims_tensor(p, max_degree)
    raise InputError(f"unknown engine {engine!r}; choose from {ENGINES}")


def lcs_series(h: HolonomyPresentation, max_degree: int, engine: str = "quotient") -> SeriesTruncation:
    """Enveloping-algebra series computed from the engine dimensions."""
    return enveloping_series(graded_dims(h, max_degree, engine), max_degree)


def local_dims(block: Sequence | int, max_degree: int) -> GradedDims:
    """Dimensions of the local algebra of one block: free(|A|-1) x free(1)."""
    size = block if isinstance(block, int) else len(tuple(block))
    if size < 3:
        raise InputError("a block has at least three elements")
    if max_degree < 1:
        raise InputError("max_degree must be >= 1")
    return GradedDims(tuple([size] + [witt(size - 1, d) for d in range(2, max_degree + 1)]))


def _check_nonnegative(name: str, dims: list[int]) -> GradedDims:
    for d, v in enumerate(dims, start=1):
        if v < 0:
            raise InvariantError(f"dim {name}_{d} = {v} < 0: the direct-sum bound failed (engine bug)")
    return GradedDims(tuple(dims))


def ideal_I_dims(h: HolonomyPresentation, max_degree: int, engine: str = "quotient") -> GradedDims:
    """dim I_d = dim η_d - Σ_A dim (L_A)_d for d >= 2 (degree 1 reported as 0)."""
    if max_degree < 2:
        raise InputError("ideal dimensions need max_degree >= 2")
    eta = graded_dims(h, max_degree, engine)
    locs = [local_dims(b, max_degree) for b in h.arrangement.blocks]
    return _check_nonnegative("I", [0] + [eta[d] - sum(l[d] for l in locs)
                                          for d in range(2, max_degree + 1)])


def subalgebra_ideal_dims(h: HolonomyPresentation, block: Sequence[str], max_degree: int,
                          engine: str = "quotient") -> GradedDims:
    """dim (I_A)_d = dim η_d - dim (L_A)_d for all d (the sequence splits)."""
    blk = _find_block(h.arrangement, block)
    eta = graded_dims(h, max_degree, engine)
    loc = local_dims(blk, max_degree)
    return _check_nonnegative("I_A", [eta[d] - loc[d] for d in range(1, max_degree + 1)])


def _find_block(a: SetArrangement, block: Sequence[str]) -> tuple[str, ...]:
    want = a.ground.mask(block)
    for b, m in zip(a.blocks, a.block_masks):
        if m == want:
            return b
    raise InputError(f"{tuple(block)} is not a block of the arrangement")


# ---------------------------------------------------------------------------
# closed subsets and the ideal J


def is_closed(blocks: Iterable[Sequence[str]], a: SetArrangement) -> bool:
    """True when every block outside ``blocks`` meets their support in <= 1 element."""
    return _closure_violation(blocks, a) is None


def _closure_violation(blocks, a: SetArrangement):
    chosen = {a.ground.mask(_find_block(a, b)) for b in blocks}
    supp = 0
    for m in chosen:
        supp |= m
    for b, m in zip(a.blocks, a.block_masks):
        if m not in chosen and bin(m & supp).count("1") > 1:
            return b
    return None


def _validate_parts(a: SetArrangement, parts) -> list[list[tuple[str, ...]]]:
    parts = [[_find_block(a, b) for b in part] for part in parts]
    seen = {}
    for k, part in enumerate(parts):
        if not part:
            raise InputError(f"part {k} is empty")
        for b in part:
            if b in seen:
                raise InputError(f"block {b} appears in parts {seen[b]} and {k}")
            seen[b] = k
    missing = [b for b in a.blocks if b not in seen]
    if missing:
        raise InputError(f"blocks {missing} are in no part")
    for k, part in enumerate(parts):
        bad = _closure_violation(part, a)
        if bad is not None:
            raise InputError(f"part {k} is not closed: block {bad} meets its support in more than one element")
    return parts


def ideal_J_dims(h: HolonomyPresentation, parts: Iterable[Iterable[Sequence[str]]], max_degree: int,
                 engine: str = "quotient") -> GradedDims:
    """dim J_d = dim η_d - Σ_i dim (L_{B_i})_d for d >= 2, over a partition into closed parts."""
    if max_degree < 2:
        raise InputError("ideal dimensions need max_degree >= 2")
    parts = _validate_parts(h.arrangement, parts)
    eta = graded_dims(h, max_degree, engine)
    subs = [graded_dims(holonomy_presentation(h.arrangement.restrict(part)), max_degree, engine)
            for part in parts]
    return _check_nonnegative("J", [0] + [eta[d] - sum(s[d] for s in subs)
                                          for d in range(2, max_degree + 1)])


# ---------------------------------------------------------------------------
# decomposability


@dataclass(frozen=True)
class DecompositionReport:
    decomposable: bool
    witnesses: tuple[tuple[str, str, str, tuple[str, ...]], ...]
    ideal_dims: GradedDims

    @property
    def consistent(self) -> bool:
        """Witness test and ideal dimensions tell the same story."""
        return (not self.witnesses) == (not any(self.ideal_dims)) == self.decomposable

    def to_json(self) -> dict:
        return {
            "decomposable": self.decomposable,
            "witnesses": [{"x": x, "y": y, "z": z, "block": list(b)} for x, y, z, b in self.witnesses],
            "ideal_dims": list(self.ideal_dims),
        }

    @classmethod
    def from_json(cls, data: dict) -> "DecompositionReport":
        return cls(bool(data["decomposable"]),
                   tuple((w["x"], w["y"], w["z"], tuple(w["block"])) for w in data["witnesses"]),
                   GradedDims(tuple(data["ideal_dims"])))


def _bracket_witnesses(h: HolonomyPresentation, supports: list[tuple[tuple[str, ...], Iterable]]):
    """Triples ``(x, y, z, S)`` with y, z in S, x outside S and [x,[y,z]] != 0."""
    alg = nq.lie_algebra(h.presentation, 3)
    g = h.arrangement.ground
    out = []
    for label, members in supports:
        inside = sorted(g.index[m] for m in members)
        ins = set(inside)
        for y, z in combinations(inside, 2):
            yz = alg.bracket(alg.generator(y), alg.generator(z))
            if alg.is_zero(yz):
                continue
            for x in range(len(g)):
                if x in ins:
                    continue
                if not alg.is_zero(alg.bracket(alg.generator(x), yz)):
                    out.append((g.elements[x], g.elements[y], g.elements[z], label))
    return tuple(out)


def decomposability(h: HolonomyPresentation, max_degree: int = 3, engine: str = "quotient") -> DecompositionReport:
    """Degree-3 test: decomposable iff [x,[y,z]] = 0 for every block A, x ∉ A, y, z ∈ A.

    ``ideal_dims`` (dim I through ``max_degree``) is an independent cross-check.
    """
    wit = _bracket_witnesses(h, [(b, b) for b in h.arrangement.blocks])
    dims = ideal_I_dims(h, max(max_degree, 2), engine)
    return DecompositionReport(not wit, wit, dims)


def partition_report(h: HolonomyPresentation, parts, max_degree: int = 3,
                     engine: str = "quotient") -> DecompositionReport:
    """The J-analogue of :func:`decomposability` for a partition into closed parts."""
    parts = _validate_parts(h.arrangement, parts)
    a = h.arrangement
    wit = _bracket_witnesses(h, [(a.support(part), a.support(part)) for part in parts])
    dims = ideal_J_dims(h, parts, max(max_degree, 2), engine)
    return DecompositionReport(not wit, wit, dims)


# ---------------------------------------------------------------------------
# series predictions


def kohno_series(n: int, max_degree: int) -> SeriesTruncation:
    """Π_{i=1}^{n-1} 1/(1 - i t), the series of the braid arrangement on n strands."""
    if n < 2:
        raise InputError("kohno_series needs n >= 2")
    return series_product([(i, 1) for i in range(1, n)], max_degree)


def tower_series(ranks: Sequence[int], max_degree: int) -> SeriesTruncation:
    return series_product([(r, 1) for r in ranks], max_degree)


def lfs_series(g: Graph, max_degree: int) -> SeriesTruncation:
    """Π_j (1 - j t)^(-e_j) with the clique-count exponents."""
    return series_product(lfs_exponents(g), max_degree)


@dataclass(frozen=True)
class SeriesCheck:
    ok: bool
    first_mismatch: int | None
    computed: SeriesTruncation
    predicted: SeriesTruncation

    def to_json(self) -> dict:
        return {"ok": self.ok, "first_mismatch": self.first_mismatch,
                "computed": list(self.computed), "predicted": list(self.predicted)}

    @classmethod
    def from_json(cls, data: dict) -> "SeriesCheck":
        return cls(bool(data["ok"]), data["first_mismatch"],
                   SeriesTruncation(tuple(data["computed"])), SeriesTruncation(tuple(data["predicted"])))


def compare_series(computed: SeriesTruncation, predicted: SeriesTruncation) -> SeriesCheck:
    k = computed.first_mismatch(predicted)
    return SeriesCheck(k is None, k, computed, predicted)


def verify_tower(h: HolonomyPresentation, ranks: Sequence[int], max_degree: int,
                 engine: str = "quotient") -> SeriesCheck:
    ranks = [int(r) for r in ranks]
    if any(r <= 0 for r in ranks):
        raise InputError("tower ranks must be positive")
    if sum(ranks) != h.n:
        raise InputError(f"tower ranks sum to {sum(ranks)}, the presentation has {h.n} generators")
    return compare_series(lcs_series(h, max_degree, engine), tower_series(ranks, max_degree))


@dataclass(frozen=True)
class ScanEntry:
    name: str
    exponents: tuple[tuple[int, int], ...]

    @property
    def flagged(self) -> tuple[tuple[int, int], ...]:
        """Exponents that are not positive."""
        return tuple((j, e) for j, e in self.exponents if e <= 0)

    @property
    def negative(self) -> bool:
        return any(e < 0 for _, e in self.exponents)

    def to_json(self) -> dict:
        return {"name": self.name, "exponents": [[j, e] for j, e in self.exponents],
                "flagged": [[j, e] for j, e in self.flagged], "negative": self.negative}


def exponent_scan(graphs: Iterable[Graph | tuple[str, Graph]]) -> list[ScanEntry]:
    """Clique-count exponents for each graph, flagging any e_j <= 0."""
    out = []
    for k, item in enumerate(graphs):
        name, g = item if isinstance(item, tuple) else (f"graph{k}", item)
        out.append(ScanEntry(name, tuple(lfs_exponents(g))))
    return out
