"""Lie presentations and the tensor-coordinate ideal engine.

A Lie element is stored through its image in the tensor algebra, where
``[u, v] = uv - vu``.  This embedding is faithful, so the degree-d part of
the ideal generated by quadratic relations is the row span of a sparse
integer matrix indexed by words, and its dimension is an exact rank.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import InputError, ResourceError
from .series import GradedDims, witt
from .sparse import SparseEchelon

DEFAULT_MAX_WORDS = 5_000_000


def max_words() -> int:
    """Word-space guard; ``HOLOKIT_MAX_WORDS`` overrides the default."""
    env = os.environ.get("HOLOKIT_MAX_WORDS")
    if env:
        try:
            return int(float(env))
        except ValueError:
            raise InputError(f"HOLOKIT_MAX_WORDS must be a number, got {env!r}") from None
    return DEFAULT_MAX_WORDS


def check_word_space(n: int, max_degree: int, limit: int | None = None) -> None:
    limit = max_words() if limit is None else limit
    if n ** max_degree > limit:
        raise ResourceError(
            f"word space {n}^{max_degree} = {n ** max_degree} exceeds the guard {limit}; "
            "raise HOLOKIT_MAX_WORDS or lower the degree")


# ---------------------------------------------------------------------------
# tensor vectors and bracket expansion

Expr = Union[str, tuple, list]


class TensorVector:
    """Homogeneous element of the tensor algebra: word tuple -> integer."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: dict | None = None, degree: int | None = None):
        terms = {tuple(w): int(c) for w, c in (terms or {}).items() if c}
        lengths = {len(w) for w in terms}
        if len(lengths) > 1:
            raise InputError(f"mixed-degree tensor (word lengths {sorted(lengths)})")
        if lengths:
            (d,) = lengths
            if degree is not None and degree != d:
                raise InputError(f"declared degree {degree} but words have length {d}")
            degree = d
        self.terms = terms
        self.degree = degree

    def __eq__(self, other):
        if isinstance(other, TensorVector):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def _combine(self, other, sign):
        if self.degree is not None and other.degree is not None and other.terms and self.terms \
                and self.degree != other.degree:
            raise InputError(f"cannot add degree {self.degree} and degree {other.degree} elements")
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + sign * c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        deg = self.degree if self.degree is not None else other.degree
        return TensorVector(out, deg if out else deg)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return TensorVector({w: -c for w, c in self.terms.items()}, self.degree)

    def __rmul__(self, k: int):
        return TensorVector({w: k * c for w, c in self.terms.items()}, self.degree)

    def concat(self, other: "TensorVector") -> "TensorVector":
        out: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                out[w] = out.get(w, 0) + a * b
        deg = None if self.degree is None or other.degree is None else self.degree + other.degree
        return TensorVector(out, deg)

    def __repr__(self):
        if not self.terms:
            return "TensorVector(0)"
        parts = []
        for w, c in sorted(self.terms.items()):
            word = "".join(map(str, w))
            parts.append(f"{c:+d}*{word}")
        return "TensorVector(" + " ".join(parts) + ")"


def _expand(expr) -> TensorVector:
    if isinstance(expr, str):
        return TensorVector({(expr,): 1}, 1)
    if isinstance(expr, tuple) and len(expr) == 2:
        u, v = _expand(expr[0]), _expand(expr[1])
        return u.concat(v) - v.concat(u)
    if isinstance(expr, list):
        acc = None
        for item in expr:
            if not (isinstance(item, tuple) and len(item) == 2 and isinstance(item[0], int)):
                raise InputError(f"combination terms must be (int, expr) pairs, got {item!r}")
            term = item[0] * _expand(item[1])
            if acc is None:
                acc = term
            else:
                acc = acc + term
        return acc if acc is not None else TensorVector()
    raise InputError(f"not a bracket expression: {expr!r}")


def expand_bracket(expr: Expr) -> TensorVector:
    """Multilinear expansion ``[u, v] -> uv - vu``.

    ``expr`` is a generator name (str), a bracket ``(u, v)``, a list of
    ``(coefficient, expr)`` pairs, or a string such as ``"[x,[x,y]] - 2[x,y]"``.
    """
    if isinstance(expr, str) and "[" in expr:
        expr = parse_bracket(expr)
    return _expand(expr)


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][\w']*|\[|\]|,|\+|-)")


def parse_bracket(text: str) -> Expr:
    """Parse ``"[x,[y,z]] - 2[x,y]"`` into the nested-tuple form."""
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise InputError(f"cannot parse bracket expression at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else None

    def take(expected=None):
        nonlocal i
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise InputError(f"expected {expected!r} in {text!r}, got {tok!r}")
        i += 1
        return tok

    def atom():
        tok = peek()
        if tok == "[":
            take("[")
            a = combo()
            take(",")
            b = combo()
            take("]")
            return (a, b)
        if tok is None or not re.match(r"[A-Za-z_]", tok):
            raise InputError(f"expected generator or '[' in {text!r}, got {tok!r}")
        return take()

    def term():
        sign = 1
        while peek() in ("+", "-"):
            if take() == "-":
                sign = -sign
        coef = 1
        if peek() is not None and peek().isdigit():
            coef = int(take())
        return sign * coef, atom()

    def combo():
        terms = [term()]
        while peek() in ("+", "-"):
            terms.append(term())
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return list(terms)

    result = combo()
    if i != len(tokens):
        raise InputError(f"trailing tokens in {text!r}: {tokens[i:]}")
    return result


# ---------------------------------------------------------------------------
# presentations


def _normalize_relation(rel) -> dict:
    """Antisymmetry-normalize ``{(i, j): c}`` to ordered pairs ``i < j``."""
    out: dict = {}
    for (i, j), c in dict(rel).items():
        if i == j or not c:
            continue
        key, sign = ((i, j), 1) if i < j else ((j, i), -1)
        v = out.get(key, 0) + sign * int(c)
        if v:
            out[key] = v
        else:
            out.pop(key)
    return out


@dataclass(frozen=True)
class LiePresentation:
    """Generators in degree 1, relations in degree 2 as bracket combinations.

    Each relation is a tuple of ``((i, j), c)`` with ``i < j`` standing for
    ``c [x_i, x_j]``; zero relations are dropped.
    """

    n: int
    generator_labels: tuple[str, ...] = ()
    relations: tuple = ()
    _key: tuple = field(init=False, repr=False, compare=True)

    def __post_init__(self):
        labels = tuple(self.generator_labels) or tuple(f"x{i + 1}" for i in range(self.n))
        if len(labels) != self.n:
            raise InputError(f"{len(labels)} labels for {self.n} generators")
        rels = []
        for r in self.relations:
            norm = _normalize_relation(r)
            for (i, j) in norm:
                if not (0 <= i < self.n and 0 <= j < self.n):
                    raise InputError(f"relation uses generator index outside 0..{self.n - 1}")
            if norm:
                rels.append(tuple(sorted(norm.items())))
        object.__setattr__(self, "generator_labels", labels)
        object.__setattr__(self, "relations", tuple(rels))
        object.__setattr__(self, "_key", (self.n, labels, tuple(rels)))

    def __hash__(self):
        return hash(self._key)

    def relation_text(self, k: int) -> str:
        lab = self.generator_labels
        parts = []
        for (i, j), c in self.relations[k]:
            br = f"[{lab[i]},{lab[j]}]"
            mag = abs(c)
            body = br if mag == 1 else f"{mag}{br}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "generators": list(self.generator_labels),
            "relations": [[[i, j, c] for (i, j), c in r] for r in self.relations],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LiePresentation":
        rels = [{(i, j): c for i, j, c in r} for r in data["relations"]]
        return cls(data["n"], tuple(data["generators"]), tuple(rels))


def free_presentation(n: int) -> LiePresentation:
    return LiePresentation(n)


def relation_tensor(rel, n: int) -> dict:
    """Degree-2 relation as a word-index row (word ``ij`` -> ``i*n + j``)."""
    row: dict = {}
    for (i, j), c in rel:
        row[i * n + j] = row.get(i * n + j, 0) + c
        row[j * n + i] = row.get(j * n + i, 0) - c
    return {k: v for k, v in row.items() if v}


def bracket_generator(g: int, row: dict, n: int, d: int) -> dict:
    """``[x_g, v]`` for a degree-d word-index row ``v``."""
    head = g * n ** d
    out: dict = {}
    for w, c in row.items():
        out[head + w] = out.get(head + w, 0) + c
        k = w * n + g
        out[k] = out.get(k, 0) - c
    return {k: v for k, v in out.items() if v}


def ideal_dims(p: LiePresentation, max_degree: int, limit: int | None = None) -> GradedDims:
    """Dimensions of the ideal generated by the relations, degrees 1..D.

    Degree d+1 is spanned by ``[x_g, v]`` over generators g and a basis v
    of degree d; each degree is pruned to an independent set before
    bracketing upward.
    """
    return GradedDims(_ideal_spans(p, max_degree, limit)[0])


def _ideal_spans(p: LiePresentation, max_degree: int, limit=None):
    if max_degree < 2:
        raise InputError("ideal_dims needs max_degree >= 2")
    check_word_space(p.n, max_degree, limit)
    n = p.n
    dims = [0]
    bases = [[]]
    current = [relation_tensor(r, n) for r in p.relations]
    for d in range(2, max_degree + 1):
        ech = SparseEchelon()
        keep = [current[i] for i in ech.extend(current)]
        dims.append(ech.rank)
        bases.append(keep)
        if d < max_degree:
            current = [bracket_generator(g, v, n, d) for v in keep for g in range(n)]
    return dims, bases


def graded_dims_tensor(p: LiePresentation, max_degree: int, limit: int | None = None) -> GradedDims:
    """Quotient dimensions as ``witt(n, d) - dim ideal_d`` (tensor route)."""
    if max_degree < 1:
        raise InputError("max_degree must be >= 1")
    if max_degree == 1:
        return GradedDims((p.n,))
    ideal = ideal_dims(p, max_degree, limit)
    return GradedDims(tuple([p.n] + [witt(p.n, d) - ideal[d] for d in range(2, max_degree + 1)]))


def word_index(word: Sequence[int], n: int) -> int:
    k = 0
    for a in word:
        k = k * n + a
    return k


def index_word(k: int, n: int, d: int) -> tuple[int, ...]:
    w = []
    for _ in range(d):
        k, a = divmod(k, n)
        w.append(a)
    return tuple(reversed(w))


def tensor_from_row(row: dict, p: LiePresentation, d: int) -> TensorVector:
    lab = p.generator_labels
    return TensorVector({tuple(lab[a] for a in index_word(k, p.n, d)): c for k, c in row.items()}, d)
