"""Graded Lie algebras from quadratic presentations, degree by degree.

For ``L = F(V)/(R)`` with R in degree 2 let ``N = L / L_{>=d}``.  Hopf's
formula gives ``L_d = H_2(N)_d`` for ``d >= 3``, and since ``N_d = 0`` the
Chevalley-Eilenberg complex turns this into

    L_d = (Λ²N)_d / ∂(Λ³N)_d,   ∂(a∧b∧c) = [a,b]∧c + [b,c]∧a + [c,a]∧b,

with ``[u, v]`` (deg u + deg v = d) the class of ``u∧v``.  Degree 2 is
``Λ²V / R``.  Every step is a quotient of a small exact vector space, so
the cost follows dim L rather than the size of the word space.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import InputError
from .lie import LiePresentation, check_word_space
from .series import GradedDims
from .sparse import quotient, rank_of


class GradedLieAlgebra:
    """Structure constants of ``L_1 + ... + L_D`` on bases chosen degree by degree.

    Elements are ``(degree, {basis_index: coefficient})`` with integer or
    Fraction coefficients.  Basis element ``k`` of degree 1 is generator ``k``.
    """

    def __init__(self, presentation: LiePresentation, max_degree: int, top_structure: bool = True):
        if max_degree < 1:
            raise InputError("max_degree must be >= 1")
        self.presentation = presentation
        self.max_degree = max_degree
        # brackets landing in the top degree are only available with top_structure
        self.structure_degree = max_degree if top_structure else max_degree - 1
        self.dims = [0, presentation.n]
        # (i, j) with i <= j -> {(a, b): image in degree i + j}; a < b when i == j
        self.table: dict[tuple[int, int], dict] = {}
        for d in range(2, max_degree + 1):
            self._extend(d)

    # -- arithmetic -------------------------------------------------------
    def generator(self, k: int):
        return (1, {k: 1})

    def _basis_bracket(self, i, a, j, b) -> dict:
        if i < j or (i == j and a < b):
            return self.table[i, j].get((a, b), {})
        if i == j and a == b:
            return {}
        img = self.table[j, i].get((b, a), {})
        return {k: -v for k, v in img.items()}

    def bracket(self, u, v):
        (i, uc), (j, vc) = u, v
        if i + j > self.structure_degree:
            raise InputError(f"bracket lands in degree {i + j}; structure known through {self.structure_degree}")
        out: dict = {}
        for a, ca in uc.items():
            for b, cb in vc.items():
                img = self._basis_bracket(i, a, j, b)
                if not img:
                    continue
                cc = ca * cb
                for k, v in img.items():
                    nv = out.get(k, 0) + cc * v
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return (i + j, out)

    def is_zero(self, u) -> bool:
        return not any(u[1].values())

    def graded_dims(self) -> GradedDims:
        return GradedDims(tuple(self.dims[1:]))

    # -- construction -----------------------------------------------------
    def _columns(self, d):
        cols = []
        # non-generator pairs first so generator brackets survive as the basis
        for i in range(d // 2, 0, -1):
            j = d - i
            if i == j:
                cols.extend((i, a, j, b) for a, b in combinations(range(self.dims[i]), 2))
            else:
                cols.extend((i, a, j, b) for a in range(self.dims[i]) for b in range(self.dims[j]))
        return cols

    def _extend(self, d: int) -> None:
        cols = self._columns(d)
        index = {c: k for k, c in enumerate(cols)}

        def add_wedge(row, i, u, j, v, sign=1):
            # row += sign * (u ∧ v) with u in degree i, v in degree j
            for a, ca in u.items():
                for b, cb in v.items():
                    if (i, a) < (j, b):
                        key, s = index[i, a, j, b], sign
                    elif (i, a) == (j, b):
                        continue
                    else:
                        key, s = index[j, b, i, a], -sign
                    nv = row.get(key, 0) + s * ca * cb
                    if nv:
                        row[key] = nv
                    else:
                        row.pop(key, None)

        rows = []
        if d == 2:
            for rel in self.presentation.relations:
                rows.append({index[1, a, 1, b]: c for (a, b), c in rel})
        else:
            # Triples containing a generator suffice: writing a = [x, a'] and
            # using ∂∂(x∧a'∧b∧c) = 0 trades any triple of minimum degree m >= 2
            # for triples containing x or one of minimum degree m - 1.
            for j in range(1, (d - 1) // 2 + 1):
                k = d - 1 - j
                for a, b, c in self._triples(1, j, k):
                    row: dict = {}
                    xa = (1, {a: 1})
                    bv, cv = (j, {b: 1}), (k, {c: 1})
                    add_wedge(row, j + 1, self.bracket(xa, bv)[1], k, {c: 1})
                    add_wedge(row, j + k, self.bracket(bv, cv)[1], 1, {a: 1})
                    add_wedge(row, k + 1, self.bracket(cv, xa)[1], j, {b: 1})
                    if row:
                        rows.append(row)
        late = sum(1 for c in cols if c[0] > 1)
        if d > self.structure_degree:
            self.dims.append(len(cols) - rank_of(rows, late))
            return
        free, images = quotient(rows, len(cols), late)
        self.dims.append(len(free))
        for c, img in zip(cols, images):
            i, a, j, b = c
            self.table.setdefault((i, j), {})[a, b] = img
        for i in range(1, d // 2 + 1):
            self.table.setdefault((i, d - i), {})

    def _triples(self, i, j, k):
        """Basis triples of degrees i <= j <= k with distinct members, each set once."""
        ni, nj, nk = self.dims[i], self.dims[j], self.dims[k]
        if i == j == k:
            yield from combinations(range(ni), 3)
        elif i == j:
            for a, b in combinations(range(ni), 2):
                for c in range(nk):
                    yield a, b, c
        elif j == k:
            for a in range(ni):
                for b, c in combinations(range(nj), 2):
                    yield a, b, c
        else:
            for a in range(ni):
                for b in range(nj):
                    for c in range(nk):
                        yield a, b, c


@lru_cache(maxsize=128)
def _cached_algebra(p: LiePresentation, max_degree: int, top_structure: bool) -> GradedLieAlgebra:
    return GradedLieAlgebra(p, max_degree, top_structure)


def lie_algebra(p: LiePresentation, max_degree: int, limit: int | None = None,
                top_structure: bool = True) -> GradedLieAlgebra:
    """The graded Lie algebra of ``p`` through ``max_degree`` (memoized)."""
    check_word_space(p.n, max_degree, limit)
    return _cached_algebra(p, max_degree, top_structure)


def graded_dims(p: LiePresentation, max_degree: int, limit: int | None = None) -> GradedDims:
    """dim L_d for d = 1..max_degree."""
    if max_degree < 1:
        raise InputError("max_degree must be >= 1")
    return lie_algebra(p, max_degree, limit, top_structure=False).graded_dims()
