"""Witt numbers, graded dimension vectors and truncated power series."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import format_terms


def number_mobius(m: int) -> int:
    """Number-theoretic Möbius function."""
    if m < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def divisors(d: int) -> list[int]:
    return [e for e in range(1, d + 1) if d % e == 0]


def witt(n: int, d: int) -> int:
    """Dimension of the degree-d part of the free Lie algebra on n generators."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if n < 0:
        raise ValueError("alphabet size must be >= 0")
    total = sum(number_mobius(e) * n ** (d // e) for e in divisors(d))
    return total // d


def lyndon_words(n: int, d: int) -> Iterable[tuple[int, ...]]:
    """Lyndon words of length exactly d over range(n) (Duval's generator)."""
    if n == 0:
        return
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == d:
            yield tuple(w)
        while len(w) < d:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()


@dataclass(frozen=True)
class GradedDims:
    """Dimensions indexed by degree 1..max_degree; ``dims[0]`` is degree 1."""

    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))

    @property
    def max_degree(self) -> int:
        return len(self.dims)

    def __getitem__(self, d: int) -> int:
        if not 1 <= d <= len(self.dims):
            raise IndexError(f"degree {d} outside 1..{len(self.dims)}")
        return self.dims[d - 1]

    def __iter__(self):
        return iter(self.dims)

    def __len__(self):
        return len(self.dims)

    def to_json(self) -> dict:
        return {"dims": list(self.dims)}

    @classmethod
    def from_json(cls, data: dict) -> "GradedDims":
        return cls(tuple(data["dims"]))


@dataclass(frozen=True)
class SeriesTruncation:
    """Power-series coefficients for degrees 0..max_degree."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(x) for x in self.coefficients))

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def text(self, var: str = "t") -> str:
        return f"{format_terms(self.coefficients, var)} + O({var}^{self.max_degree + 1})"

    def __str__(self):
        return self.text()

    def first_mismatch(self, other: "SeriesTruncation") -> int | None:
        for k, (a, b) in enumerate(zip(self.coefficients, other.coefficients)):
            if a != b:
                return k
        return None

    def to_json(self) -> dict:
        return {"coefficients": list(self.coefficients)}

    @classmethod
    def from_json(cls, data: dict) -> "SeriesTruncation":
        return cls(tuple(data["coefficients"]))


def _times_geometric(c: list[int], r: int, step: int = 1) -> None:
    # c <- c / (1 - r t^step), truncated in place
    for k in range(step, len(c)):
        c[k] += r * c[k - step]


def _times_linear(c: list[int], r: int, step: int = 1) -> None:
    # c <- c * (1 - r t^step), truncated in place
    for k in range(len(c) - 1, step - 1, -1):
        c[k] -= r * c[k - step]


def series_product(factors: Iterable[tuple[int, int]], max_degree: int) -> SeriesTruncation:
    """Truncation of the product of ``(1 - r t)^(-e)`` over ``(r, e)`` pairs.

    Exponents may be negative or zero.
    """
    c = [1] + [0] * max_degree
    for r, e in factors:
        op = _times_geometric if e > 0 else _times_linear
        for _ in range(abs(e)):
            op(c, r)
    return SeriesTruncation(tuple(c))


def enveloping_series(dims: GradedDims | Sequence[int], max_degree: int | None = None) -> SeriesTruncation:
    """Hilbert series of U(L) from dim L_d via PBW: prod_d (1 - t^d)^(-dim L_d)."""
    dims = tuple(dims)
    if max_degree is None:
        max_degree = len(dims)
    if max_degree > len(dims):
        raise ValueError(f"dimensions known through degree {len(dims)}, asked for {max_degree}")
    c = [1] + [0] * max_degree
    for d in range(1, max_degree + 1):
        for _ in range(dims[d - 1]):
            _times_geometric(c, 1, d)
    return SeriesTruncation(tuple(c))


def dims_from_enveloping(series: SeriesTruncation) -> GradedDims:
    """Invert PBW: recover dim L_d from the enveloping-algebra series."""
    c = list(series.coefficients)
    if c[0] != 1:
        raise ValueError("enveloping series must start with 1")
    dims = []
    for d in range(1, len(c)):
        e = c[d]
        dims.append(e)
        for _ in range(abs(e)):
            (_times_linear if e > 0 else _times_geometric)(c, 1, d)
    return GradedDims(tuple(dims))
