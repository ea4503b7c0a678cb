"""Lattice of flats, its Möbius function, and the Orlik-Solomon Hilbert series."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .matroid import Matroid, bits, popcount

MAX_LATTICE_ELEMENTS = 64


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) or (0,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else -1

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def text(self, var: str = "z") -> str:
        return format_terms(self.coeffs, var)

    def __str__(self):
        return self.text()

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls(tuple(data["coeffs"]))


def format_terms(coeffs, var: str) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class FlatsLattice:
    """Flats grouped by rank, with μ(bottom, F) for every flat F."""

    matroid: Matroid
    by_rank: tuple[tuple[int, ...], ...]
    mobius: dict

    @property
    def rank(self) -> int:
        return len(self.by_rank) - 1

    @property
    def bottom(self) -> int:
        return self.by_rank[0][0]

    @property
    def top(self) -> int:
        return self.by_rank[-1][0]

    def flats(self, k: int | None = None) -> list[tuple[str, ...]]:
        g = self.matroid.ground
        groups = self.by_rank if k is None else (self.by_rank[k],)
        return [g.labels(f) for grp in groups for f in grp]

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (G, F): G ⊂ F and rank F = rank G + 1."""
        out = []
        for k in range(self.rank):
            for g in self.by_rank[k]:
                for f in self.by_rank[k + 1]:
                    if g & ~f == 0:
                        out.append((g, f))
        return out

    def whitney_numbers(self) -> list[int]:
        """Unsigned Whitney numbers of the first kind, by rank."""
        return [sum(abs(self.mobius[f]) for f in grp) for grp in self.by_rank]

    def to_json(self) -> dict:
        g = self.matroid.ground
        return {
            "elements": list(g.elements),
            "ranks": [
                [{"flat": list(g.labels(f)), "mobius": self.mobius[f]} for f in grp]
                for grp in self.by_rank
            ],
        }


def flats_lattice(m: Matroid) -> FlatsLattice:
    if len(m.ground) > MAX_LATTICE_ELEMENTS:
        raise InputError(f"lattice computations are limited to {MAX_LATTICE_ELEMENTS} elements")
    r = m.rank()
    by_rank = tuple(tuple(m.flat_masks(k)) for k in range(r + 1))
    mobius: dict[int, int] = {}
    for k, grp in enumerate(by_rank):
        for f in grp:
            if k == 0:
                mobius[f] = 1
                continue
            mobius[f] = -sum(mobius[g] for j in range(k) for g in by_rank[j] if g & ~f == 0)
    return FlatsLattice(m, by_rank, mobius)


def os_hilbert_series(m: Matroid) -> Polynomial:
    return Polynomial(tuple(flats_lattice(m).whitney_numbers()))


def rank3_series(n: int, d: int) -> Polynomial:
    """Closed form ``1 + n z + d z^2 + (d + 1 - n) z^3`` for a rank-3 matroid.

    ``d`` is the sum of ``|A| - 1`` over all 2-flats ``A``.
    """
    return Polynomial((1, n, d, d + 1 - n))


def rank3_d(m: Matroid) -> int:
    return sum(popcount(f) - 1 for f in m.flat_masks(2))


def region_count(m: Matroid) -> int:
    """Sum of |μ| over the lattice; the chamber count when ``m`` is realized over R."""
    return os_hilbert_series(m)(1)


REGION_CAVEAT = "valid as a chamber count only when the matroid is realized by a real arrangement"


def brute_force_mobius(lattice: FlatsLattice) -> dict:
    """Möbius values from the defining sum rule over all lower flats (test oracle)."""
    allf = [f for grp in lattice.by_rank for f in grp]
    mu = {}
    for f in sorted(allf, key=popcount):
        below = [g for g in allf if g != f and g & ~f == 0]
        mu[f] = 1 if not below else -sum(mu[g] for g in below)
    return mu


__all__ = [
    "Polynomial", "FlatsLattice", "flats_lattice", "os_hilbert_series", "rank3_series",
    "rank3_d", "region_count", "REGION_CAVEAT", "format_terms", "brute_force_mobius",
]
