"""Partial matchings on {1, ..., n}: enumeration, edge statistics, weights.

A matching is a set of disjoint edges (i, j) with 1 <= i < j <= n; vertices
on no edge are fixed points.  Enumeration is deterministic: the smallest
unmatched vertex is joined to each larger available vertex in increasing
order (with the fixed-point branch first for partial matchings), so repeated
runs stream identical sequences.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .polynomials import Poly

Edge = tuple[int, int]

DEFAULT_CAP = 16


@dataclass(frozen=True)
class Matching:
    """A partial matching on {1, ..., n}; edges are stored sorted."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        object.__setattr__(self, "edges", norm)
        seen: set[int] = set()
        for a, b in norm:
            if not (1 <= a < b <= self.n):
                raise ValueError(f"edge ({a},{b}) out of range for n={self.n}")
            if a in seen or b in seen:
                raise ValueError(f"vertex reused in edge ({a},{b})")
            seen.update((a, b))

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "Matching":
        """Parse the pair form "(1,5)(2,4)"; n defaults to the max endpoint."""
        stripped = text.strip()
        pairs = re.findall(r"\((\d+)\s*,\s*(\d+)\)", stripped)
        if re.sub(r"\(\d+\s*,\s*\d+\)|\s", "", stripped):
            raise ValueError(f"unparseable matching text: {text!r}")
        edges = tuple((int(a), int(b)) for a, b in pairs)
        if n is None:
            n = max((b for _, b in edges), default=0)
        return cls(n, edges)

    def to_text(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.edges)

    def __str__(self) -> str:
        return self.to_text()

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Matching":
        return cls(int(obj["n"]), tuple((int(a), int(b)) for a, b in obj["edges"]))

    def fixed_points(self) -> tuple[int, ...]:
        used = {v for e in self.edges for v in e}
        return tuple(v for v in range(1, self.n + 1) if v not in used)

    def is_complete(self) -> bool:
        return 2 * len(self.edges) == self.n

    def partner(self, v: int) -> int | None:
        for a, b in self.edges:
            if v == a:
                return b
            if v == b:
                return a
        return None

    def edge_of(self, v: int) -> Edge | None:
        for e in self.edges:
            if v in e:
                return e
        return None


@dataclass(frozen=True)
class EdgeStats:
    is_nested_by_other: bool
    has_left_crossing: bool
    has_right_crossing: bool
    nests_edge_or_fixed_point: bool


class WeightScheme(Enum):
    """Edge weightings for moment and polynomial generating functions.

    The two MOMENT schemes weight complete matchings: an edge that is not
    nested by any other edge (NONNESTED), or that has no right (left)
    crossing, gets weight c, all others get 1.  POLY_RIGHTMOST weights
    partial matchings: fixed points contribute x, edges that nest no fixed
    point or edge and have no left crossing contribute -c, all other edges
    contribute -1.  POLY_REVERSED_RIGHTMOST is the mirror image, obtained by
    weighting the reversed matching under POLY_RIGHTMOST.
    """

    MOMENT_NONNESTED = "nonnested"
    MOMENT_NO_RIGHT_CROSSING = "no-right-crossing"
    MOMENT_NO_LEFT_CROSSING = "no-left-crossing"
    POLY_RIGHTMOST = "rightmost"
    POLY_REVERSED_RIGHTMOST = "reversed-rightmost"


MOMENT_SCHEMES = (
    WeightScheme.MOMENT_NONNESTED,
    WeightScheme.MOMENT_NO_RIGHT_CROSSING,
    WeightScheme.MOMENT_NO_LEFT_CROSSING,
)


def edge_stats(m: Matching, e: Edge) -> EdgeStats:
    """Nesting and crossing relations of edge e inside matching m."""
    if e not in m.edges:
        raise ValueError(f"edge {e!r} not in matching {m}")
    a, b = e
    nested = False
    left = False
    right = False
    nests = any(a < v < b for v in m.fixed_points())
    for a2, b2 in m.edges:
        if (a2, b2) == e:
            continue
        if a2 < a and b < b2:
            nested = True
        if a2 < a < b2 < b:
            left = True
        if a < a2 < b < b2:
            right = True
        if a < a2 and b2 < b:
            nests = True
    return EdgeStats(nested, left, right, nests)


def nonnested_edges(m: Matching) -> tuple[Edge, ...]:
    """Edges of m not nested by any other edge."""
    return tuple(
        e for e in m.edges
        if not any(a2 < e[0] and e[1] < b2 for a2, b2 in m.edges if (a2, b2) != e)
    )


def weight(m: Matching, scheme: WeightScheme) -> Poly:
    """The weight of one matching; always a signed monomial in x and c."""
    if scheme is WeightScheme.POLY_REVERSED_RIGHTMOST:
        return weight(reverse(m), WeightScheme.POLY_RIGHTMOST)
    if scheme in MOMENT_SCHEMES and not m.is_complete():
        raise ValueError("moment weightings apply to complete matchings only")
    stats = {e: edge_stats(m, e) for e in m.edges}
    if scheme is WeightScheme.MOMENT_NONNESTED:
        cd = sum(1 for s in stats.values() if not s.is_nested_by_other)
        return Poly.monomial(0, cd)
    if scheme is WeightScheme.MOMENT_NO_RIGHT_CROSSING:
        cd = sum(1 for s in stats.values() if not s.has_right_crossing)
        return Poly.monomial(0, cd)
    if scheme is WeightScheme.MOMENT_NO_LEFT_CROSSING:
        cd = sum(1 for s in stats.values() if not s.has_left_crossing)
        return Poly.monomial(0, cd)
    if scheme is WeightScheme.POLY_RIGHTMOST:
        special = sum(
            1 for s in stats.values()
            if not s.nests_edge_or_fixed_point and not s.has_left_crossing
        )
        sign = -1 if len(m.edges) % 2 else 1
        return Poly.monomial(len(m.fixed_points()), special, sign)
    raise ValueError(f"unknown weight scheme {scheme!r}")


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")


def _complete_pairings(vertices: tuple[int, ...]) -> Iterator[tuple[Edge, ...]]:
    if not vertices:
        yield ()
        return
    v, rest = vertices[0], vertices[1:]
    for i, w in enumerate(rest):
        for tail in _complete_pairings(rest[:i] + rest[i + 1:]):
            yield ((v, w),) + tail


def _partial_pairings(vertices: tuple[int, ...]) -> Iterator[tuple[Edge, ...]]:
    if not vertices:
        yield ()
        return
    v, rest = vertices[0], vertices[1:]
    yield from _partial_pairings(rest)
    for i, w in enumerate(rest):
        for tail in _partial_pairings(rest[:i] + rest[i + 1:]):
            yield ((v, w),) + tail


def enumerate_complete(n: int, cap: int = DEFAULT_CAP) -> Iterator[Matching]:
    """All complete matchings on {1, ..., n}; there are (n-1)!! of them."""
    _check_cap(n, cap)
    if n % 2:
        raise ValueError("complete matchings need an even vertex count")
    for edges in _complete_pairings(tuple(range(1, n + 1))):
        yield Matching(n, edges)


def enumerate_incomplete(n: int, cap: int = DEFAULT_CAP) -> Iterator[Matching]:
    """All partial matchings on {1, ..., n} (fixed points allowed)."""
    _check_cap(n, cap)
    for edges in _partial_pairings(tuple(range(1, n + 1))):
        yield Matching(n, edges)


@dataclass(frozen=True)
class Blocks:
    """Consecutive blocks partitioning {1, ..., total}; sizes in given order."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if any(s < 0 for s in self.sizes):
            raise ValueError("block sizes must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def block_of(self, v: int) -> int:
        if not (1 <= v <= self.total):
            raise ValueError(f"vertex {v} out of range")
        upper = 0
        for i, s in enumerate(self.sizes):
            upper += s
            if v <= upper:
                return i
        raise AssertionError("unreachable")


def enumerate_inhomogeneous(blocks: Blocks, cap: int = DEFAULT_CAP) -> Iterator[Matching]:
    """Complete matchings on the block structure with no edge inside a block."""
    n = blocks.total
    _check_cap(n, cap)
    if n % 2:
        raise ValueError("inhomogeneous matchings need an even vertex total")
    block_of = [0] * (n + 1)
    upper = 0
    for i, s in enumerate(blocks.sizes):
        for v in range(upper + 1, upper + s + 1):
            block_of[v] = i
        upper += s

    def rec(vertices: tuple[int, ...]) -> Iterator[tuple[Edge, ...]]:
        if not vertices:
            yield ()
            return
        v, rest = vertices[0], vertices[1:]
        for i, w in enumerate(rest):
            if block_of[w] == block_of[v]:
                continue
            for tail in rec(rest[:i] + rest[i + 1:]):
                yield ((v, w),) + tail

    for edges in rec(tuple(range(1, n + 1))):
        yield Matching(n, edges)


def reverse(m: Matching) -> Matching:
    """Mirror the matching: vertex i goes to n + 1 - i."""
    n = m.n
    return Matching(n, tuple((n + 1 - b, n + 1 - a) for a, b in m.edges))


def is_connected(m: Matching) -> bool:
    """True when no proper prefix {1..2j} is a union of whole edges.

    Equivalently, the matching's double occurrence word is not a
    concatenation of two shorter double occurrence words.
    """
    if not m.is_complete():
        raise ValueError("connectivity is defined for complete matchings")
    half = m.n // 2
    for j in range(1, half):
        boundary = 2 * j
        if not any(a <= boundary < b for a, b in m.edges):
            return False
    return True
