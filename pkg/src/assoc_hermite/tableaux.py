"""Oscillating tableaux and their bijection with complete matchings.

An oscillating tableau is a walk on Young diagrams that starts and ends
at the empty shape and adds or removes exactly one box per step.  Walks
of length 2n correspond to complete matchings on [n]: processing vertices
left to right, a left endpoint row-inserts its edge label and a right
endpoint deletes the label's box.  Labels are assigned to edges by right
endpoint, in descending order, so the deleted label is always the largest
in the filling and its box is a corner.
"""

from __future__ import annotations

import re
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterator

from .matchings import DEFAULT_CAP, Matching
from .polynomials import Poly

Partition = tuple[int, ...]
Filling = tuple[tuple[int, ...], ...]


def _is_partition(shape: tuple[int, ...]) -> bool:
    return all(a >= b for a, b in zip(shape, shape[1:])) and all(a > 0 for a in shape)


def _step_size(prev: Partition, cur: Partition) -> int:
    """+1 for one box added, -1 for one removed; anything else is invalid."""
    if len(cur) == len(prev) + 1 and cur[:-1] == prev and cur[-1] == 1:
        return 1
    if len(prev) == len(cur) + 1 and prev[:-1] == cur and prev[-1] == 1:
        return -1
    if len(prev) != len(cur):
        return 0
    diffs = [(i, b - a) for i, (a, b) in enumerate(zip(prev, cur)) if a != b]
    if len(diffs) != 1 or abs(diffs[0][1]) != 1:
        return 0
    return diffs[0][1]


@dataclass(frozen=True)
class OscillatingTableau:
    """A sequence of partitions changing by one box, empty to empty."""

    shapes: tuple[Partition, ...]

    def __post_init__(self):
        shapes = tuple(tuple(s) for s in self.shapes)
        object.__setattr__(self, "shapes", shapes)
        if not shapes:
            raise ValueError("needs at least the empty shape")
        if shapes[0] != () or shapes[-1] != ():
            raise ValueError("walk must start and end at the empty shape")
        for s in shapes:
            if not _is_partition(s):
                raise ValueError(f"{s!r} is not a partition")
        for prev, cur in zip(shapes, shapes[1:]):
            if _step_size(prev, cur) == 0:
                raise ValueError(f"step {prev!r} -> {cur!r} is not a single box")

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    def to_text(self) -> str:
        def one(s: Partition) -> str:
            return "".join(str(part) for part in s) if s else "-"

        return ";".join(one(s) for s in self.shapes)

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def from_text(cls, text: str) -> "OscillatingTableau":
        shapes = []
        for chunk in text.strip().split(";"):
            chunk = chunk.strip()
            if chunk == "-":
                shapes.append(())
            elif re.fullmatch(r"\d+", chunk):
                shapes.append(tuple(int(d) for d in chunk))
            else:
                raise ValueError(f"bad shape {chunk!r}")
        return cls(tuple(shapes))

    def to_json_obj(self) -> list[list[int]]:
        return [list(s) for s in self.shapes]

    @classmethod
    def from_json_obj(cls, obj: list[list[int]]) -> "OscillatingTableau":
        return cls(tuple(tuple(s) for s in obj))


def _edge_labels(m: Matching) -> dict[int, int]:
    """Label each edge by its right endpoint, in descending order from 1.

    Returns a map from either endpoint to the shared label, so the edge
    closing last gets label 1 and the one closing first gets the largest.
    """
    by_right = sorted(m.edges, key=lambda e: e[1], reverse=True)
    labels: dict[int, int] = {}
    for i, (a, b) in enumerate(by_right, start=1):
        labels[a] = i
        labels[b] = i
    return labels


def _row_insert(rows: list[list[int]], value: int) -> None:
    v = value
    for row in rows:
        pos = bisect_right(row, v)
        if pos == len(row):
            row.append(v)
            return
        row[pos], v = v, row[pos]
    rows.append([v])


def _delete_value(rows: list[list[int]], value: int) -> None:
    """Remove a value that is the maximum of the filling.

    Being the maximum it sits at the end of its row with nothing below,
    so removing its box keeps the rows a valid filling.
    """
    for i, row in enumerate(rows):
        if row and row[-1] == value:
            if i + 1 < len(rows) and len(rows[i + 1]) >= len(row):
                continue
            row.pop()
            if not row:
                rows.pop(i)
            return
    raise ValueError(f"{value} is not removable")


def forward_fillings(m: Matching) -> list[Filling]:
    """The filling after each vertex, starting from the empty one.

    Entry k is the filling after processing vertices 1..k; the shapes of
    these fillings form the oscillating tableau of the matching.
    """
    if not m.is_complete():
        raise ValueError("needs a complete matching")
    labels = _edge_labels(m)
    rows: list[list[int]] = []
    out: list[Filling] = [()]
    for v in range(1, m.n + 1):
        a, b = m.edge_of(v)
        if v == a:
            _row_insert(rows, labels[v])
        else:
            _delete_value(rows, labels[v])
        out.append(tuple(tuple(r) for r in rows))
    return out


def matching_to_tableau(m: Matching) -> OscillatingTableau:
    shapes = tuple(tuple(len(r) for r in f) for f in forward_fillings(m))
    return OscillatingTableau(shapes)


def _reverse_insert(rows: list[list[int]], row_index: int) -> int:
    """Undo a row insertion whose final box is the corner of row_index."""
    v = rows[row_index].pop()
    if not rows[row_index]:
        rows.pop(row_index)
    for i in range(row_index - 1, -1, -1):
        pos = bisect_left(rows[i], v) - 1
        rows[i][pos], v = v, rows[i][pos]
    return v


def tableau_to_matching(t: OscillatingTableau) -> Matching:
    """Invert the bijection by running the walk backward.

    Walking from the final empty shape toward the start, a shrink step of
    the forward walk looks like growth: it reintroduces the next unseen
    label (counting up from 1) at the recorded corner and marks a right
    endpoint.  A forward growth step looks like a shrink: reverse insertion
    from its corner ejects the label, closing that edge at its left end.
    """
    shapes = t.shapes
    n = t.length
    rows: list[list[int]] = []
    next_label = 1
    right_end: dict[int, int] = {}
    edges = []
    for v in range(n, 0, -1):
        prev, cur = shapes[v - 1], shapes[v]
        if _step_size(prev, cur) == -1:
            row_index = next(
                (i for i in range(len(prev)) if i >= len(cur) or prev[i] != cur[i]),
            )
            while len(rows) <= row_index:
                rows.append([])
            rows[row_index].append(next_label)
            right_end[next_label] = v
            next_label += 1
        else:
            row_index = next(
                (i for i in range(len(cur)) if i >= len(prev) or prev[i] != cur[i]),
            )
            label = _reverse_insert(rows, row_index)
            edges.append((v, right_end.pop(label)))
    if rows or right_end:
        raise ValueError("walk did not close all edges")
    return Matching(n, tuple(edges))


def tableau_weight(t: OscillatingTableau, statistic: str = "column") -> Poly:
    """c to the number of labels confined to column 1 (or row 1).

    The column statistic matches the nonnested moment weight of the
    corresponding matching, edge for edge.  The row statistic is weaker:
    a label that leaves row 1 was bumped by an edge crossing it from the
    right, but an edge with such a crossing need not be the one bumped,
    so confinement to row 1 neither matches the no-right-crossing weight
    pointwise nor sums to the moments.  Smallest separating matching:
    (1,5)(2,4)(3,6), row weight c^2, no-right-crossing weight c.
    """
    m = tableau_to_matching(t)
    fillings = forward_fillings(m)
    labels = set(_edge_labels(m).values())
    if statistic not in ("column", "row"):
        raise ValueError(f"unknown statistic {statistic!r}")
    confined = 0
    for label in labels:
        ok = True
        for f in fillings:
            for i, row in enumerate(f):
                if label in row:
                    if statistic == "column" and row.index(label) > 0:
                        ok = False
                    if statistic == "row" and i > 0:
                        ok = False
        if ok:
            confined += 1
    return Poly.monomial(0, confined)


def enumerate_tableaux(length: int, cap: int = DEFAULT_CAP) -> Iterator[OscillatingTableau]:
    """All oscillating tableaux of the given even length, via matchings."""
    from .matchings import enumerate_complete

    for m in enumerate_complete(length, cap=cap):
        yield matching_to_tableau(m)
