"""Rooted maps, connected matchings, and the tail-swap bijection.

A rooted map is a graph embedded in an oriented surface, encoded by its
darts (half-edges): a rotation permutation giving the counterclockwise
order of darts around each vertex, a fixed-point-free pairing matching the
two darts of each edge, and a distinguished root dart.  Maps with n edges
are counted by the shifted moment mu_2n(c+1) at c = 1, and refine it by
c^(vertices - 1).

The chain runs maps -> connected matchings -> arbitrary matchings with
tagged nonnested edges, the second step by repeatedly swapping the tails
of a distinguished edge through the crossings it is involved in.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .matchings import Edge, Matching, is_connected
from .polynomials import Poly


def _cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        h = start
        while not seen[h]:
            seen[h] = True
            cycle.append(h)
            h = perm[h]
        out.append(tuple(cycle))
    return out


@dataclass(frozen=True)
class RootedMap:
    """A connected map on darts 0..2E-1; root is None only when E = 0."""

    rotation: tuple[int, ...]
    pairing: tuple[int, ...]
    root: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(self.rotation))
        object.__setattr__(self, "pairing", tuple(self.pairing))
        n = len(self.rotation)
        if len(self.pairing) != n:
            raise ValueError("rotation and pairing must act on the same darts")
        if n % 2:
            raise ValueError("dart count must be even")
        if sorted(self.rotation) != list(range(n)):
            raise ValueError("rotation is not a permutation")
        for h, p in enumerate(self.pairing):
            if not (0 <= p < n) or p == h or self.pairing[p] != h:
                raise ValueError("pairing is not a fixed-point-free involution")
        if n == 0:
            if self.root is not None:
                raise ValueError("the empty map has no root dart")
            return
        if self.root is None or not (0 <= self.root < n):
            raise ValueError("root must be a dart")
        reached = {self.root}
        stack = [self.root]
        while stack:
            h = stack.pop()
            for nxt in (self.rotation[h], self.pairing[h]):
                if nxt not in reached:
                    reached.add(nxt)
                    stack.append(nxt)
        if len(reached) != n:
            raise ValueError("map is not connected")

    @property
    def edge_count(self) -> int:
        return len(self.rotation) // 2

    @property
    def vertex_count(self) -> int:
        if not self.rotation:
            return 1
        return len(_cycles(self.rotation))

    def weight(self) -> Poly:
        return Poly.monomial(0, self.vertex_count - 1)

    def canonical(self) -> "RootedMap":
        """The same map relabeled so breadth-first discovery order is 0,1,2,...

        Neighbors of a dart are its rotation successor, then its partner.
        Isomorphic rooted maps have equal canonical forms.
        """
        if not self.rotation:
            return self
        order = []
        seen = {self.root}
        queue = deque([self.root])
        while queue:
            h = queue.popleft()
            order.append(h)
            for nxt in (self.rotation[h], self.pairing[h]):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        relabel = {old: new for new, old in enumerate(order)}
        n = len(self.rotation)
        rot = [0] * n
        pair = [0] * n
        for old, new in relabel.items():
            rot[new] = relabel[self.rotation[old]]
            pair[new] = relabel[self.pairing[old]]
        return RootedMap(tuple(rot), tuple(pair), 0)

    def to_json_obj(self) -> dict:
        return {
            "rotation": list(self.rotation),
            "pairing": list(self.pairing),
            "root": self.root,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RootedMap":
        return cls(tuple(obj["rotation"]), tuple(obj["pairing"]), obj["root"])


def _fpf_involutions(n: int) -> Iterator[tuple[int, ...]]:
    def rec(assigned: dict[int, int]) -> Iterator[tuple[int, ...]]:
        free = [h for h in range(n) if h not in assigned]
        if not free:
            yield tuple(assigned[h] for h in range(n))
            return
        a = free[0]
        for b in free[1:]:
            assigned[a] = b
            assigned[b] = a
            yield from rec(assigned)
            del assigned[a], assigned[b]

    yield from rec({})


def _discovery_is_identity(rotation: tuple[int, ...], pairing: tuple[int, ...]) -> bool:
    """Whether BFS from dart 0 discovers darts in the order 0, 1, 2, ...

    Exactly one representative of each rooted-map isomorphism class passes,
    and passing implies connectivity.
    """
    n = len(rotation)
    seen = bytearray(n)
    seen[0] = 1
    expect = 1
    queue = [0]
    qi = 0
    while qi < len(queue):
        h = queue[qi]
        qi += 1
        for nxt in (rotation[h], pairing[h]):
            if not seen[nxt]:
                if nxt != expect:
                    return False
                seen[nxt] = 1
                expect += 1
                queue.append(nxt)
    return expect == n


def enumerate_rooted_maps(edge_count: int) -> Iterator[RootedMap]:
    """All rooted maps with the given number of edges, once each.

    Brute force over rotation and pairing pairs, kept when already in
    canonical labeling.  Feasible for small edge counts only; the pair
    count grows as (2E)! (2E-1)!!.
    """
    if edge_count < 0:
        raise ValueError("edge count must be nonnegative")
    if edge_count == 0:
        yield RootedMap((), (), None)
        return
    n = 2 * edge_count
    for pairing in _fpf_involutions(n):
        for rotation in itertools.permutations(range(n)):
            if _discovery_is_identity(rotation, pairing):
                yield RootedMap(rotation, pairing, 0)


def map_to_connected_matching(rm: RootedMap) -> Matching:
    """Trace the map into a connected matching on 2E + 2 vertices.

    A marker loop is spliced into the root vertex just before the root
    dart.  Visiting a vertex writes its full rotation cycle starting after
    the entry dart; the next vertex entered is the partner of the leftmost
    written dart whose partner is unwritten.  Word positions of partner
    darts form the edges; the marker edge contains position 1.
    """
    n = len(rm.rotation)
    h1, h2 = n, n + 1
    rot = list(rm.rotation) + [0, 0]
    pair = list(rm.pairing) + [h2, h1]
    if n == 0:
        rot[h1] = h2
        rot[h2] = h1
    else:
        root = rm.root
        rot[rm.rotation.index(root)] = h2
        rot[h2] = h1
        rot[h1] = root

    word: list[int] = []
    pos: dict[int, int] = {}

    def visit(entry: int) -> None:
        h = rot[entry]
        while True:
            word.append(h)
            pos[h] = len(word)
            if h == entry:
                return
            h = rot[h]

    visit(h2)
    while len(word) < n + 2:
        for d in word:
            if pair[d] not in pos:
                visit(pair[d])
                break
    edges = tuple((p, pos[pair[d]]) for d, p in pos.items() if p < pos[pair[d]])
    return Matching(n + 2, edges)


def double_occurrence_word(m: Matching) -> tuple[int, ...]:
    """Edge letters in vertex order, numbered by first occurrence."""
    letter: dict[Edge, int] = {}
    out = []
    for v in range(1, m.n + 1):
        e = m.edge_of(v)
        if e is None:
            raise ValueError("needs a complete matching")
        if e not in letter:
            letter[e] = len(letter) + 1
        out.append(letter[e])
    return tuple(out)


def marked_word(m: Matching) -> tuple[str, ...]:
    """Like double_occurrence_word, but the edge at vertex 1 prints as "a"."""
    marker = m.edge_of(1)
    if marker is None:
        raise ValueError("needs vertex 1 matched")
    letter: dict[Edge, str] = {marker: "a"}
    out = []
    for v in range(1, m.n + 1):
        e = m.edge_of(v)
        if e is None:
            raise ValueError("needs a complete matching")
        if e not in letter:
            letter[e] = str(len(letter))
        out.append(letter[e])
    return tuple(out)


def connected_matching_tags(m: Matching) -> frozenset[Edge]:
    """Edges nested by nothing, excluding any edge containing vertex 1."""
    out = []
    for a, b in m.edges:
        if a == 1:
            continue
        if any(a2 < a and b < b2 for a2, b2 in m.edges):
            continue
        out.append((a, b))
    return frozenset(out)


def connected_matching_weight(m: Matching) -> Poly:
    return Poly.monomial(0, len(connected_matching_tags(m)))


def _crossing_count(edges: list[Edge]) -> int:
    return sum(
        1
        for e, f in itertools.combinations(edges, 2)
        for a, b in [min(e, f)]
        for a2, b2 in [max(e, f)]
        if a < a2 < b < b2
    )


def tail_swap(m: Matching) -> tuple[Matching, frozenset[Edge]]:
    """Turn a connected matching into a smaller matching with tagged edges.

    The edge at vertex 1 plays the marker.  While some edge starts inside
    the marker and ends beyond it, the leftmost such edge trades tails with
    the marker, which grows; each trade lowers the total crossing count.
    The marker ends at the last vertex, is dropped, and the rest renumbers
    down to a matching on two fewer vertices.  Tags travel with the traded
    edges; they start on the nonnested edges away from vertex 1 and end on
    nonnested edges of the result.
    """
    if not m.is_complete():
        raise ValueError("needs a complete matching")
    if not is_connected(m):
        raise ValueError("needs a connected matching")
    if m.n == 0:
        raise ValueError("needs at least one edge")
    marker = m.edge_of(1)
    edges = [e for e in m.edges if e != marker]
    tags = set(connected_matching_tags(m))
    while True:
        f = marker[1]
        crossers = [e for e in edges if e[0] < f < e[1]]
        if not crossers:
            break
        chosen = min(crossers)
        assert chosen in tags, f"untagged crossing edge {chosen!r}"
        before = _crossing_count(edges + [marker])
        a, b = chosen
        edges.remove(chosen)
        tags.remove(chosen)
        edges.append((a, f))
        tags.add((a, f))
        marker = (1, b)
        assert _crossing_count(edges + [marker]) < before, "crossings did not drop"
    assert marker == (1, m.n), "marker did not reach the last vertex"
    return (
        Matching(m.n - 2, tuple((a - 1, b - 1) for a, b in edges)),
        frozenset((a - 1, b - 1) for a, b in tags),
    )


def tail_swap_inverse(m: Matching, tags: frozenset[Edge] | set[Edge]) -> Matching:
    """Rebuild the connected matching from a matching and tagged edges.

    Everything shifts up by one and a marker edge spans vertex 1 to the new
    last vertex; the tagged edges, taken by right endpoint in descending
    order, trade tails with the marker, which shrinks.  Tags must sit on
    edges nested by nothing.
    """
    if not m.is_complete():
        raise ValueError("needs a complete matching")
    tags = frozenset(tags)
    for e in tags:
        if e not in m.edges:
            raise ValueError(f"tag {e!r} is not an edge")
        a, b = e
        if any(a2 < a and b < b2 for a2, b2 in m.edges):
            raise ValueError(f"tag {e!r} sits on a nested edge")
    edges = [(a + 1, b + 1) for a, b in m.edges]
    marker = (1, m.n + 2)
    for a, b in sorted(tags, key=lambda e: e[1], reverse=True):
        a, b = a + 1, b + 1
        edges.remove((a, b))
        edges.append((a, marker[1]))
        marker = (1, b)
    return Matching(m.n + 2, tuple(edges) + (marker,))
