"""Moments of the associated Hermite orthogonality functional.

The functional L_c sends x^n to the nth moment mu_n(c), the generating
function of weighted Dyck paths: an up step weighs 1 and a down step from
height j weighs j - 1 + c.  Orthogonality L_c(H_n H_m) = 0 (n != m) and
(c)_n (n = m) is also checked combinatorially here, through paired
matchings and a sign-reversing involution on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterator

from .matchings import DEFAULT_CAP, Edge, Matching, WeightScheme, weight
from .models import associated_hermite
from .polynomials import C, Poly, rising_factorial

DyckPath = tuple[int, ...]


def enumerate_dyck_paths(length: int) -> Iterator[DyckPath]:
    """All +-1 step sequences of the given length from height 0 back to 0."""
    if length < 0:
        raise ValueError("length must be nonnegative")

    def rec(steps: tuple[int, ...], height: int, remaining: int) -> Iterator[DyckPath]:
        if remaining == 0:
            if height == 0:
                yield steps
            return
        if height > remaining:
            return
        yield from rec(steps + (1,), height + 1, remaining - 1)
        if height > 0:
            yield from rec(steps + (-1,), height - 1, remaining - 1)

    yield from rec((), 0, length)


@cache
def moment(n: int) -> Poly:
    """The nth moment mu_n(c), summed over weighted Dyck paths."""
    if n < 0:
        raise ValueError("moment index must be nonnegative")
    if n % 2:
        return Poly.zero()
    total = Poly.zero()
    for path in enumerate_dyck_paths(n):
        height = 0
        w = Poly.one()
        for step in path:
            if step == 1:
                height += 1
            else:
                w = w * (C + (height - 1))
                height -= 1
        total = total + w
    return total


def moment_via_matchings(n: int, scheme: WeightScheme, cap: int = DEFAULT_CAP) -> Poly:
    """The nth moment as a sum over complete matchings on [n]."""
    from .matchings import enumerate_complete

    if n % 2:
        return Poly.zero()
    total = Poly.zero()
    for m in enumerate_complete(n, cap=cap):
        total = total + weight(m, scheme)
    return total


def apply_functional(p: Poly) -> Poly:
    """Apply L_c coefficientwise: x^k c^m goes to mu_k(c) c^m."""
    total = Poly.zero()
    for (xd, cd), q in p.terms.items():
        total = total + q * Poly.monomial(0, cd) * moment(xd)
    return total


def inner_product(n: int, m: int) -> Poly:
    """L_c(H_n H_m); zero off the diagonal and (c)_n on it."""
    return apply_functional(associated_hermite(n) * associated_hermite(m))


# ----- paired matchings -----


@dataclass(frozen=True)
class PairedMatching:
    """A complete matching on [n] + [m] with black and green edges.

    Vertices 1..n form the left row and n+1..n+m the right row.  Black
    edges stay inside one row (they come from the two polynomial factors);
    green edges are unrestricted (they come from the moment functional).
    """

    n: int
    m: int
    black: tuple[Edge, ...]
    green: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "black", tuple(sorted(self.black)))
        object.__setattr__(self, "green", tuple(sorted(self.green)))
        total = self.n + self.m
        seen: set[int] = set()
        for a, b in self.black + self.green:
            if not (1 <= a < b <= total):
                raise ValueError(f"edge ({a},{b}) out of range")
            if a in seen or b in seen:
                raise ValueError(f"vertex reused in edge ({a},{b})")
            seen.update((a, b))
        if len(seen) != total:
            raise ValueError("paired matching must be complete")
        for e in self.black:
            if not self.is_homogeneous(e):
                raise ValueError(f"black edge {e!r} crosses the row boundary")

    def is_homogeneous(self, e: Edge) -> bool:
        a, b = e
        return (b <= self.n) or (a > self.n)

    def all_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.black + self.green))

    def recolored(self, e: Edge) -> "PairedMatching":
        if e in self.black:
            return PairedMatching(
                self.n, self.m,
                tuple(x for x in self.black if x != e), self.green + (e,),
            )
        if e in self.green:
            return PairedMatching(
                self.n, self.m,
                self.black + (e,), tuple(x for x in self.green if x != e),
            )
        raise ValueError(f"edge {e!r} not present")


def enumerate_paired(n: int, m: int, cap: int = DEFAULT_CAP) -> Iterator[PairedMatching]:
    """All paired matchings on [n] + [m].

    Every complete matching of the n + m vertices is colored in all ways
    that keep black edges homogeneous.  An odd total yields nothing.
    """
    from .matchings import enumerate_complete

    total = n + m
    if total > cap:
        raise ValueError(f"n+m={total} exceeds the enumeration cap {cap}")
    if total % 2:
        return
    for matching in enumerate_complete(total, cap=cap):
        edges = matching.edges
        homogeneous = [e for e in edges if (e[1] <= n) or (e[0] > n)]
        inhomogeneous = tuple(e for e in edges if e not in homogeneous)
        for mask in range(1 << len(homogeneous)):
            black = tuple(e for i, e in enumerate(homogeneous) if mask >> i & 1)
            green = inhomogeneous + tuple(
                e for i, e in enumerate(homogeneous) if not mask >> i & 1
            )
            yield PairedMatching(n, m, black, green)


def paired_weight(pm: PairedMatching) -> Poly:
    """The signed weight of a paired matching.

    A black edge weighs -c when it nests no edge, has no green crossing,
    and has no left black crossing; otherwise -1.  A green edge weighs c
    when it has no right green crossing; otherwise 1.
    """
    edges = pm.all_edges()
    sign = 1
    cd = 0
    for e in pm.black:
        a, b = e
        nests = any(a < a2 and b2 < b for a2, b2 in edges if (a2, b2) != e)
        green_cross = any(
            (a2 < a < b2 < b) or (a < a2 < b < b2) for a2, b2 in pm.green
        )
        left_black = any(a2 < a < b2 < b for a2, b2 in pm.black)
        sign = -sign
        if not nests and not green_cross and not left_black:
            cd += 1
    for e in pm.green:
        a, b = e
        if not any(a < a2 < b < b2 for a2, b2 in pm.green):
            cd += 1
    return Poly.monomial(0, cd, sign)


def flip_candidate(pm: PairedMatching) -> Edge | None:
    """The leftmost homogeneous edge that nests no other edge, if any.

    When n >= m (the bigger block on the left) the candidate always lies in
    the left block, where it can have no left crossing, so changing its
    color reverses the sign of the weight and keeps its magnitude.  That
    pairs off everything except the all-green, all-spanning matchings.
    With n < m the candidate can sit in the right block underneath a
    spanning edge that crosses it from the left; recoloring is still an
    involution, but it only cancels weights in the aggregate, not edge for
    edge.  Returns None when no homogeneous edge exists, which forces
    n = m.
    """
    edges = pm.all_edges()
    best = None
    for e in edges:
        if not pm.is_homogeneous(e):
            continue
        a, b = e
        if any(a < a2 and b2 < b for a2, b2 in edges if (a2, b2) != e):
            continue
        if best is None or e < best:
            best = e
    return best


def orthogonality_involution(pm: PairedMatching) -> PairedMatching:
    """Recolor the edge found by flip_candidate; raises when none exists."""
    e = flip_candidate(pm)
    if e is None:
        raise ValueError("no homogeneous edge to flip; the matching is a fixed point")
    return pm.recolored(e)


# ----- fixed points of the involution and permutation statistics -----


def paired_to_permutation(pm: PairedMatching) -> tuple[int, ...]:
    """Read an all-spanning paired matching with n = m as a permutation.

    The right row, numbered inward (rightmost vertex is 1), is the domain;
    the left row, numbered outward, is the range.  Entry i of the result is
    the left endpoint matched to right label i.  Weight-c edges correspond
    to left-to-right maxima.
    """
    if pm.n != pm.m:
        raise ValueError("needs equal row sizes")
    if pm.black:
        raise ValueError("needs an all-green matching")
    n = pm.n
    partner = {}
    for a, b in pm.green:
        if b <= n or a > n:
            raise ValueError("needs every edge to span the rows")
        partner[b] = a
    return tuple(partner[2 * n + 1 - i] for i in range(1, n + 1))


def left_to_right_maxima(pi: tuple[int, ...]) -> int:
    count = 0
    best = 0
    for v in pi:
        if v > best:
            count += 1
            best = v
    return count


def cycle_count(pi: tuple[int, ...]) -> int:
    seen: set[int] = set()
    count = 0
    for start in range(1, len(pi) + 1):
        if start in seen:
            continue
        count += 1
        v = start
        while v not in seen:
            seen.add(v)
            v = pi[v - 1]
    return count


# ----- moment generating function as a continued fraction -----


def _series_mul(a: list[Poly], b: list[Poly], order: int) -> list[Poly]:
    out = [Poly.zero() for _ in range(order + 1)]
    for i, pa in enumerate(a):
        if pa.is_zero():
            continue
        for j, pb in enumerate(b):
            if i + j > order:
                break
            out[i + j] = out[i + j] + pa * pb
    return out


def _series_inv_one_minus(g: list[Poly], order: int) -> list[Poly]:
    """1/(1 - g) for a series g with zero constant term."""
    if not g[0].is_zero():
        raise ValueError("series must have zero constant term")
    out = [Poly.one()] + [Poly.zero()] * order
    power = [Poly.one()] + [Poly.zero()] * order
    for _ in range(order):
        power = _series_mul(power, g, order)
        if all(p.is_zero() for p in power):
            break
        for i in range(order + 1):
            out[i] = out[i] + power[i]
    return out


def moment_series(depth: int, order: int, shifted: bool = True) -> list[Poly]:
    """Coefficients of t^0 .. t^order of the truncated continued fraction.

    The fraction is 1/(1 - b_1 t^2/(1 - b_2 t^2/(...))) cut after depth
    levels, with b_j = c + j for the shifted moments mu_{2n}(c+1) and
    b_j = c + j - 1 for the plain ones.  Coefficients of t^(2n) with
    n < depth equal the corresponding moments.
    """
    if depth < 0 or order < 0:
        raise ValueError("depth and order must be nonnegative")
    level = [Poly.one()] + [Poly.zero()] * order
    for j in range(depth, 0, -1):
        b = C + (j if shifted else j - 1)
        g = [Poly.zero()] * (order + 1)
        for i, p in enumerate(level):
            if i + 2 > order:
                break
            g[i + 2] = b * p
        level = _series_inv_one_minus(g, order)
    return level
