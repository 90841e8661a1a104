"""Componentwise-ordered posets of pair facets and grid points, and their antichains.

A *pair facet* on [n] is a 2k-subset that splits into k runs of exactly
two consecutive labels, recorded as its sorted tuple.  A *grid point* is a
strictly increasing k-tuple x with 1 <= x_1 and x_k <= n-k; the bijection
grid_to_facet sends x to the union of the pairs {x_j + j - 1, x_j + j} and
is an isomorphism onto the pair facets ordered componentwise.  Both kinds
of element compare by componentwise <=; the strict variant requires every
coordinate to drop.  Antichains are stored sorted, and an antichain with
k = 0 may contain the empty tuple as its only element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .faces import Face

GridPoint = tuple[int, ...]


def componentwise_leq(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Componentwise order on equal-length tuples."""
    if len(a) != len(b):
        raise ValueError(f"cannot compare tuples of lengths {len(a)} and {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def componentwise_lt(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Strict variant: every coordinate strictly smaller."""
    if len(a) != len(b):
        raise ValueError(f"cannot compare tuples of lengths {len(a)} and {len(b)}")
    return all(x < y for x, y in zip(a, b))


def _is_pair_facet(f: tuple[int, ...], k: int, n: int) -> bool:
    if len(f) != 2 * k:
        return False
    if any(a >= b for a, b in zip(f, f[1:])):
        return False
    if f and (f[0] < 1 or f[-1] > n):
        return False
    return all(f[2 * j + 1] == f[2 * j] + 1 for j in range(k))


def _is_grid_point(x: tuple[int, ...], k: int, n: int) -> bool:
    if len(x) != k:
        return False
    if any(a >= b for a, b in zip(x, x[1:])):
        return False
    return not x or (x[0] >= 1 and x[-1] <= n - k)


@dataclass(frozen=True)
class Antichain:
    """A pairwise-incomparable set of pair facets (or grid points, if grid=True)."""

    k: int
    n: int
    elements: tuple[tuple[int, ...], ...]
    grid: bool = False

    def __post_init__(self) -> None:
        elems = tuple(sorted(set(map(tuple, self.elements))))
        object.__setattr__(self, "elements", elems)
        if self.k < 0 or self.n < 0:
            raise ValueError("ambient parameters must be non-negative")
        ok = _is_grid_point if self.grid else _is_pair_facet
        for e in elems:
            if not ok(e, self.k, self.n):
                kind = "grid point" if self.grid else "pair facet"
                raise ValueError(f"{e} is not a {kind} for k={self.k}, n={self.n}")
        for a, b in combinations(elems, 2):
            if componentwise_leq(a, b) or componentwise_leq(b, a):
                raise ValueError(f"elements {a} and {b} are comparable")

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    def to_grid(self) -> "Antichain":
        if self.grid:
            return self
        return Antichain(self.k, self.n, tuple(map(facet_to_grid, self.elements)), grid=True)

    def to_pair_facets(self) -> "Antichain":
        if not self.grid:
            return self
        return Antichain(self.k, self.n, tuple(map(grid_to_facet, self.elements)), grid=False)


def antichain_leq(t: Antichain, s: Antichain) -> bool:
    """Every element of t lies componentwise below some element of s."""
    if (t.k, t.n, t.grid) != (s.k, s.n, s.grid):
        raise ValueError("antichains live in different ambient posets")
    return all(any(componentwise_leq(g, f) for f in s) for g in t)


def antichain_lt(t: Antichain, s: Antichain) -> bool:
    """Every element of t lies strictly below some element of s, coordinatewise."""
    if (t.k, t.n, t.grid) != (s.k, s.n, s.grid):
        raise ValueError("antichains live in different ambient posets")
    return all(any(componentwise_lt(g, f) for f in s) for g in t)


@lru_cache(maxsize=None)
def pair_facets(k: int, m: int, n: int) -> tuple[Face, ...]:
    """All pair facets on [n] whose leftmost label is at least m, sorted.

    For k = 0 the single empty facet is returned regardless of the window.
    """
    if k < 0 or m < 1:
        raise ValueError(f"bad parameters k={k}, m={m}")
    if k == 0:
        return ((),)
    out = []
    # pair starts i_1 < ... < i_k with i_1 >= m, i_k <= n-1, gaps >= 2;
    # subtracting t-1 from the t-th start turns the gaps into strict increase
    for c in combinations(range(m, n - k + 1), k):
        starts = tuple(c[t] + t for t in range(k))
        out.append(tuple(v for i in starts for v in (i, i + 1)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def grid_points(k: int, n: int) -> tuple[GridPoint, ...]:
    """All grid points for the given ambient, sorted."""
    if k < 0:
        raise ValueError(f"bad parameter k={k}")
    if k == 0:
        return ((),)
    return tuple(combinations(range(1, n - k + 1), k))


def grid_to_facet(x: GridPoint) -> Face:
    """Pair facet whose j-th pair starts at x_j + j - 1."""
    return tuple(v for j, xj in enumerate(x) for v in (xj + j, xj + j + 1))


def facet_to_grid(f: Face) -> GridPoint:
    """Inverse of grid_to_facet."""
    return tuple(f[2 * j] - j for j in range(len(f) // 2))


def max_slope_element(k: int, n: int) -> GridPoint:
    """The grid point (1, n-2k+2, ..., n-k) singled out by the census family."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"no such element for k={k}, n={n}")
    return (1,) + tuple(range(n - 2 * k + 2, n - k + 1))


def shift_down(s: Antichain) -> Antichain:
    """Drop elements with a coordinate at 1 and lower the rest by one."""
    kept = tuple(
        tuple(v - 1 for v in e) for e in s.elements if e and e[0] > 1)
    return Antichain(s.k, s.n, kept, grid=s.grid)


def _poset_elements(s: Antichain) -> tuple[tuple[int, ...], ...]:
    return grid_points(s.k, s.n) if s.grid else pair_facets(s.k, 1, s.n)


def order_ideal(s: Antichain) -> frozenset[tuple[int, ...]]:
    """Downward closure of s in its ambient poset."""
    return frozenset(
        x for x in _poset_elements(s)
        if any(componentwise_leq(x, e) for e in s))


def ideal_with_min(s: Antichain, m: int) -> frozenset[tuple[int, ...]]:
    """Members of the order ideal of s whose smallest label is at least m.

    The empty facet has no labels and passes every such filter.
    """
    if m < 1:
        raise ValueError(f"minimum label must be at least 1, got {m}")
    return frozenset(x for x in order_ideal(s) if not x or x[0] >= m)


def maximal_elements(xs: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Maximal members of a set of equal-length tuples, sorted."""
    pool = set(xs)
    return tuple(sorted(
        x for x in pool
        if not any(x != y and componentwise_leq(x, y) for y in pool)))


def restrict(s: Antichain, interval: tuple[int, int]) -> Antichain:
    """Antichain of tails extending a fixed initial even run.

    For the run J = [j, j+2l-1] given by `interval`, collect every facet in
    the order ideal of s that starts with exactly J and continues at or after
    j+2l, strip J from each, and return the maximal tails.  The result lives
    among pair facets with l fewer pairs; when l = k the only possible tail
    is the empty facet.
    """
    if s.grid:
        raise ValueError("restrict operates on pair-facet antichains")
    j, hi = interval
    length = hi - j + 1
    if length < 2 or length % 2 or j < 1:
        raise ValueError(f"need an even interval [j, j+2l-1] with j >= 1, got {interval}")
    l = length // 2
    if l > s.k:
        raise ValueError(f"interval longer than the facets: {interval}")
    run = tuple(range(j, j + 2 * l))
    tails = []
    for x in order_ideal(s):
        if x[:2 * l] == run and (len(x) == 2 * l or x[2 * l] >= j + 2 * l):
            tails.append(x[2 * l:])
    return Antichain(s.k - l, s.n, maximal_elements(tails), grid=False)


def enumerate_antichains(
    k: int, n: int, must_contain: GridPoint | None = None,
) -> Iterator[Antichain]:
    """All antichains of grid points, in lexicographic order of their element lists.

    With must_contain, only antichains through that grid point are produced;
    elements comparable to it are pruned up front.
    """
    if k < 1 or n < 2 * k:
        raise ValueError(f"ambient requires k >= 1 and n >= 2k, got k={k}, n={n}")
    pts = list(grid_points(k, n))
    target = None
    if must_contain is not None:
        if must_contain not in set(pts):
            raise ValueError(f"{must_contain} is not a grid point for k={k}, n={n}")
        pts = [p for p in pts
               if p == must_contain
               or not (componentwise_leq(p, must_contain)
                       or componentwise_leq(must_contain, p))]
        target = pts.index(must_contain)

    chosen: list[GridPoint] = []

    def walk(start: int, have_target: bool) -> Iterator[Antichain]:
        if have_target or target is None:
            yield Antichain(k, n, tuple(chosen), grid=True)
        for i in range(start, len(pts)):
            if target is not None and not have_target and i > target:
                break
            p = pts[i]
            if any(componentwise_leq(p, c) or componentwise_leq(c, p) for c in chosen):
                continue
            chosen.append(p)
            yield from walk(i + 1, have_target or i == target)
            chosen.pop()

    return walk(0, False)


def format_antichain(s: Antichain) -> str:
    """One-line text form, elements like (1,2,7,8) separated by spaces."""
    return " ".join("(" + ",".join(map(str, e)) + ")" for e in s.elements)


def parse_antichain(text: str, k: int, n: int, grid: bool = False) -> Antichain:
    """Parse the one-line antichain format; a blank line is the empty antichain."""
    elems = []
    for tok in text.split():
        if not (tok.startswith("(") and tok.endswith(")")):
            raise ValueError(f"bad antichain element: {tok!r}")
        body = tok[1:-1]
        elems.append(tuple(int(p) for p in body.split(",")) if body else ())
    return Antichain(k, n, tuple(elems), grid=grid)
