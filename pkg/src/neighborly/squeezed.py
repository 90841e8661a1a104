"""Squeezed balls from antichains of pair facets, and their relative variants.

The squeezed ball of an antichain S collects every pair facet in the order
ideal of S; filtering the ideal by a minimum label m gives the ball B(S, m).
Removing the ball of a strictly smaller antichain leaves a relative ball.
Relative balls split into blocks by leading pair, and consecutive blocks
meet in a join of a lower-order relative ball with a vertex; both of those
statements are checkable here rather than assumed.
"""

from __future__ import annotations

from .faces import Complex, Face, complement, intersect, join
from .posets import (
    Antichain,
    antichain_lt,
    grid_to_facet,
    ideal_with_min,
    max_slope_element,
    order_ideal,
    restrict,
    shift_down,
)


def _ideal_complex(s: Antichain, m: int = 1) -> Complex:
    """Complex on the min-filtered order ideal of s; void when the ideal is empty."""
    facets = ideal_with_min(s, m)
    if not facets:
        return Complex.void()
    return Complex(frozenset(facets))


def squeezed_ball(s: Antichain, m: int = 1) -> Complex:
    """Ball B(S, m): pair facets below some element of S with labels >= m."""
    if s.grid:
        raise ValueError("squeezed balls are built from pair-facet antichains")
    if not s.elements:
        raise ValueError("antichain must be non-empty")
    return _ideal_complex(s, m)


def relative_ball(s: Antichain) -> Complex:
    """Facets of the ball of S that are not in the ball of S shifted down."""
    return complement(squeezed_ball(s), _ideal_complex(shift_down(s)))


def relative_ball_general(s: Antichain, t: Antichain, i: int = 1) -> Complex:
    """Facets of B(S, i) not in B(T, i), for T strictly below S."""
    if not antichain_lt(t, s):
        raise ValueError("subtracted antichain must lie strictly below")
    b = _ideal_complex(s, i)
    if b.is_void:
        raise ValueError(f"ball of {s.elements} with minimum label {i} is void")
    return complement(b, _ideal_complex(t, i))


def block_D(s: Antichain, t: Antichain, j: int) -> Complex:
    """Facets of the relative ball whose leading pair starts at j."""
    if not antichain_lt(t, s):
        raise ValueError("subtracted antichain must lie strictly below")
    if s.k < 1:
        raise ValueError("blocks need at least one pair")
    rel = order_ideal(s) - order_ideal(t)
    block = frozenset(x for x in rel if x[0] == j)
    if not block:
        return Complex.void()
    return Complex(block)


def block_Gamma(s: Antichain, t: Antichain, j: int, l: int) -> Complex:
    """Tails common to the blocks at j and j+1, after an initial run of length 2l.

    Collects the pair facets H at or after j+2l+1 with [j+1, j+2l] + H below S
    but [j, j+2l-1] + H not below T; these are the tails along which the two
    blocks meet.
    """
    if not 1 <= l <= s.k:
        raise ValueError(f"run length parameter must be in 1..{s.k}, got {l}")
    if not antichain_lt(t, s):
        raise ValueError("subtracted antichain must lie strictly below")
    upper = restrict(s, (j + 1, j + 2 * l))
    lower = restrict(t, (j, j + 2 * l - 1))
    a = _ideal_complex(upper, j + 2 * l + 1)
    g = _ideal_complex(lower, j + 2 * l + 1)
    if a.is_void:
        return Complex.void()
    return complement(a, g)


def verify_decomposition(s: Antichain, i: int = 1) -> bool:
    """Check that B(S, i) splits by leading pair into joined lower-order balls.

    Each facet with leading pair [j, j+1] should arise as that pair joined
    with a facet of the ball of the restriction of S at [j, j+1], filtered
    to labels >= j+2.  Compares facet sets exactly.
    """
    if not s.elements:
        raise ValueError("antichain must be non-empty")
    if i < 1:
        raise ValueError(f"minimum label must be at least 1, got {i}")
    direct = set(ideal_with_min(s, i))
    pieced: set[Face] = set()
    for j in range(i, s.n):
        tails = restrict(s, (j, j + 1))
        if not tails.elements:
            continue
        piece = _ideal_complex(tails, j + 2)
        if piece.is_void:
            continue
        edge = Complex(frozenset({(j, j + 1)}))
        pieced.update(join(piece, edge).facets)
    return direct == pieced


def _union(parts: list[Complex]) -> Complex:
    facets: set[Face] = set()
    for p in parts:
        if not p.is_void:
            facets.update(p.maximal_faces)
    if not facets:
        return Complex.void()
    return Complex(frozenset(facets))


def verify_intersection_formula(s: Antichain, t: Antichain, j: int) -> bool:
    """Check both stated forms of the intersection of consecutive blocks.

    The blocks at j and j+1 must meet in the join of a vertex at j+1 with a
    relative ball of tails, and equally in the union over run lengths of the
    common-tail complexes joined with initial segments.  Raises when the
    block at j+1 is void, since the statement presumes it is not.
    """
    dj = block_D(s, t, j)
    dj1 = block_D(s, t, j + 1)
    if dj1.is_void:
        raise ValueError("hypothesis of lemma violated")
    lhs = intersect(dj, dj1)

    upper = restrict(s, (j + 1, j + 2))
    lower = restrict(t, (j, j + 1))
    a = _ideal_complex(upper, j + 2)
    g = _ideal_complex(lower, j + 2)
    tails = Complex.void() if a.is_void else complement(a, g)
    vertex = Complex(frozenset({(j + 1,)}))
    rhs_join = Complex.void() if tails.is_void else join(tails, vertex)

    parts = []
    for l in range(1, s.k + 1):
        gam = block_Gamma(s, t, j, l)
        if gam.is_void:
            continue
        segment = Complex(frozenset({tuple(range(j + 1, j + 2 * l))}))
        parts.append(join(gam, segment))
    rhs_union = _union(parts)

    return lhs == rhs_join and lhs == rhs_union


def facet_count_relative(s: Antichain) -> int:
    """Number of facets of the relative ball, certified by an explicit bijection.

    Translating each grid point of the relative ideal so its first coordinate
    becomes 1 must biject onto the ideal of the single distinguished grid
    point; the count is also cross-checked against the built relative ball.
    """
    g = max_slope_element(s.k, s.n)
    pf = s.to_pair_facets()
    if grid_to_facet(g) not in pf.elements:
        raise ValueError("antichain must contain the maximal-slope element")
    a = s.to_grid()
    upper = order_ideal(a)
    lower = order_ideal(shift_down(a))
    band = upper - lower
    image = {tuple(v - (x[0] - 1) for v in x) for x in band}
    target = order_ideal(Antichain(s.k, s.n, (g,), grid=True))
    if len(image) != len(band) or image != target:
        raise RuntimeError("translation bijection failed on the relative ideal")
    built = relative_ball(pf)
    count = 0 if built.is_void else len(built.maximal_faces)
    if count != len(band):
        raise RuntimeError("relative ideal size disagrees with the built ball")
    return len(band)
