"""Checkable certificates: neighborliness, stackedness, shellings, sanity.

Every check returns a Certificate carrying the property name, a verdict,
and a witness.  Verdicts are True/False for decided properties; the
shelling search may also return None when it runs out of budget, which is
inconclusive rather than a refutation.  Stackedness is decided two ways at
once (skeleton comparison and vanishing of the tail of the h-vector) and a
disagreement raises instead of picking a side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable

from .faces import (
    Complex,
    Face,
    all_faces,
    boundary_complex,
    f_vector,
    h_vector,
    ridge_facets,
    z2_reduced_betti,
)
from .posets import Antichain, antichain_lt, order_ideal, shift_down

ShellingOrder = tuple[Face, ...]


def _jsonable(value: Any) -> Any:
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class Certificate:
    """Outcome of one verification: property name, verdict, witness."""

    property: str
    verdict: bool | None
    witness: Any = None

    def as_dict(self) -> dict[str, Any]:
        return {
            "property": self.property,
            "verdict": self.verdict,
            "witness": _jsonable(self.witness),
        }


def is_i_neighborly(c: Complex, i: int, vertex_set: Iterable[int]) -> Certificate:
    """Does every i-subset of the vertex set span a face of c?"""
    if i < 1:
        raise ValueError(f"neighborliness degree must be at least 1, got {i}")
    verts = sorted(set(vertex_set))
    if c.is_void or not set(c.vertices) <= set(verts):
        raise ValueError("vertex set must contain the vertices of the complex")
    name = f"neighborly({i})"
    for sub in combinations(verts, i):
        if sub not in c:
            return Certificate(name, False, witness=sub)
    return Certificate(name, True)


def is_r_stacked(b: Complex, r: int) -> Certificate:
    """Is every face of dimension at most dim-r-1 a boundary face of the ball b?

    Decided by comparing skeleta of b and its boundary, and independently by
    h_i = 0 for i > r; the two must agree.
    """
    if b.is_void or not b.is_pure:
        raise ValueError("stackedness requires a pure non-void complex")
    if r < 0:
        raise ValueError(f"stackedness parameter must be >= 0, got {r}")
    bd = boundary_complex(b)
    if bd.is_empty:
        raise ValueError("closed complex")
    dim = b.dimension
    cut = dim - r - 1
    witness = None
    if cut < -1:
        by_skeleton = True
    else:
        inner = all_faces(b, cut)
        outer = all_faces(bd, cut)
        missing = inner - outer
        by_skeleton = not missing
        if missing:
            witness = min(missing, key=lambda f: (len(f), f))
    h = h_vector(f_vector(b), dim + 1)
    by_h = all(x == 0 for x in h[r + 1:])
    if by_skeleton != by_h:
        raise RuntimeError(
            f"stackedness checks disagree (skeleton {by_skeleton}, h-vector {by_h}, h={h})")
    return Certificate(f"stacked({r})", by_skeleton, witness=witness)


def _step_ok(new: Face, earlier: list[Face]) -> bool:
    """Shelling step: the part of `new` meeting earlier facets is pure of codim 1."""
    want = len(new) - 1
    snew = set(new)
    meets = {tuple(sorted(snew & set(f))) for f in earlier}
    best = [m for m in meets
            if not any(m is not o and set(m) < set(o) for o in meets)]
    return all(len(m) == want for m in best)


def is_shelling(c: Complex, order: Iterable[Face]) -> Certificate:
    """Check a proposed shelling order of the facets of a pure complex."""
    if c.is_void or not c.is_pure:
        raise ValueError("shellings are defined for pure non-void complexes")
    order = tuple(tuple(sorted(f)) for f in order)
    if sorted(order) != sorted(c.facets):
        raise ValueError("order is not a permutation of the facets")
    for idx in range(1, len(order)):
        if not _step_ok(order[idx], list(order[:idx])):
            return Certificate("shellable", False, witness=idx)
    return Certificate("shellable", True, witness=list(order))


class _Budget(Exception):
    pass


def find_shelling(c: Complex, budget: int = 1_000_000) -> Certificate:
    """Search for a shelling order by depth-first extension.

    Prefixes that use the same facet set succeed or fail together, so dead
    facet sets are memoized.  Exceeding the node budget yields verdict None;
    exhausting the search space without success is a genuine refutation.
    """
    if c.is_void or not c.is_pure:
        raise ValueError("shellings are defined for pure non-void complexes")
    facets = sorted(c.facets)
    total = len(facets)
    dead: set[frozenset[Face]] = set()
    nodes = 0

    def extend(used: frozenset[Face], prefix: list[Face]) -> bool:
        nonlocal nodes
        if len(prefix) == total:
            return True
        if used in dead:
            return False
        nodes += 1
        if nodes > budget:
            raise _Budget
        for f in facets:
            if f in used:
                continue
            if prefix and not _step_ok(f, prefix):
                continue
            prefix.append(f)
            if extend(used | {f}, prefix):
                return True
            prefix.pop()
        dead.add(used)
        return False

    prefix: list[Face] = []
    try:
        found = extend(frozenset(), prefix)
    except _Budget:
        return Certificate("shellable", None, witness=None)
    if found:
        return Certificate("shellable", True, witness=list(prefix))
    return Certificate("shellable", False, witness=None)


def k2_shelling(s: Antichain, t: Antichain) -> ShellingOrder:
    """Closed-form shelling of a two-pair relative ball, certified before return.

    Facets are grouped by leading pair and each group is emitted in reverse
    componentwise order, which for two pairs means descending second pair.
    """
    pf = s.to_pair_facets()
    pt = t.to_pair_facets()
    if pf.k != 2:
        raise ValueError(f"closed-form shelling applies to two pairs, got k={pf.k}")
    if not pf.elements:
        raise ValueError("antichain must be non-empty")
    if not antichain_lt(pt, pf):
        raise ValueError("subtracted antichain must lie strictly below")
    rel = order_ideal(pf) - order_ideal(pt)
    if not rel:
        raise ValueError("relative ball has no facets")
    order: list[Face] = []
    for j in sorted({x[0] for x in rel}):
        group = sorted((x for x in rel if x[0] == j), key=lambda x: -x[2])
        order.extend(group)
    cert = is_shelling(Complex(frozenset(rel)), order)
    if cert.verdict is not True:
        raise RuntimeError(f"constructed order is not a shelling at step {cert.witness}")
    return tuple(order)


def _connected(c: Complex) -> bool:
    """Facet-ridge connectivity of a pure complex."""
    facets = c.facets
    if len(facets) <= 1:
        return True
    adjacency: dict[Face, set[Face]] = {f: set() for f in facets}
    for ms in ridge_facets(c).values():
        for a, b in combinations(ms, 2):
            adjacency[a].add(b)
            adjacency[b].add(a)
    seen = {facets[0]}
    queue = [facets[0]]
    while queue:
        for nxt in adjacency[queue.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(facets)


def sphere_sanity(c: Complex) -> Certificate:
    """Necessary conditions for a sphere: closed pseudomanifold, connected,
    and the mod-2 homology of a sphere of its dimension."""
    name = "sphere-homology"
    if c.is_void:
        raise ValueError("void complex")
    if not c.is_pure:
        raise ValueError("sanity checks require a pure complex")
    if c.is_empty:
        return Certificate(name, True)  # boundary of a point
    for r, ms in ridge_facets(c).items():
        if len(ms) != 2:
            return Certificate(name, False,
                               witness={"ridge": r, "facet_count": len(ms)})
    if not _connected(c):
        return Certificate(name, False, witness={"reason": "disconnected"})
    betti = z2_reduced_betti(c)
    expected = (0,) * (len(betti) - 1) + (1,)
    if betti != expected:
        return Certificate(name, False, witness={"betti": betti})
    return Certificate(name, True)


def ball_sanity(c: Complex) -> Certificate:
    """Necessary conditions for a ball: pseudomanifold with non-empty boundary,
    connected, trivial mod-2 homology, and a boundary passing sphere_sanity."""
    name = "ball-homology"
    if c.is_void:
        raise ValueError("void complex")
    if not c.is_pure:
        raise ValueError("sanity checks require a pure complex")
    if c.is_empty:
        return Certificate(name, False, witness={"reason": "no facets of dimension >= 0"})
    boundary_seen = False
    for r, ms in ridge_facets(c).items():
        if len(ms) > 2:
            return Certificate(name, False,
                               witness={"ridge": r, "facet_count": len(ms)})
        boundary_seen = boundary_seen or len(ms) == 1
    if not boundary_seen:
        return Certificate(name, False, witness={"reason": "closed"})
    if not _connected(c):
        return Certificate(name, False, witness={"reason": "disconnected"})
    betti = z2_reduced_betti(c)
    if any(betti):
        return Certificate(name, False, witness={"betti": betti})
    sub = sphere_sanity(boundary_complex(c))
    if sub.verdict is not True:
        return Certificate(name, False, witness={"boundary": sub.as_dict()})
    return Certificate(name, True)
