"""Simplicial complexes stored by their maximal faces.

A face is a strictly increasing tuple of positive integer vertex labels;
the empty tuple is the empty face.  A complex is either *void* (no faces
at all) or non-void; the non-void complex whose only face is the empty
face is the *empty complex*.  The two are distinct values and every
operation here defines its behaviour on both.  All values are immutable
and all operations are pure functions.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

Face = tuple[int, ...]
FVector = tuple[int, ...]
HVector = tuple[int, ...]


def face(vertices: Iterable[int]) -> Face:
    """Canonical face: strictly increasing tuple of positive labels."""
    vs = tuple(sorted(vertices))
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise ValueError(f"duplicate vertex in face: {vs}")
    if vs and vs[0] <= 0:
        raise ValueError(f"vertex labels must be positive: {vs}")
    return vs


@dataclass(frozen=True)
class Complex:
    """A simplicial complex; ``maximal_faces is None`` encodes the void complex."""

    maximal_faces: frozenset[Face] | None

    def __post_init__(self) -> None:
        if self.maximal_faces is None:
            return
        for f in self.maximal_faces:
            face(f)
        # containment can only happen across different facet sizes
        by_len: dict[int, list[set[int]]] = {}
        for f in self.maximal_faces:
            by_len.setdefault(len(f), []).append(set(f))
        sizes = sorted(by_len)
        for i, small in enumerate(sizes):
            for big in sizes[i + 1:]:
                for sf in by_len[small]:
                    if any(sf <= bf for bf in by_len[big]):
                        raise ValueError("maximal faces must not contain one another")

    @staticmethod
    def void() -> "Complex":
        return Complex(None)

    @staticmethod
    def empty() -> "Complex":
        return Complex(frozenset({()}))

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "Complex":
        """Complex generated by the given faces; an empty collection gives void."""
        fs = {face(f) for f in facets}
        if not fs:
            return cls.void()
        keep: list[Face] = []
        kept_sets: list[set[int]] = []
        for f in sorted(fs, key=lambda t: (-len(t), t)):
            sf = set(f)
            if not any(len(ks) > len(sf) and sf <= ks for ks in kept_sets):
                keep.append(f)
                kept_sets.append(sf)
        return cls(frozenset(keep))

    @property
    def is_void(self) -> bool:
        return self.maximal_faces is None

    @property
    def is_empty(self) -> bool:
        return self.maximal_faces == frozenset({()})

    @property
    def dimension(self) -> int:
        if self.maximal_faces is None:
            raise ValueError("void complex has no dimension")
        return max(len(f) for f in self.maximal_faces) - 1

    @property
    def is_pure(self) -> bool:
        if self.maximal_faces is None:
            return True
        return len({len(f) for f in self.maximal_faces}) == 1

    @property
    def facets(self) -> tuple[Face, ...]:
        if self.maximal_faces is None:
            raise ValueError("void complex has no facets")
        return tuple(sorted(self.maximal_faces))

    @property
    def vertices(self) -> tuple[int, ...]:
        if self.maximal_faces is None:
            raise ValueError("void complex has no vertices")
        return tuple(sorted({v for f in self.maximal_faces for v in f}))

    def __contains__(self, f: Iterable[int]) -> bool:
        if self.maximal_faces is None:
            return False
        sf = set(f)
        return any(sf.issubset(m) for m in self.maximal_faces)

    def __repr__(self) -> str:
        if self.maximal_faces is None:
            return "Complex(VOID)"
        if self.is_empty:
            return "Complex(EMPTY)"
        return f"Complex({len(self.maximal_faces)} facets, dim {self.dimension})"


def all_faces(c: Complex, k: int) -> frozenset[Face]:
    """Every face of dimension at most k (the k-skeleton as a face set)."""
    if c.is_void:
        raise ValueError("void has no faces")
    if k < -1:
        raise ValueError(f"skeleton dimension must be >= -1, got {k}")
    out: set[Face] = {()}
    for m in c.maximal_faces:
        for size in range(1, min(len(m), k + 1) + 1):
            out.update(combinations(m, size))
    return frozenset(out)


def link(c: Complex, t: Iterable[int]) -> Complex:
    """Link of the face t: all faces disjoint from t whose union with t is in c."""
    t = face(t)
    if t not in c:
        raise ValueError("not a face")
    st = set(t)
    # maximal faces of the link are exactly M \ t over maximal M containing t
    return Complex(frozenset(
        tuple(v for v in m if v not in st)
        for m in c.maximal_faces if st.issubset(m)))


def antistar(c: Complex, t: Iterable[int]) -> Complex:
    """All faces of c not containing t, presented by maximal faces."""
    if c.is_void:
        raise ValueError("void has no faces")
    t = face(t)
    st = set(t)
    if not st:
        return Complex.void()  # every face contains the empty face
    candidates: set[Face] = set()
    for m in c.maximal_faces:
        if st.issubset(m):
            # maximal subsets of m avoiding t drop one element of t each
            for v in t:
                candidates.add(tuple(w for w in m if w != v))
        else:
            candidates.add(m)
    return Complex.from_facets(candidates)


def join(a: Complex, b: Complex) -> Complex:
    """Join of two complexes on disjoint vertex sets."""
    if a.is_void or b.is_void:
        return Complex.void()
    va, vb = set(a.vertices), set(b.vertices)
    if va & vb:
        raise ValueError(f"join requires disjoint vertex sets, shared: {sorted(va & vb)}")
    return Complex(frozenset(
        tuple(sorted(fa + fb)) for fa in a.maximal_faces for fb in b.maximal_faces))


def complement(a: Complex, g: Complex) -> Complex:
    """Subcomplex of a generated by the facets of a that are not facets of g.

    g must be a full-dimensional pure subcomplex of a (the void complex is
    allowed and removes nothing).  The result is void when every facet is
    removed.
    """
    if g.is_void:
        return a
    if a.is_void:
        raise ValueError("g not full-dimensional subcomplex")
    if not (a.is_pure and g.is_pure and a.dimension == g.dimension):
        raise ValueError("g not full-dimensional subcomplex")
    if not g.maximal_faces <= a.maximal_faces:
        raise ValueError("g not full-dimensional subcomplex")
    remaining = a.maximal_faces - g.maximal_faces
    if not remaining:
        return Complex.void()
    return Complex(remaining)


def intersect(a: Complex, b: Complex) -> Complex:
    """Intersection of two complexes as face sets, by maximal faces."""
    if a.is_void or b.is_void:
        return Complex.void()
    common = all_faces(a, a.dimension) & all_faces(b, b.dimension)
    verts = {v for f in common for v in f}
    # a common face is maximal iff no one-vertex extension is common
    keep = [f for f in common
            if not any(v not in f and tuple(sorted(f + (v,))) in common for v in verts)]
    return Complex(frozenset(keep))


def f_vector(c: Complex) -> FVector:
    """Face counts (f_{-1}, f_0, ..., f_{d-1}); f_{-1} = 1 always."""
    if c.is_void:
        raise ValueError("void has no faces")
    counts = Counter(len(f) for f in all_faces(c, c.dimension))
    return tuple(counts[i] for i in range(c.dimension + 2))


def h_vector(f: FVector, d: int) -> HVector:
    """h-vector of a (d-1)-dimensional complex from its f-vector.

    Defined by sum_j h_j t^(d-j) = sum_i f_{i-1} (t-1)^(d-i); requires f to
    carry entries f_{-1} .. f_{d-1}.
    """
    if len(f) != d + 1:
        raise ValueError(f"length mismatch: need {d + 1} entries f_-1..f_{d - 1}, got {len(f)}")
    return tuple(
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1))


def ridge_facets(c: Complex) -> dict[Face, tuple[Face, ...]]:
    """Map each ridge (codimension-1 face) to the facets containing it."""
    if c.is_void:
        raise ValueError("void has no faces")
    if not c.is_pure:
        raise ValueError("ridge counting requires a pure complex")
    d = c.dimension
    if d < 0:
        raise ValueError("no ridges in the empty complex")
    out: dict[Face, list[Face]] = {}
    for m in c.facets:
        for r in combinations(m, d):
            out.setdefault(r, []).append(m)
    return {r: tuple(ms) for r, ms in out.items()}


def boundary_complex(b: Complex) -> Complex:
    """Boundary of a pure complex by the ridge rule.

    A ridge is a boundary face iff it lies in exactly one facet; the result
    is generated by the boundary ridges.  Returns the empty complex when
    there are none (a closed pseudomanifold) and raises when a ridge lies
    in three or more facets.
    """
    incidence = ridge_facets(b)
    for r, ms in incidence.items():
        if len(ms) > 2:
            raise ValueError("not a pseudomanifold")
    bd = [r for r, ms in incidence.items() if len(ms) == 1]
    if not bd:
        return Complex.empty()
    return Complex(frozenset(bd))


def _gf2_rank(columns: list[int]) -> int:
    """Rank over GF(2) of a matrix given as column bitmasks."""
    basis: dict[int, int] = {}
    for v in columns:
        while v:
            h = v.bit_length() - 1
            if h in basis:
                v ^= basis[h]
            else:
                basis[h] = v
                break
    return len(basis)


def z2_reduced_betti(c: Complex) -> tuple[int, ...]:
    """Reduced mod-2 Betti numbers in dimensions -1 .. dim(c).

    Computed from the ranks of the boundary matrices of the reduced chain
    complex (the empty face spans the (-1)-chains).
    """
    if c.is_void:
        raise ValueError("void has no faces")
    dim = c.dimension
    by_dim: list[list[Face]] = [[] for _ in range(dim + 2)]
    for f in all_faces(c, dim):
        by_dim[len(f)].append(f)
    for fs in by_dim:
        fs.sort()
    index = [{f: i for i, f in enumerate(fs)} for fs in by_dim]
    # ranks[i+1] = rank of the boundary map from i-faces to (i-1)-faces
    ranks = [0] * (dim + 3)
    for i in range(0, dim + 1):
        rows = index[i]  # (i-1)-faces have i vertices
        cols = []
        for f in by_dim[i + 1]:
            mask = 0
            for sub in combinations(f, i):
                mask |= 1 << rows[sub]
            cols.append(mask)
        ranks[i + 1] = _gf2_rank(cols)
    betti = []
    for i in range(-1, dim + 1):
        n_faces = len(by_dim[i + 1])
        betti.append(n_faces - ranks[i + 1] - ranks[i + 2])
    return tuple(betti)


_HEADER = re.compile(r"^complex d=(\d+) n=(\d+)$")


def format_complex(c: Complex) -> str:
    """Facet-list text format; the inverse of parse_complex."""
    if c.is_void:
        return "VOID\n"
    if c.is_empty:
        return "EMPTY\n"
    if not c.is_pure:
        raise ValueError("facet-list format requires a pure complex")
    d = c.dimension + 1
    n = c.vertices[-1]
    lines = [f"complex d={d} n={n}"]
    lines.extend(" ".join(map(str, f)) for f in c.facets)
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> Complex:
    """Parse the facet-list text format."""
    lines = text.splitlines()
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise ValueError("empty facet file")
    if lines[0] == "VOID":
        return Complex.void()
    if lines[0] == "EMPTY":
        return Complex.empty()
    m = _HEADER.match(lines[0])
    if m is None:
        raise ValueError(f"bad header line: {lines[0]!r}")
    d, n = int(m.group(1)), int(m.group(2))
    facets = []
    for ln in lines[1:]:
        f = face(int(tok) for tok in ln.split())
        if len(f) != d:
            raise ValueError(f"facet {f} does not have {d} vertices")
        if f[-1] > n:
            raise ValueError(f"facet {f} exceeds declared n={n}")
        facets.append(f)
    if not facets:
        raise ValueError("header present but no facets")
    return Complex(frozenset(facets))


boundary_complex = lru_cache(maxsize=4096)(boundary_complex)
z2_reduced_betti = lru_cache(maxsize=4096)(z2_reduced_betti)
