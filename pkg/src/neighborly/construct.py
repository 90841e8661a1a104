"""Sewing balls into spheres, and censuses of highly neighborly spheres.

Sewing replaces a full-dimensional ball inside a sphere by the cone over
the ball's boundary from a fresh vertex.  The even census runs over the
antichains through the distinguished grid point, builds each relative
ball inside the boundary of an even-dimensional cyclic polytope, and sews;
the odd census takes boundaries of the squeezed balls directly.  Every
entry carries certificates that are checked at generation time.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cyclic import cyclic_boundary
from .faces import Complex, boundary_complex, join
from .posets import Antichain, enumerate_antichains, max_slope_element
from .squeezed import relative_ball
from .verify import Certificate, ball_sanity, is_i_neighborly, is_r_stacked, sphere_sanity


@dataclass(frozen=True)
class CensusEntry:
    """One census item: the antichain, the ball, the sphere, its certificates."""

    antichain: Antichain
    ball: Complex
    sphere: Complex
    certificates: tuple[Certificate, ...]


def sew(delta: Complex, b: Complex, new_vertex: int) -> Complex:
    """Replace the ball b inside the sphere delta by the cone over its boundary.

    b must be a full-dimensional proper subcomplex of delta, both must pass
    their sanity checks, and the new vertex must be unused.  The result is
    itself checked to be a sphere candidate before it is returned.
    """
    sphere_cert = sphere_sanity(delta)
    if sphere_cert.verdict is not True:
        raise ValueError(f"ambient complex fails sphere sanity: {sphere_cert.witness}")
    ball_cert = ball_sanity(b)
    if ball_cert.verdict is not True:
        raise ValueError(f"patch fails ball sanity: {ball_cert.witness}")
    if not b.maximal_faces <= delta.maximal_faces:
        raise ValueError("patch facets must be facets of the ambient complex")
    if b.maximal_faces == delta.maximal_faces:
        raise ValueError("patch must be a proper subcomplex")
    if new_vertex in delta.vertices:
        raise ValueError(f"vertex {new_vertex} already present")
    cone = join(boundary_complex(b), Complex(frozenset({(new_vertex,)})))
    result = Complex((delta.maximal_faces - b.maximal_faces) | cone.maximal_faces)
    post = sphere_sanity(result)
    if post.verdict is not True:
        raise RuntimeError(f"sewing produced a non-sphere: {post.witness}")
    return result


def _even_entry(k: int, n: int, a: Antichain) -> CensusEntry:
    s = a.to_pair_facets()
    ball = relative_ball(s)
    sphere = sew(cyclic_boundary(2 * k, n), ball, n + 1)
    certs = (
        is_i_neighborly(ball, k - 1, range(1, n + 1)),
        is_r_stacked(ball, k - 1),
        is_i_neighborly(sphere, k, range(1, n + 2)),
        sphere_sanity(sphere),
    )
    if not all(c.verdict is True for c in certs):
        bad = [c.property for c in certs if c.verdict is not True]
        raise RuntimeError(f"certificates {bad} failed for antichain {s.elements}")
    return CensusEntry(s, ball, sphere, certs)


def _odd_entry(k: int, n: int, a: Antichain) -> CensusEntry:
    s = a.to_pair_facets()
    ball = relative_ball(s)
    sphere = boundary_complex(ball)
    certs = (
        is_i_neighborly(ball, k - 1, range(1, n + 1)),
        is_r_stacked(ball, k - 1),
        is_i_neighborly(sphere, k - 1, range(1, n + 1)),
        sphere_sanity(sphere),
    )
    if not all(c.verdict is True for c in certs):
        bad = [c.property for c in certs if c.verdict is not True]
        raise RuntimeError(f"certificates {bad} failed for antichain {s.elements}")
    return CensusEntry(s, ball, sphere, certs)


def _family(k: int, n: int) -> Iterator[Antichain]:
    return enumerate_antichains(k, n, must_contain=max_slope_element(k, n))


def even_census(k: int, n: int) -> Iterator[CensusEntry]:
    """Certified (2k-1)-spheres on [n+1] sewn from relative balls, k-neighborly."""
    if k < 2:
        raise ValueError(f"census needs k >= 2, got {k}")
    if n < 2 * k + 2:
        raise ValueError(f"census needs n >= 2k+2, got n={n}")
    for a in _family(k, n):
        yield _even_entry(k, n, a)


def odd_census(k: int, n: int) -> Iterator[CensusEntry]:
    """Certified (2k-2)-spheres on [n]: boundaries of the squeezed balls."""
    if k < 2:
        raise ValueError(f"census needs k >= 2, got {k}")
    if n < 2 * k:
        raise ValueError(f"census needs n >= 2k, got n={n}")
    for a in _family(k, n):
        yield _odd_entry(k, n, a)


def _job(args: tuple[str, int, int, tuple]) -> CensusEntry:
    parity, k, n, elements = args
    a = Antichain(k, n, elements, grid=True)
    return _even_entry(k, n, a) if parity == "even" else _odd_entry(k, n, a)


def collect_census(parity: str, k: int, n: int, jobs: int = 1) -> list[CensusEntry]:
    """Materialize a census, optionally fanning entries out over processes.

    Entry order matches the serial generators regardless of the job count.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    if jobs == 1:
        gen = even_census(k, n) if parity == "even" else odd_census(k, n)
        return list(gen)
    if parity == "even" and (k < 2 or n < 2 * k + 2):
        raise ValueError(f"census needs k >= 2 and n >= 2k+2, got k={k}, n={n}")
    if parity == "odd" and (k < 2 or n < 2 * k):
        raise ValueError(f"census needs k >= 2 and n >= 2k, got k={k}, n={n}")
    tasks = [(parity, k, n, a.elements) for a in _family(k, n)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_job, tasks))


def census_counts(k: int, n_range: Sequence[int]) -> list[tuple[int, int, int, bool]]:
    """Rows (n, census size, lower bound, size >= bound) for each n.

    The bound is the number of antichains of pair facets on a ground set
    shortened by 2k; a ground set too small for any pair facet contributes
    the single empty antichain.
    """
    rows = []
    for n in n_range:
        size = sum(1 for _ in _family(k, n))
        shortened = n - 2 * k
        if shortened < 2 * k:
            bound = 1
        else:
            bound = sum(1 for _ in enumerate_antichains(k, shortened))
        rows.append((n, size, bound, size >= bound))
    return rows
