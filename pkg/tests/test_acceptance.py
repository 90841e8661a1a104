"""Nine end-to-end acceptance checks, one test and one printed verdict line each.

Run with -s to see the verdict lines and the per-instance shelling log;
under plain pytest the per-criterion pass/fail is the test outcome itself.
"""

import time
from itertools import combinations
from math import comb

from neighborly.construct import census_counts, collect_census, sew
from neighborly.cyclic import cyclic_boundary
from neighborly.faces import (
    all_faces,
    boundary_complex,
    complement,
    f_vector,
    h_vector,
    intersect,
    link,
    z2_reduced_betti,
)
from neighborly.posets import (
    Antichain,
    antichain_lt,
    componentwise_leq,
    enumerate_antichains,
    format_antichain,
    grid_points,
    max_slope_element,
    shift_down,
)
from neighborly.squeezed import (
    block_D,
    facet_count_relative,
    relative_ball,
    relative_ball_general,
    verify_decomposition,
    verify_intersection_formula,
)
from neighborly.verify import (
    find_shelling,
    is_i_neighborly,
    is_r_stacked,
    is_shelling,
    k2_shelling,
)

from oracles import (
    antichain_count_bitmask,
    antichain_count_powerset,
    boundary_ridge_count,
    closure_faces,
)

# every (k, n) ambient the facet-count criterion ranges over
AMBIENTS = tuple((2, n) for n in range(6, 13)) + tuple((3, n) for n in range(8, 12))

S28 = Antichain(2, 8, ((1, 2, 7, 8), (3, 4, 6, 7)))
REL_FACETS = frozenset({
    (1, 2, 6, 7), (1, 2, 7, 8), (2, 3, 6, 7), (3, 4, 5, 6), (3, 4, 6, 7)})

_BALLS = {}
_SPHERES = {}


def family_balls(k, n):
    """(antichain, relative ball) for every antichain through the distinguished point."""
    if (k, n) not in _BALLS:
        g = max_slope_element(k, n)
        out = []
        for a in enumerate_antichains(k, n, must_contain=g):
            s = a.to_pair_facets()
            out.append((s, relative_ball(s)))
        _BALLS[(k, n)] = out
    return _BALLS[(k, n)]


def family_spheres(k, n):
    """The same family with each ball sewn into the even cyclic boundary."""
    if (k, n) not in _SPHERES:
        delta = cyclic_boundary(2 * k, n)
        _SPHERES[(k, n)] = [
            (s, b, sew(delta, b, n + 1)) for s, b in family_balls(k, n)]
    return _SPHERES[(k, n)]


def verdict(num, label, ok, detail):
    line = f"CRITERION {num} ({label}): {'PASS' if ok else 'FAIL'} [{detail}]"
    print(line)
    assert ok, line


def faces_of(c):
    if c.is_void:
        return set()
    return closure_faces(c.facets)


def test_criterion_1_worked_example():
    t0 = time.perf_counter()
    shifted = shift_down(S28)
    ball = relative_ball(S28)
    order = ((1, 2, 7, 8), (1, 2, 6, 7), (2, 3, 6, 7), (3, 4, 6, 7), (3, 4, 5, 6))
    ok = (
        shifted.elements == ((2, 3, 5, 6),)
        and ball.maximal_faces == REL_FACETS
        and is_r_stacked(ball, 1).verdict is True
        and is_i_neighborly(ball, 1, range(1, 9)).verdict is True
        and is_shelling(ball, order).verdict is True
    )
    took = time.perf_counter() - t0
    verdict(1, "worked example", ok and took < 1.0, f"{took:.3f}s < 1s")


def test_criterion_2_facet_count_law():
    t0 = time.perf_counter()
    balls = 0
    ok = True
    for k, n in AMBIENTS:
        want = comb(n - k - 1, k - 1)
        for s, b in family_balls(k, n):
            balls += 1
            ok = ok and len(b.maximal_faces) == want
            ok = ok and facet_count_relative(s) == want
    took = time.perf_counter() - t0
    verdict(2, "facet-count law", ok and took < 60.0,
            f"{balls} balls over {len(AMBIENTS)} ambients; {took:.2f}s < 60s")


def test_criterion_3_stacked_neighborly_equivalences():
    checked = 0
    ok = True
    for k, n in AMBIENTS:
        for s, b in family_balls(k, n):
            checked += 1
            # the stackedness certificate raises if its two routes disagree
            ok = ok and is_r_stacked(b, k - 1).verdict is True
            ok = ok and is_i_neighborly(b, k - 1, range(1, n + 1)).verdict is True
            h = h_vector(f_vector(b), 2 * k)
            ok = ok and all(
                h[i] == comb(n - 2 * k + i - 1, i) for i in range(k))
            ok = ok and all(h[i] == 0 for i in range(k, 2 * k + 1))
    verdict(3, "h-vector equivalences", ok, f"{checked} balls")


def _decomposition_pairs(k, ns, cap):
    """Ordered antichain pairs (S, T) with T strictly below S, evenly thinned."""
    pairs = []
    for n in ns:
        chains = list(enumerate_antichains(k, n))
        for s in chains:
            if not s.elements:
                continue
            for t in chains:
                if antichain_lt(t, s):
                    pairs.append((n, s.to_pair_facets(), t.to_pair_facets()))
    step = max(1, len(pairs) // cap)
    return pairs[::step]


def _check_decomposition_pair(n, s, t):
    checks = 0
    rel = relative_ball_general(s, t, 1)
    blocks = {j: block_D(s, t, j) for j in range(1, n)}
    union = set()
    for d in blocks.values():
        if not d.is_void:
            union |= d.maximal_faces
    assert union == rel.maximal_faces, (s.elements, t.elements)
    for j in range(1, n - 1):
        if blocks[j + 1].is_void:
            continue
        assert verify_intersection_formula(s, t, j), (s.elements, t.elements, j)
        checks += 1
        prev = set()
        for i in range(1, j + 1):
            cur = faces_of(intersect(blocks[j + 1], blocks[i]))
            assert prev <= cur, (s.elements, t.elements, j, i)
            prev = cur
    return checks


def test_criterion_4_decomposition_lemmas():
    t0 = time.perf_counter()
    pairs = checks = 0

    seen = set()
    for n, s, t in _decomposition_pairs(2, range(4, 10), cap=10 ** 9):
        if (n, s.elements) not in seen:
            seen.add((n, s.elements))
            for i in range(1, n + 1):
                assert verify_decomposition(s, i), (s.elements, i)
                checks += 1
        checks += _check_decomposition_pair(n, s, t)
        pairs += 1

    seen.clear()
    for n, s, t in _decomposition_pairs(3, range(6, 11), cap=600):
        if (n, s.elements) not in seen:
            seen.add((n, s.elements))
            for i in range(1, n + 1):
                assert verify_decomposition(s, i), (s.elements, i)
                checks += 1
        checks += _check_decomposition_pair(n, s, t)
        pairs += 1

    took = time.perf_counter() - t0
    verdict(4, "decomposition lemmas", took < 300.0,
            f"{pairs} pairs, {checks} lemma checks; {took:.2f}s < 300s")


def test_criterion_5_boundary_and_census_distinctness():
    ok = True
    detail = []
    for n in range(6, 11):
        boundaries = set()
        spheres = set()
        rests = set()
        delta = cyclic_boundary(4, n)
        for s, b, sphere in family_spheres(2, n):
            boundaries.add(boundary_complex(b).maximal_faces)
            spheres.add(sphere.maximal_faces)
            rests.add(complement(delta, b).maximal_faces)
        count = len(family_balls(2, n))
        ok = ok and len(boundaries) == len(spheres) == len(rests) == count
        detail.append(f"n={n}:{count}")
    verdict(5, "pairwise distinctness", ok, " ".join(detail))


def test_criterion_6_sewing_correctness():
    from neighborly.verify import sphere_sanity

    ok = True
    checked = 0
    for n in (6, 7, 8):
        edges = set(combinations(range(1, n + 2), 2))
        for s, b, sphere in family_spheres(2, n):
            checked += 1
            ok = ok and sphere_sanity(sphere).verdict is True
            ok = ok and edges <= all_faces(sphere, 1)
            ok = ok and link(sphere, (n + 1,)) == boundary_complex(b)

    famous = dict((s, (b, sphere)) for s, b, sphere in family_spheres(2, 8))
    b, sphere = famous[S28]
    ridge_count = boundary_ridge_count(b.facets)
    ok = ok and ridge_count == 12
    ok = ok and len(sphere.maximal_faces) == 20 - 5 + ridge_count == 27
    verdict(6, "sewing correctness", ok, f"{checked} spheres; 20-5+{ridge_count}=27")


def test_criterion_7_counting_cross_validation():
    ok = True
    for k, n in ((1, 3), (1, 11), (1, 21), (2, 6), (2, 7), (2, 8)):
        pts = grid_points(k, n)
        assert len(pts) <= 20
        fast = sum(1 for _ in enumerate_antichains(k, n))
        ok = ok and fast == antichain_count_bitmask(pts, componentwise_leq)
        if len(pts) <= 16:
            ok = ok and fast == antichain_count_powerset(pts, componentwise_leq)

    for parity, k, n in (("even", 2, 6), ("even", 2, 7), ("odd", 3, 8), ("odd", 3, 9)):
        got = len(collect_census(parity, k, n))
        want = sum(1 for _ in enumerate_antichains(
            k, n, must_contain=max_slope_element(k, n)))
        ok = ok and got == want

    rows = census_counts(2, range(6, 11)) + census_counts(3, range(8, 12))
    ok = ok and all(r[3] for r in rows)
    verdict(7, "counting cross-validation", ok, f"{len(rows)} bound rows")


def test_criterion_8_shellings():
    ok = True
    closed_form = 0
    for n in range(4, 11):
        for a in enumerate_antichains(2, n):
            if not a.elements:
                continue
            s = a.to_pair_facets()
            order = k2_shelling(s, shift_down(s))
            ok = ok and is_shelling(relative_ball(s), order).verdict is True
            closed_form += 1

    searched = 0
    for n in range(6, 11):
        for s, b in family_balls(3, n):
            if len(b.maximal_faces) > 15:
                continue
            cert = find_shelling(b)
            outcome = {True: "shellable", False: "refuted", None: "inconclusive"}[cert.verdict]
            print(f"  find_shelling k=3 n={n} S={format_antichain(s)} "
                  f"({len(b.maximal_faces)} facets): {outcome}")
            ok = ok and cert.verdict is True
            ok = ok and is_shelling(b, cert.witness).verdict is True
            searched += 1
    verdict(8, "shellability", ok,
            f"{closed_form} closed-form orders, {searched} searched balls")


def test_criterion_9_homology_sanity():
    ok = True
    checked = 0
    for k, n in AMBIENTS:
        ball_pattern = (0,) * (2 * k + 1)
        bd_pattern = (0,) * (2 * k - 1) + (1,)
        sphere_pattern = (0,) * (2 * k) + (1,)
        for s, b, sphere in family_spheres(k, n):
            checked += 1
            ok = ok and z2_reduced_betti(b) == ball_pattern
            ok = ok and z2_reduced_betti(boundary_complex(b)) == bd_pattern
            ok = ok and z2_reduced_betti(sphere) == sphere_pattern
    verdict(9, "homology sanity", ok, f"{checked} ball/boundary/sphere triples")
