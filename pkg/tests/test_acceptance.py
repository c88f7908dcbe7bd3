"""Acceptance gate: the full criteria list with stated time budgets.

Each test is one criterion; the conftest summary hook prints one PASS or
FAIL line per criterion at the end of the run.  Time budgets use
perf_counter around exactly the work the criterion names.
"""

from __future__ import annotations

import random
import time
from functools import lru_cache

import fixtures as fx
from surfacemaps import (
    SimplicialVertexMap,
    TriangulatedSurface,
    automorphisms,
    build_polygon,
    build_sum_high,
    build_sum_low,
    compose,
    connected_sum,
    constant_map,
    construct,
    degree,
    degree_bound,
    degree_spectrum,
    euler_characteristic,
    f_vector,
    genus,
    is_orientable,
    orient,
    reverse_orientation,
    sigma2_10v,
    split_triangle_with_edge,
    surface_from_dict,
    surface_to_dict,
    torus7,
    validate_closed_surface,
    vertex_lower_bound,
)

POLYGON_GRID = [(g, s * d) for g in (1, 2, 3) for d in range(2 * g - 1, 2 * g + 3) for s in (1, -1)]
SUM_HIGH_GRID = [(2, 0), (3, 0), (3, 1), (4, 2)]
SUM_LOW_GRID = [(2, 1), (3, 1), (3, 2), (5, 4)]


@lru_cache(maxsize=None)
def polygon_bundle(g, d):
    return build_polygon(g, d)


@lru_cache(maxsize=None)
def sum_high_bundle(g, i):
    return build_sum_high(g, i)


@lru_cache(maxsize=None)
def sum_low_bundle(g, i):
    return build_sum_low(g, i)


def all_construction_bundles():
    out = [polygon_bundle(g, d) for g, d in POLYGON_GRID]
    out += [sum_high_bundle(g, i) for g, i in SUM_HIGH_GRID]
    out += [sum_low_bundle(g, i) for g, i in SUM_LOW_GRID]
    out.append(sigma2_10v())
    return out


def test_c01_torus7_fixture_valid_fast():
    """f-vector (7,21,14), chi 0, genus 1, orientable, valid; < 1 ms."""
    best = float("inf")
    for _ in range(5):
        fresh = TriangulatedSurface.from_facets(
            [tuple(f) for f in fx.TORUS7_FACETS], positive_reference=fx.TORUS7_REFERENCE
        )
        t0 = time.perf_counter()
        ok = validate_closed_surface(fresh).ok
        fv = f_vector(fresh).as_tuple()
        chi = euler_characteristic(fresh)
        orientable = is_orientable(fresh)
        g = genus(fresh)
        elapsed = time.perf_counter() - t0
        assert ok and fv == (7, 21, 14) and chi == 0 and orientable and g == 1
        best = min(best, elapsed)
    assert best < 0.001, f"fixture checks took {best * 1000:.3f} ms"


def test_c02_orientation_sign_of_v1_v3_v4():
    """With [v1,v2,v4] positive, ascending [v1,v3,v4] has sign -1."""
    o = orient(torus7())
    assert o.sign(("v1", "v2", "v4")) == 1
    assert o.sign(("v1", "v3", "v4")) == -1


def test_c03_automorphism_group_of_torus7():
    """Exactly 42, closed under composition, all degree +1, equal to the printed list; < 1 s."""
    t0 = time.perf_counter()
    autos = automorphisms(torus7())
    assert len(autos) == 42
    keys = {tuple(sorted(f.assignment.items())) for f in autos}
    for f in autos:
        assert degree(f).degree == 1
        for g in autos:
            composite = compose(f, g)
            assert tuple(sorted(composite.assignment.items())) in keys
    printed = {
        tuple(sorted(fx.parse_numeric_cycles(text).items()))
        for text in fx.TORUS7_AUTOMORPHISM_CYCLES
    }
    assert keys == printed
    assert time.perf_counter() - t0 < 1.0


def test_c04_exhaustive_self_maps_exclude_degree_minus_one():
    """Full enumeration: no degree -1 self-map; reversed reference gives -1; < 30 s."""
    t0 = time.perf_counter()
    report = degree_spectrum(torus7(), torus7())
    assert report.total_maps == fx.TORUS7_SELF_MAP_COUNT
    assert -1 not in report.achievable_degrees
    assert report.achievable_degrees == (0, 1)
    rev = reverse_orientation(torus7())
    flipped = SimplicialVertexMap.build(rev, torus7(), {v: v for v in rev.vertices})
    assert degree(flipped).degree == -1
    assert time.perf_counter() - t0 < 30.0


def test_c05_polygon_grid_counts_and_uniform_signs():
    """g in 1..3, |d| in 2g-1..2g+2 both signs: counts, genus, degree, uniform per-target signs; < 5 s."""
    t0 = time.perf_counter()
    for g, d in POLYGON_GRID:
        bundle = polygon_bundle(g, d)
        fv = f_vector(bundle.surface)
        assert fv.vertices == 7 * abs(d) + 2 - 2 * g
        assert fv.facets == 14 * abs(d)
        assert genus(bundle.surface) == g
        assert bundle.report.degree == d
        for c in bundle.report.per_triangle:
            assert {c.positive_count, c.negative_count} == ({abs(d), 0} if d else {0})
            assert c.positive_count + c.negative_count == abs(d)
    assert time.perf_counter() - t0 < 5.0


def test_c06_minimal_genus2_fixtures_and_13_vertex_bound():
    """sigma2_10v is (10,36,24) of degree 1 with (2,1) at [v2,v6,v7]; construct(2,2) needs 13 >= 13 > 12."""
    bundle = sigma2_10v()
    assert f_vector(bundle.surface).as_tuple() == (10, 36, 24)
    assert bundle.report.degree == 1
    c = bundle.report.count_for(("v2", "v6", "v7"))
    assert (c.positive_count, c.negative_count) == (2, 1)
    two = construct(2, 2)
    bound = vertex_lower_bound(2, 2)
    assert f_vector(two.surface).vertices == 13
    assert 13 >= bound.refined > bound.formula == 12
    assert bound.refined == 13


def test_c07_sum_high_grid_and_pinned_degenerates():
    """(g,i) grid vertex counts 6(g+i)+1, degree g+i; (2,0) degenerates land on [v3,v4]; < 5 s."""
    t0 = time.perf_counter()
    for g, i in SUM_HIGH_GRID:
        bundle = sum_high_bundle(g, i)
        assert f_vector(bundle.surface).vertices == 6 * (g + i) + 1
        assert genus(bundle.surface) == g
        assert bundle.report.degree == g + i
    bundle = sum_high_bundle(2, 0)
    degenerate = [
        facet
        for facet in bundle.surface.facets
        if len({bundle.vertex_map.assignment[v] for v in facet}) < 3
    ]
    assert len(degenerate) == 2
    for facet in degenerate:
        assert {bundle.vertex_map.assignment[v] for v in facet} == {"v3", "v4"}
    assert time.perf_counter() - t0 < 5.0


def test_c08_sum_low_grid():
    """(g,i) grid vertex counts 6g-2i+1, genus g, degree g-i; < 5 s."""
    t0 = time.perf_counter()
    for g, i in SUM_LOW_GRID:
        bundle = sum_low_bundle(g, i)
        assert f_vector(bundle.surface).vertices == 6 * g - 2 * i + 1
        assert genus(bundle.surface) == g
        assert bundle.report.degree == g - i
    assert time.perf_counter() - t0 < 5.0


def test_c09_fifty_composable_pairs_multiplicative():
    """degree(g o f) = degree(g) * degree(f) over 50 sampled composable pairs."""
    rng = random.Random(20260823)
    torus = torus7()
    autos = automorphisms(torus)
    self_pool: list[SimplicialVertexMap] = list(autos)
    self_pool += [constant_map(torus, torus, v) for v in torus.vertices]
    into_pool: list[SimplicialVertexMap] = list(self_pool)
    for g, d in [(1, 1), (1, -1), (2, 2), (2, -2), (3, 1), (2, 3), (3, 4), (2, 1)]:
        into_pool.append(construct(g, d).vertex_map)
    checked = 0
    while checked < 50:
        f = rng.choice(into_pool)
        g = rng.choice(self_pool)
        composite = compose(f, g)
        assert degree(composite).degree == degree(f).degree * degree(g).degree
        checked += 1
    assert checked == 50


def test_c10_degree_bounds_and_constructed_maps_respect_them():
    """degree_bound: (2,2) bound 1, (3,2) bound 2, (2,3) zero-only, (g,1) unbounded; all builds comply."""
    assert degree_bound(2, 2).kind == "bounded" and degree_bound(2, 2).bound == 1
    assert degree_bound(2, 2).allows(1) and degree_bound(2, 2).allows(-1) and degree_bound(2, 2).allows(0)
    assert not degree_bound(2, 2).allows(2)
    assert degree_bound(3, 2).bound == 2
    assert degree_bound(2, 3).kind == "zero-only"
    for g in range(1, 7):
        assert degree_bound(g, 1).kind == "all-integers"
    for bundle in all_construction_bundles():
        g1 = genus(bundle.surface)
        g2 = genus(bundle.vertex_map.codomain)
        assert degree_bound(g1, g2).allows(bundle.report.degree)


def test_c11_property_suites():
    """alg-constancy on all builds; 100 random sums and splits; round trips on all fixtures."""
    for bundle in all_construction_bundles():
        algs = {c.alg for c in bundle.report.per_triangle}
        assert algs == {bundle.report.degree}

    rng = random.Random(97)
    pool = [
        torus7(),
        TriangulatedSurface.from_facets(fx.TETRAHEDRON_FACETS),
        sigma2_10v().surface,
        polygon_bundle(1, 2).surface,
        sum_low_bundle(2, 1).surface,
    ]
    for _ in range(100):
        a = rng.choice(pool)
        b = rng.choice(pool)
        b = b.relabel({v: f"r_{v}" for v in b.vertices})
        s = connected_sum(a, b, rng.choice(a.facets), rng.choice(b.facets))
        assert validate_closed_surface(s).ok
        assert f_vector(s).vertices == f_vector(a).vertices + f_vector(b).vertices - 3
        assert f_vector(s).facets == f_vector(a).facets + f_vector(b).facets - 2
        assert genus(s) == genus(a) + genus(b)

    for _ in range(100):
        base = rng.choice(pool)
        out = split_triangle_with_edge(base, rng.choice(base.facets), "z_1", "z_2")
        assert validate_closed_surface(out).ok
        assert euler_characteristic(out) == euler_characteristic(base)

    fixtures = pool + [construct(2, 2).surface, sum_high_bundle(3, 1).surface]
    for s in fixtures:
        assert surface_from_dict(surface_to_dict(s)) == s
