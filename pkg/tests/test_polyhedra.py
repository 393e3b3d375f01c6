import random
from fractions import Fraction

import pytest

from oracles import brute_force_vertices
from toricnef import catalog
from toricnef.divisor import anticanonical, nef_system, polytope, principal_rows
from toricnef.lattice import dot, rank
from toricnef.polyhedra import (
    HCone,
    Polyhedron,
    cone_is_trivial_modulo,
    dd_convert,
    strict_feasible,
    vcone_contains,
    vertices,
    vrep,
)
from toricnef.report import _random_hcone, brute_force_extreme_rays


def test_dd_orthant():
    vc = dd_convert(HCone(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1))))
    assert vc.rays == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert vc.lineality == ()


def test_dd_halfplane():
    vc = dd_convert(HCone(2, ((1, 0),)))
    assert vc.rays == ((1, 0),)
    assert vc.lineality == ((0, 1),)


def test_dd_example1_nef_system_is_principal_subspace():
    f = catalog.get("example1")
    vc = dd_convert(nef_system(f))
    assert vc.rays == ()
    assert len(vc.lineality) == 3
    # the lineality equals the principal-divisor subspace
    pr = principal_rows(f)
    assert rank(list(pr), 8) == 3
    assert rank(list(pr) + list(vc.lineality), 8) == 3


def test_dd_normalizes_degenerate_rows():
    c = HCone(2, ((0, 0), (2, 0), (1, 0)))
    assert c.rows == ((1, 0), (1, 0))
    vc = dd_convert(c)
    assert vc.rays == ((1, 0),)


def test_dd_soundness_random():
    rng = random.Random(5150)
    for _ in range(120):
        cone = _random_hcone(rng)
        vc = dd_convert(cone)
        for r in vc.rays:
            assert all(dot(a, r) >= 0 for a in cone.rows)
        for l in vc.lineality:
            assert all(dot(a, l) == 0 for a in cone.rows)


def test_dd_matches_brute_force_oracle():
    rng = random.Random(47111)
    for _ in range(200):
        cone = _random_hcone(rng)
        assert list(dd_convert(cone).rays) == brute_force_extreme_rays(cone)


def test_trivial_modulo_point():
    assert cone_is_trivial_modulo(HCone(1, ((1,), (-1,))), [])


def test_trivial_modulo_orthant_false():
    assert not cone_is_trivial_modulo(HCone(2, ((1, 0), (0, 1))), [])


def test_trivial_modulo_example1():
    f = catalog.get("example1")
    assert cone_is_trivial_modulo(nef_system(f), principal_rows(f))


def test_trivial_modulo_rejects_outside_rows():
    with pytest.raises(ValueError, match="claimed lineality not contained in cone"):
        cone_is_trivial_modulo(HCone(2, ((1, 0), (0, 1))), [(-1, 0)])


def test_strict_feasible_orthant():
    assert strict_feasible(HCone(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1))))


def test_strict_feasible_opposite_pair():
    assert not strict_feasible(HCone(1, ((1,), (-1,))))


def test_strict_feasible_lemma_b_walls():
    assert not strict_feasible(nef_system(catalog.get("lemma-b")))


def test_strict_feasible_matches_homogenized_oracle():
    rng = random.Random(3301)
    for _ in range(80):
        cone = _random_hcone(rng)
        rows = [a + (-1,) for a in cone.rows] + [(0,) * cone.dim + (1,)]
        oracle = any(r[-1] > 0 for r in brute_force_extreme_rays(HCone(cone.dim + 1, tuple(rows))))
        assert strict_feasible(cone) == oracle


def test_vertices_unit_square():
    sq = Polyhedron(2, (((1, 0), 0), ((0, 1), 0), ((-1, 0), -1), ((0, -1), -1)))
    assert vertices(sq) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_vertices_zero_divisor_polytope():
    f = catalog.get("example1")
    from toricnef.divisor import Divisor

    assert vertices(polytope(f, Divisor((0,) * 8))) == [(0, 0, 0)]


# Vertex set of the anticanonical polytope of example1, frozen from the
# all-3-subsets oracle; note every support minimum equals -1 here even though
# the divisor is not nef, so minima alone cannot certify non-nefness.
EXAMPLE1_ANTICANONICAL_VERTICES = [
    (-1, -1, -1),
    (-1, -1, 2),
    (-1, 2, -1),
    (Fraction(-1, 2), 2, -1),
    (0, 0, 1),
    (0, 1, 0),
    (1, -1, -1),
    (1, -1, 0),
]


def test_vertices_anticanonical_polytope_matches_oracle():
    f = catalog.get("example1")
    p = polytope(f, anticanonical(f))
    got = vertices(p)
    assert got == brute_force_vertices(p)
    assert got == [tuple(Fraction(x) for x in v) for v in EXAMPLE1_ANTICANONICAL_VERTICES]
    assert min(dot(u, f.rays[2]) for u in got) == -1


def test_vertices_random_matches_oracle():
    rng = random.Random(98)
    count = 0
    for _ in range(60):
        dim = rng.randint(1, 3)
        n_ineq = rng.randint(dim, 7)
        ineqs = []
        while len(ineqs) < n_ineq:
            normal = tuple(rng.randint(-3, 3) for _ in range(dim))
            if any(normal):
                ineqs.append((normal, rng.randint(-3, 1)))
        p = Polyhedron(dim, tuple(ineqs))
        _, rec, lines = vrep(p)
        if lines:
            continue
        got = vertices(p)
        assert got == brute_force_vertices(p)
        count += 1
    assert count > 20


def test_vertices_round_trip_properties():
    f = catalog.get("lemma-b")
    p = polytope(f, anticanonical(f))
    verts = vertices(p)
    assert verts
    for u in verts:
        assert all(dot(a, u) >= b for a, b in p.inequalities)
        active = [a for a, b in p.inequalities if dot(a, u) == b]
        assert rank(active, p.dim) == p.dim


def test_vertices_rejects_lines():
    halfplane = Polyhedron(2, (((1, 0), 0),))
    with pytest.raises(ValueError, match="polyhedron contains a line"):
        vertices(halfplane)


def test_vertices_empty_polyhedron():
    empty = Polyhedron(1, (((1,), 1), ((-1,), 1)))
    assert vertices(empty) == []


def test_vcone_contains():
    vc = dd_convert(HCone(2, ((1, 0), (0, 1))))
    assert vcone_contains(vc, (3, 5))
    assert not vcone_contains(vc, (-1, 2))
