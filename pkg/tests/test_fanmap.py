import random

import pytest

from toricnef import catalog
from toricnef.divisor import (
    Divisor,
    ample_divisor,
    is_nef,
    is_trivial_class,
    principal_divisor,
)
from toricnef.fan import star_subdivision, validate
from toricnef.fanmap import (
    fan_map,
    identity_matrix,
    image_lattice_index,
    is_fan_map,
    is_refinement,
    pullback,
    weighted_projective_weights,
)

ID3 = identity_matrix(3)


def test_identity_is_fan_map():
    f = catalog.get("example1")
    assert is_fan_map(ID3, f, f)


def test_projection_to_plane_fan():
    f = catalog.get("8-14p", a=0)
    assert is_fan_map(catalog.PROJ_XY, f, catalog.get("p2"))


def test_x_projection_of_example1_is_not_a_fan_map():
    # cone <v1,v3,v6> has x-images 1, 0, -2, spanning both signs
    f = catalog.get("example1")
    assert not is_fan_map(catalog.PROJ_X, f, catalog.get("p1"))


def test_fan_map_factory_rejects_incompatible():
    f = catalog.get("example1")
    with pytest.raises(ValueError, match="not a map of fans"):
        fan_map(catalog.PROJ_X, f, catalog.get("p1"))
    with pytest.raises(ValueError, match="matrix must be"):
        is_fan_map(((1, 0), (0, 1)), f, f)


def test_refinement_of_subdivided_fan():
    assert is_refinement(catalog.get("example1"), catalog.get("example1-sigma"))


def test_refinement_of_simplex_fan():
    f = catalog.get("8-5pp")
    target = catalog.simplex_fan([f.rays[i] for i in (0, 2, 3, 6)])
    assert is_refinement(f, target)


def test_coarser_does_not_refine_finer():
    assert not is_refinement(catalog.get("example1-sigma"), catalog.get("example1"))
    assert not is_refinement(catalog.get("p3"), catalog.get("example1"))


def test_refinement_requires_equal_dimension():
    with pytest.raises(ValueError, match="equal ambient dimension"):
        is_refinement(catalog.get("p2"), catalog.get("p3"))


def test_refinement_with_incomplete_supports():
    wedge = validate(2, [(1, 0), (0, 1)], [(0, 1)])
    split = validate(2, [(1, 0), (0, 1), (1, 1)], [(0, 2), (1, 2)])
    assert is_refinement(split, wedge)
    assert not is_refinement(wedge, split)
    quarter_less = validate(2, [(1, 0), (1, 1)], [(0, 1)])
    assert not is_refinement(quarter_less, wedge)


def test_pullback_of_zero_is_zero():
    f = catalog.get("example1")
    fm = fan_map(ID3, f, catalog.get("example1-sigma"))
    assert pullback(fm, Divisor((0,) * 6)).coeffs == (0,) * 8


def test_pullback_along_identity_is_identity():
    f = catalog.get("example1")
    fm = fan_map(ID3, f, f)
    d = Divisor((1, 0, -2, 3, 1, 1, 0, 2))
    assert pullback(fm, d).coeffs == d.coeffs


def test_pullback_composition_along_subdivision_chain():
    sigma = catalog.get("example1-sigma")
    mid = star_subdivision(sigma, (-1, -1, -1))
    delta = catalog.get("example1")
    to_mid = fan_map(ID3, delta, mid)
    to_sigma_from_mid = fan_map(ID3, mid, sigma)
    to_sigma = fan_map(ID3, delta, sigma)
    rng = random.Random(99)
    for _ in range(20):
        d = Divisor(tuple(rng.randint(-3, 3) for _ in sigma.rays))
        assert pullback(to_sigma, d) == pullback(to_mid, pullback(to_sigma_from_mid, d))


def test_pullback_hyperplane_from_simplex_fan():
    f = catalog.get("8-5pp")
    target = catalog.simplex_fan([f.rays[i] for i in (0, 2, 3, 6)])
    fm = fan_map(ID3, f, target)
    pb = pullback(fm, Divisor((1, 0, 0, 0)))
    assert is_nef(f, pb)
    assert not is_trivial_class(f, pb)


def test_pullback_ample_from_plane_fan():
    f = catalog.get("8-14p", a=1)
    fm = fan_map(catalog.PROJ_XY, f, catalog.get("p2"))
    pb = pullback(fm, Divisor((1, 0, 0)))
    assert is_nef(f, pb)
    assert not is_trivial_class(f, pb)


def test_pullback_preserves_nef_randomly():
    rng = random.Random(5)
    cases = [
        ("8-11", {}, catalog.PROJ_XY, catalog.get("p112-blowup")),
        ("8-13pp", {}, catalog.PROJ_X, catalog.get("p1")),
        ("8-14p", {}, catalog.PROJ_XY, catalog.get("p2")),
        ("8-14pp", {}, catalog.PROJ_X, catalog.get("p1")),
    ]
    for name, params, matrix, target in cases:
        src = catalog.get(name, **params)
        fm = fan_map(matrix, src, target)
        nef_seen = 0
        for _ in range(60):
            d = Divisor(tuple(rng.randint(0, 3) for _ in target.rays))
            if not is_nef(target, d):
                continue
            nef_seen += 1
            assert is_nef(src, pullback(fm, d))
        assert nef_seen > 5, name


def test_pullback_preserves_triviality():
    src = catalog.get("8-14p", a=2)
    target = catalog.get("p2")
    fm = fan_map(catalog.PROJ_XY, src, target)
    for u in ((1, 0), (0, 1), (2, -3)):
        d = principal_divisor(target, u)
        assert is_trivial_class(target, d)
        assert is_trivial_class(src, pullback(fm, d))


def test_pullback_of_ample_from_weighted_target_needs_multiple():
    f = catalog.get("8-8")
    target = catalog.simplex_fan([f.rays[i] for i in (0, 1, 4, 6)])
    fm = fan_map(ID3, f, target)
    amp = ample_divisor(target)
    pb = pullback(fm, amp)
    assert pb.is_integral()
    assert is_nef(f, pb)
    assert not is_trivial_class(f, pb)


def test_weighted_projective_weights_simplex():
    assert weighted_projective_weights(catalog.get("p3").rays) == (1, 1, 1, 1)


def test_weighted_projective_weights_8_8_target():
    rays = [(0, 0, 1), (1, 0, 0), (0, 1, 0), (-1, -2, -2)]
    assert weighted_projective_weights(rays) == (1, 1, 2, 2)


def test_weighted_projective_weights_plane():
    assert weighted_projective_weights([(1, 0), (0, 1), (-1, -2)]) == (1, 1, 2)


def test_weighted_projective_weights_degenerate():
    with pytest.raises(ValueError, match="degenerate"):
        weighted_projective_weights([(1, 0), (0, 1), (1, 1)])
    with pytest.raises(ValueError, match="expected"):
        weighted_projective_weights([(1, 0), (0, 1)])


def test_image_lattice_index():
    assert image_lattice_index(catalog.PROJ_XY) == 1
    assert image_lattice_index(catalog.PROJ_X) == 1
    assert image_lattice_index(((2, 0), (0, 3))) == 6
    assert image_lattice_index(((1, 0), (2, 0))) == 0
