import random
from fractions import Fraction

import pytest

from oracles import random_integer_matrix
from toricnef import catalog
from toricnef.lattice import (
    determinant,
    dot,
    in_row_span,
    kernel_basis,
    positively_spans,
    primitive,
    rank,
    smith_normal_form,
    solve,
)


def test_primitive_divides_by_gcd():
    assert primitive((2, 4, 6)) == (1, 2, 3)


def test_primitive_keeps_already_primitive_vector():
    assert primitive((-2, -1, -1)) == (-2, -1, -1)


def test_primitive_rejects_zero():
    with pytest.raises(ValueError, match="zero vector has no primitive representative"):
        primitive((0, 0, 0))


def test_primitive_clears_denominators():
    assert primitive((Fraction(1, 2), Fraction(3, 4))) == (2, 3)


def test_primitive_idempotent():
    rng = random.Random(7)
    for _ in range(100):
        v = tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 5)))
        if all(x == 0 for x in v):
            continue
        assert primitive(primitive(v)) == primitive(v)


def test_determinant_identity():
    assert determinant([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 1


def test_determinant_cone_of_example_fan():
    # cofactor expansion by hand: 1 * ((1)(-1) - (0)(-1)) = -1
    assert determinant([(1, 0, 0), (0, 1, 0), (0, -1, -1)]) == -1


def test_determinant_dependent_rows():
    assert determinant([(1, 0, 0), (2, 0, 0), (0, 0, 1)]) == 0


def test_determinant_requires_square():
    with pytest.raises(ValueError, match="square"):
        determinant([(1, 0, 0), (0, 1, 0)])


def test_determinant_multiplicative():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 4)
        a = random_integer_matrix(rng, n)
        b = random_integer_matrix(rng, n)
        ab = [tuple(dot(ra, col) for col in zip(*b)) for ra in a]
        assert determinant(ab) == determinant(a) * determinant(b)


def test_snf_identity():
    diag, _, _ = smith_normal_form([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert diag == [1, 1, 1]


def test_snf_already_diagonal():
    diag, _, _ = smith_normal_form([(2, 0), (0, 4)])
    assert diag == [2, 4]


def test_snf_simplex_ray_matrix():
    # row reduction by hand gives rank 3 with unit invariant factors
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    diag, _, _ = smith_normal_form(rays)
    assert diag == [1, 1, 1]
    assert len(rays) - sum(1 for d in diag if d) == 1


def _matmul(a, b):
    return [tuple(dot(ra, col) for col in zip(*b)) for ra in a]


def _check_snf(m):
    diag, u, v = smith_normal_form(m)
    assert determinant(u) in (1, -1)
    assert determinant(v) in (1, -1)
    product = _matmul(_matmul(u, m), v)
    for i, row in enumerate(product):
        for j, x in enumerate(row):
            assert x == (diag[i] if i == j and i < len(diag) else 0)
    for a, b in zip(diag, diag[1:]):
        if b != 0:
            assert a != 0 and b % a == 0


def test_snf_reconstruction_random():
    rng = random.Random(23)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [tuple(rng.randint(-6, 6) for _ in range(cols)) for _ in range(rows)]
        _check_snf(m)


def test_snf_reconstruction_catalog_ray_matrices():
    for name, params in catalog.ci_instances():
        _check_snf(list(catalog.get(name, **params).rays))


def test_positively_spans_axes():
    vs = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    assert positively_spans(vs)


def test_positively_spans_orthant_only():
    assert not positively_spans([(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_positively_spans_first_five_example_rays():
    f = catalog.get("example1")
    assert positively_spans(f.rays[:5])


def test_positively_spans_empty():
    assert not positively_spans([])
    assert positively_spans([], dim=0)


def test_positively_spans_all_catalog_ray_sets():
    # complete fans must have positively spanning rays
    for name, params in catalog.ci_instances():
        f = catalog.get(name, **params)
        assert positively_spans(f.rays), name


def test_kernel_and_rank():
    rows = [(1, 0, -1), (0, 1, -1)]
    assert rank(rows, 3) == 2
    (k,) = kernel_basis(rows, 3)
    assert k == (1, 1, 1)


def test_in_row_span():
    rows = [(1, 0, 0), (0, 1, 0)]
    assert in_row_span(rows, (2, -3, 0))
    assert not in_row_span(rows, (0, 0, 1))


def test_solve_exact():
    assert solve([(2, 0), (0, 4)], (1, 1)) == (Fraction(1, 2), Fraction(1, 4))
