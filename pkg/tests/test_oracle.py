import warnings
from itertools import permutations

import pytest

from fanoscheme import FanoProblem, LinearForm, SparsePoly, degree_dm, degree_theorem2, naive_coefficient
from fanoscheme.invariants import build_integrand, integrand_factors
from fanoscheme.oracle import staircase
from fanoscheme.polyring import coefficient

from _grid import small_grid


@pytest.mark.parametrize(
    "args, degree",
    [((3, (3,), 1), 27), ((4, (4,), 1), 320), ((6, (2, 2, 2), 1), 128), ((4, (5,), 1), 2875)],
)
def test_degree_dm(args, degree):
    assert degree_dm(FanoProblem(*args)) == degree


def test_degree_dm_negative_delta():
    with pytest.raises(ValueError):
        degree_dm(FanoProblem(4, (9,), 1))


def test_naive_cubic_surface():
    p = FanoProblem(3, (3,), 1)
    assert naive_coefficient(integrand_factors(p), None, (3, 3)) == 54
    forms = [LinearForm(a) for a in [(3, 0), (2, 1), (1, 2), (0, 3)]]
    diffs = [LinearForm((1, -1))]
    assert naive_coefficient(forms + diffs, None, (3, 2)) == 27


def test_naive_trivial():
    assert naive_coefficient([LinearForm((1, 1))], None, (1, 0)) == 1
    assert naive_coefficient([LinearForm((1, -1)), LinearForm((-1, 1))], None, (1, 1)) == 2
    assert naive_coefficient([LinearForm((1, -1)), LinearForm((-1, 1))], None, (2, 0)) == -1


def test_naive_extra_power():
    s = LinearForm((1, 1, 1))
    assert naive_coefficient([], (s, 2), (1, 1, 0)) == 2
    assert naive_coefficient([LinearForm((1, 0, 0))], (s, 2), (2, 1, 0)) == 2


def test_naive_degree_mismatch_warns():
    with pytest.warns(RuntimeWarning):
        assert naive_coefficient([LinearForm((1, 1))], None, (1, 1)) == 0


def test_sparse_poly_drops_zeros():
    s = SparsePoly.one(2).mul_linear(LinearForm((1, -1))).mul_linear(LinearForm((1, 1)))
    assert s.terms == {(2, 0): 1, (0, 2): -1}


@pytest.mark.parametrize("problem", small_grid(), ids=str)
def test_dense_matches_naive(problem):
    v = problem.num_vars
    for ordered, target in [(True, (problem.n,) * v), (False, staircase(problem))]:
        forms = integrand_factors(problem, ordered_pairs=ordered)
        dense = coefficient(build_integrand(problem, forms), target)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert dense == naive_coefficient(forms, None, target)


@pytest.mark.parametrize("problem", small_grid(), ids=str)
def test_naive_permutation_covariant(problem):
    forms = integrand_factors(problem, ordered_pairs=False)
    target = staircase(problem)
    base = naive_coefficient(forms, None, target)
    for perm in permutations(range(problem.num_vars)):
        moved = [LinearForm(tuple(f.coeffs[i] for i in perm)) for f in forms]
        assert naive_coefficient(moved, None, tuple(target[i] for i in perm)) == base


@pytest.mark.parametrize("problem", small_grid(), ids=str)
def test_dm_equals_theorem2_small(problem):
    assert degree_dm(problem) == degree_theorem2(problem)
