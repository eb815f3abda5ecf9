import numpy as np
import pytest

import gen
from tropsched.exceptions import PreconditionError
from tropsched.inequality import star
from tropsched.linalg import TropMatrix, TropVector, mat_mul
from tropsched.oracle import GridSpec, grid_min_objective
from tropsched.semifield import MAX_PLUS, MAX_TIMES, SemifieldValue
from tropsched.span import SpanProblem, objective, solve, solve_symmetric

N = -np.inf


def M(rows):
    return TropMatrix(MAX_PLUS, rows)


def v(entries):
    return TropVector(MAX_PLUS, entries)


@pytest.fixture
def CD(C, D):
    return mat_mul(C, star(D).star)


def test_objective_values(C, CD):
    assert objective(SpanProblem.symmetric(CD), v([-4, -3, -5])) == 2
    assert objective(SpanProblem.symmetric(C), v([-4, -3, -3])) == 0
    I = TropMatrix.identity(MAX_PLUS, 3)
    for alpha in (-3.0, 0.0, 11.0):
        assert objective(SpanProblem.symmetric(I), v([alpha] * 3)) == 0


def test_objective_rejects_irregular_x(C):
    with pytest.raises(PreconditionError):
        objective(SpanProblem.symmetric(C), v([0, N, 0]))


def test_solve_example_constrained(CD):
    sol = solve(SpanProblem.symmetric(CD))
    assert sol.delta == 2
    # full-width star: 1^T C D* = (4, 3, 5)
    assert sol.direction == v([-4, -3, -5])


def test_solve_example_reduced(C):
    sol = solve_symmetric(C)
    assert sol.delta == 0
    assert sol.direction == v([-4, -3, -3])


@pytest.mark.parametrize("n", range(1, 7))
def test_identity_case(n):
    sol = solve(SpanProblem.symmetric(TropMatrix.identity(MAX_PLUS, n)))
    assert sol.delta == 0
    assert sol.direction == TropVector.ones(MAX_PLUS, n)


def test_symmetric_two_by_two_matches_grid():
    A = M([[0, 2], [2, 0]])
    sol = solve_symmetric(A)
    # x = (c, c) gives A x = (c + 2, c + 2), so the span is 0; the grid agrees
    assert sol.delta == 0
    assert sol.direction == v([-2, -2])
    found = grid_min_objective(SpanProblem.symmetric(A), GridSpec(2, -3, 3))
    assert found.value == 0


@pytest.mark.parametrize(
    "P, hypothesis",
    [
        (SpanProblem(M([[N, N], [1, 2]]), M([[1, 2], [1, 2]]), v([0, 0]), v([0, 0])), "row_regular"),
        (SpanProblem(M([[1, 2], [1, 2]]), M([[N, 2], [N, 2]]), v([0, 0]), v([0, 0])), "column_regular"),
        (SpanProblem(M([[1, 2], [1, 2]]), M([[1, 2], [1, 2]]), v([N, N]), v([0, 0])), "nonzero"),
        (SpanProblem(M([[1, 2], [1, 2]]), M([[1, 2], [1, 2]]), v([0, 0]), v([0, N])), "regular"),
    ],
)
def test_precondition_errors(P, hypothesis):
    with pytest.raises(PreconditionError) as info:
        solve(P)
    assert info.value.hypothesis == hypothesis


def test_solve_symmetric_requires_regular():
    with pytest.raises(PreconditionError):
        solve_symmetric(M([[1, N], [2, N]]))


def test_general_problem_lower_bound_and_attainment(rng):
    for _ in range(200):
        P = gen.span_problem(rng)
        sol = solve(P)
        assert sol.delta.value > N
        assert objective(P, sol.direction) == sol.delta
        alpha = SemifieldValue(MAX_PLUS, float(rng.integers(-20, 21)))
        assert objective(P, sol.at(alpha)) == sol.delta
        for _ in range(20):
            x = gen.regular_vector(rng, P.n)
            assert objective(P, x) >= sol.delta


def test_oracle_equivalence_small(rng):
    for _ in range(60):
        P = gen.span_problem(rng, 3, 3, -5, 5)
        sol = solve(P)
        found = grid_min_objective(P, GridSpec(P.n, -15, 15))
        assert found.value == sol.delta.value


def test_max_times_problem():
    A = TropMatrix(MAX_TIMES, [[1, 4], [4, 1]])
    sol = solve_symmetric(A)
    assert sol.direction.entries == pytest.approx([0.25, 0.25])
    assert sol.delta.value == pytest.approx(1.0)
    assert objective(SpanProblem.symmetric(A), sol.direction).value == pytest.approx(1.0)
    # a non-collinear x does worse
    x = TropVector(MAX_TIMES, [1.0, 2.0])
    assert objective(SpanProblem.symmetric(A), x).value == pytest.approx(2.0)
